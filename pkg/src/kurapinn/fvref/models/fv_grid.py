import math

import numpy as np
from dataclassy import dataclass

from kurapinn.runtime.models.errors import ConfigError


@dataclass(frozen=True)
class FvGrid:
    M: int = 512
    n_levels: int = 205
    T: float = 1.0
    periodic: bool = True

    def __post_init__(self):
        if self.M < 8:
            raise ConfigError(f"Reference grid needs at least 8 cells, got {self.M}")
        if self.n_levels < 2:
            raise ConfigError(f"Need at least 2 stored time levels, got {self.n_levels}")
        if not self.T > 0:
            raise ConfigError(f"Final time must be > 0, got {self.T}")
        if not self.periodic:
            raise ConfigError("Only periodic reference grids are supported")

    @property
    def dtheta(self) -> float:
        return 2 * math.pi / self.M

    @property
    def edges(self) -> np.ndarray:
        return np.arange(self.M + 1, dtype=np.float64) * self.dtheta

    @property
    def centers(self) -> np.ndarray:
        return (np.arange(self.M, dtype=np.float64) + 0.5) * self.dtheta

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.T, self.n_levels)
