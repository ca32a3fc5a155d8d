import math

import numpy as np
from dataclassy import dataclass

from kurapinn.runtime.models.errors import ConfigError


@dataclass(frozen=True)
class QuadratureRule:
    """Uniform left-endpoint nodes φ_j = jΔφ on [0, 2π) with Δφ = 2π/N_q."""

    n_nodes: int = 128

    def __post_init__(self):
        if self.n_nodes < 1:
            raise ConfigError(f"Quadrature needs at least one node, got {self.n_nodes}")

    @property
    def delta(self) -> float:
        return 2 * math.pi / self.n_nodes

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n_nodes, dtype=np.float64) * self.delta
