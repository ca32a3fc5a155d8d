import numpy as np
from dataclassy import dataclass


@dataclass(frozen=True, eq=False)
class ICSet:
    theta: np.ndarray
    seed: int
    rng_algorithm: str = "PCG64"

    @property
    def n_points(self) -> int:
        return int(self.theta.size)
