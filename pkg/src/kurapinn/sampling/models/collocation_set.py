import numpy as np
from dataclassy import dataclass


@dataclass(frozen=True, eq=False)
class CollocationSet:
    theta: np.ndarray
    t: np.ndarray
    T: float
    seed: int
    rng_algorithm: str = "PCG64"

    @property
    def n_points(self) -> int:
        return int(self.theta.size)
