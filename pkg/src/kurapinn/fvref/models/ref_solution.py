import numpy as np
from dataclassy import dataclass

from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.physics.models.problem_spec import ProblemSpec

SCHEME = "finite-volume/global-lax-friedrichs/forward-euler"


@dataclass(eq=False)
class RefSolution:
    """Cell averages of the reference solution; values[j, n] is cell j at level n."""

    grid: FvGrid
    values: np.ndarray
    problem: ProblemSpec
    cfl: float = 0.9
    scheme: str = SCHEME
    negative_overshoot: bool = False
    n_substeps: int = 0

    @property
    def masses(self) -> np.ndarray:
        return self.values.sum(axis=0) * self.grid.dtheta
