import math

import numpy as np

from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.rules.initial_condition import DIRAC_CENTERS


def project_initial_condition(spec: ProblemSpec, grid: FvGrid) -> np.ndarray:
    """Exact cell averages of u0, from the closed-form antiderivative."""
    primitive = _antiderivative(spec, grid.edges)
    return np.diff(primitive) / grid.dtheta


def _antiderivative(spec: ProblemSpec, theta: np.ndarray) -> np.ndarray:
    lo, hi = math.pi / 2, 3 * math.pi / 2
    inside = np.clip(theta, lo, hi) - lo

    if spec.ic is InitialConditionKind.Polynomial:
        return 6 / math.pi**3 * (math.pi * inside**2 / 2 - inside**3 / 3)

    if spec.ic is InitialConditionKind.Piecewise:
        return theta / (3 * math.pi) + inside / (3 * math.pi)

    eps = spec.eps
    spikes = sum(
        (np.clip(theta, a - eps, a + eps) - (a - eps)) / (2 * eps) for a in DIRAC_CENTERS
    )
    return 0.25 * spikes + 0.5 * inside
