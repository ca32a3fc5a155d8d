import math

import numpy as np

from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import DomainError

TWO_PI = 2 * math.pi
DIRAC_CENTERS = (3 * math.pi / 4, 5 * math.pi / 4)


def initial_condition(spec: ProblemSpec, theta: float) -> float:
    return float(initial_condition_array(spec, np.array([theta]))[0])


def initial_condition_array(spec: ProblemSpec, theta: np.ndarray) -> np.ndarray:
    theta = np.asarray(theta, dtype=np.float64)
    if np.any(~np.isfinite(theta)) or np.any(theta < 0.0) or np.any(theta > TWO_PI):
        raise DomainError("Initial condition is defined on [0, 2*pi] only")

    if spec.ic is InitialConditionKind.Polynomial:
        inside = (theta >= math.pi / 2) & (theta <= 3 * math.pi / 2)
        bump = 6 / math.pi**3 * (3 * math.pi / 2 - theta) * (theta - math.pi / 2)
        return np.where(inside, bump, 0.0)

    if spec.ic is InitialConditionKind.Piecewise:
        inside = (theta >= math.pi / 2) & (theta <= 3 * math.pi / 2)
        return np.where(inside, 2 / (3 * math.pi), 1 / (3 * math.pi))

    # Two mollified point masses of weight 1/4 on top of a plateau of height 1/2
    plateau = 0.5 * _heaviside(theta - math.pi / 2) * (
        1.0 - _heaviside(theta - 3 * math.pi / 2)
    )
    spikes = sum(_mollified_dirac(theta - a, spec.eps) for a in DIRAC_CENTERS)
    return 0.25 * spikes + plateau


def _heaviside(x: np.ndarray) -> np.ndarray:
    return np.where(x >= 0.0, 1.0, 0.0)


def _mollified_dirac(x: np.ndarray, eps: float) -> np.ndarray:
    return np.where(np.abs(x) < eps, 1.0 / (2 * eps), 0.0)
