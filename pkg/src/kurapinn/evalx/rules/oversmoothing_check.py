import math

import numpy as np

from kurapinn.evalx.models.oversmoothing_check import OversmoothingCheck
from kurapinn.evalx.rules.total_variation import total_variation
from kurapinn.evalx.rules.transition_width import transition_width
from kurapinn.runtime.models.errors import DomainError

PIECEWISE_LOW = 1 / (3 * math.pi)
PIECEWISE_HIGH = 2 / (3 * math.pi)
MIN_WIDTH_CELLS = 4.0
TV_BAND = (0.8, 3.0)


def oversmoothing_check(theta: np.ndarray, values: np.ndarray) -> OversmoothingCheck:
    """Measure how a t=0 profile renders the piecewise-constant jumps at π/2, 3π/2.

    The jump counts as oversmoothed when its 25%-75% transition spans more than
    four plot cells. The total variation is compared with the exact 2·(1/3π).
    """
    theta = np.asarray(theta, dtype=np.float64)
    if theta.size < 2:
        raise DomainError(f"Need at least 2 profile samples, got {theta.size}")
    cell = float(theta[1] - theta[0])
    width = max(
        transition_width(theta, values, math.pi / 2, PIECEWISE_LOW, PIECEWISE_HIGH),
        transition_width(theta, values, 3 * math.pi / 2, PIECEWISE_HIGH, PIECEWISE_LOW),
    )
    tv_ratio = total_variation(values) / (2 * (PIECEWISE_HIGH - PIECEWISE_LOW))
    return OversmoothingCheck(
        transition_width=width,
        width_in_cells=width / cell,
        tv_ratio=tv_ratio,
        oversmoothed=width / cell > MIN_WIDTH_CELLS,
        tv_in_band=TV_BAND[0] <= tv_ratio <= TV_BAND[1],
    )
