import math

import numpy as np


def transition_width(
    theta: np.ndarray,
    values: np.ndarray,
    jump_at: float,
    low: float,
    high: float,
    window: float = math.pi / 4,
) -> float:
    """Distance between the 25% and 75% crossings of a jump from `low` to `high`.

    Only samples within `window` of `jump_at` are considered. A jump from a high
    to a low value is handled by mirroring the values.
    """
    theta = np.asarray(theta, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if high < low:
        values, low, high = -values, -low, -high

    near = np.abs(theta - jump_at) <= window
    theta, values = theta[near], values[near]
    if theta.size < 2:
        return 0.0

    quarter = low + 0.25 * (high - low)
    three_quarters = low + 0.75 * (high - low)
    above_quarter = np.flatnonzero(values >= quarter)
    above_three_quarters = np.flatnonzero(values >= three_quarters)
    if above_quarter.size == 0 or above_three_quarters.size == 0:
        # The profile never reaches the jump levels: the jump is erased entirely
        return float(2 * window)
    return float(abs(theta[above_three_quarters[0]] - theta[above_quarter[0]]))
