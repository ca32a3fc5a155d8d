import typing as T

import numpy as np


def total_variation(samples: T.Sequence[float]) -> float:
    samples = np.asarray(samples, dtype=np.float64)
    if samples.size < 2:
        return 0.0
    return float(np.sum(np.abs(np.diff(samples))))
