import typing as T

import numpy as np
from dataclassy import dataclass


@dataclass(eq=False)
class ErrorReport:
    energy_norm: float
    max_abs_error: float
    rms_per_level: np.ndarray
    n_eval: int
    times: T.Optional[np.ndarray] = None
    # Mean over stored levels of TV(prediction)/TV(reference)
    tv_ratio: T.Optional[float] = None
