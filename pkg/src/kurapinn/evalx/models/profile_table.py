import numpy as np
from dataclassy import dataclass


@dataclass(eq=False)
class ProfileTable:
    """values[k, n] = u_Φ(theta[k], t_values[n])."""

    theta: np.ndarray
    t_values: np.ndarray
    values: np.ndarray
