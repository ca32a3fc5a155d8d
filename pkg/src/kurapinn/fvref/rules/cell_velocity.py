import numpy as np

from kurapinn.fvref.models.fv_grid import FvGrid


def cell_velocity(u: np.ndarray, grid: FvGrid, K: float) -> np.ndarray:
    """V_j = -K Σ_k sin(θ_j - θ_k) u_k Δθ with nodes at the cell centers.

    The sum is expanded as sin θ_j Σ cos θ_k u_k - cos θ_j Σ sin θ_k u_k, which is
    the same discrete convolution in O(M).
    """
    centers = grid.centers
    cos_moment = np.dot(np.cos(centers), u)
    sin_moment = np.dot(np.sin(centers), u)
    return -K * grid.dtheta * (np.sin(centers) * cos_moment - np.cos(centers) * sin_moment)
