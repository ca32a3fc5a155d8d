import numpy as np

from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.rules.forward import forward_arrays

LEVELS_PER_CHUNK = 16


def predict_on_grid(params: ParamSet, config: NetConfig, grid: FvGrid) -> np.ndarray:
    """u_Φ at every (cell center, stored level), shaped (M, N_t) like RefSolution.values."""
    centers = grid.centers
    times = grid.times
    out = np.empty((grid.M, grid.n_levels), dtype=np.float64)
    for start in range(0, grid.n_levels, LEVELS_PER_CHUNK):
        levels = times[start : start + LEVELS_PER_CHUNK]
        theta, t = np.meshgrid(centers, levels, indexing="ij")
        out[:, start : start + levels.size] = forward_arrays(params, config, theta, t)
    return out
