import math
import typing as T

import numpy as np

from kurapinn.evalx.models.profile_table import ProfileTable
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.rules.forward import forward_arrays
from kurapinn.runtime.models.errors import ConfigError


def profile(
    params: ParamSet,
    config: NetConfig,
    t_values: T.Sequence[float],
    M_plot: int,
) -> ProfileTable:
    if M_plot < 2:
        raise ConfigError(f"Need at least 2 plot points in theta, got {M_plot}")
    theta = np.linspace(0.0, 2 * math.pi, M_plot)
    t_values = np.asarray(t_values, dtype=np.float64)
    grid_theta, grid_t = np.meshgrid(theta, t_values, indexing="ij")
    values = forward_arrays(params, config, grid_theta, grid_t)
    return ProfileTable(theta=theta, t_values=t_values, values=values)
