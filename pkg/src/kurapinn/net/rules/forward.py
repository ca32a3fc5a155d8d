import typing as T

import numpy as np

from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.utils.activations import activate
from kurapinn.runtime.models.errors import NonFiniteError


def forward(params: ParamSet, config: NetConfig, theta: float, t: float) -> float:
    return float(forward_arrays(params, config, np.array([theta]), np.array([t]))[0])


def forward_batch(
    params: ParamSet,
    config: NetConfig,
    points: T.Union[T.Sequence[T.Tuple[float, float]], np.ndarray],
) -> np.ndarray:
    points = np.asarray(points, dtype=np.float64)
    if points.size == 0:
        return np.zeros(0, dtype=np.float64)
    points = points.reshape(-1, 2)
    return forward_arrays(params, config, points[:, 0], points[:, 1])


def forward_arrays(
    params: ParamSet, config: NetConfig, theta: np.ndarray, t: np.ndarray
) -> np.ndarray:
    """Evaluate u_Φ at the points (theta[k], t[k]); returns an array shaped like theta."""
    theta = np.asarray(theta, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    if not (np.all(np.isfinite(theta)) and np.all(np.isfinite(t))):
        raise NonFiniteError("Non-finite network input", layer=0)

    h = np.stack([theta.ravel(), t.ravel()], axis=1)
    n_layers = params.n_layers
    for i, (w, b) in enumerate(zip(params.weights, params.biases), start=1):
        z = h @ w.T + b
        h = z if i == n_layers else activate(config.activation, z)
        if not np.all(np.isfinite(h)):
            raise NonFiniteError(f"Non-finite activation in layer {i}", layer=i)
    return h[:, 0].reshape(theta.shape)
