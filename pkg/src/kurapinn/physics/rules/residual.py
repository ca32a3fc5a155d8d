import numpy as np

from kurapinn.diff.rules.trace_params import trace_params
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule
from kurapinn.physics.rules.traced_residuals import traced_residuals

DEFAULT_CHUNK_SIZE = 256


def residual(
    params: ParamSet,
    config: NetConfig,
    spec: ProblemSpec,
    quad: QuadratureRule,
    theta: float,
    t: float,
) -> float:
    return float(
        residuals(params, config, spec, quad, np.array([theta]), np.array([t]))[0]
    )


def residuals(
    params: ParamSet,
    config: NetConfig,
    spec: ProblemSpec,
    quad: QuadratureRule,
    theta: np.ndarray,
    t: np.ndarray,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> np.ndarray:
    theta = np.asarray(theta, dtype=np.float64).ravel()
    t = np.asarray(t, dtype=np.float64).ravel()
    net = trace_params(params, config, requires_grad=False)
    chunks = [
        traced_residuals(
            net, spec, quad, theta[i : i + chunk_size], t[i : i + chunk_size]
        ).value
        for i in range(0, theta.size, chunk_size)
    ]
    return np.concatenate(chunks) if chunks else np.zeros(0)
