import numpy as np

from kurapinn.diff.models.traced_net import TracedNet
from kurapinn.diff.models.var import Var
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule
from kurapinn.physics.rules.residual import DEFAULT_CHUNK_SIZE, residuals
from kurapinn.physics.rules.traced_residuals import traced_residuals
from kurapinn.runtime.models.errors import DomainError
from kurapinn.sampling.models.collocation_set import CollocationSet


def loss_residual(
    params: ParamSet,
    config: NetConfig,
    spec: ProblemSpec,
    quad: QuadratureRule,
    colloc: CollocationSet,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> float:
    if colloc.n_points == 0:
        raise DomainError("Residual loss needs at least one collocation point")
    r = residuals(
        params, config, spec, quad, colloc.theta, colloc.t, chunk_size=chunk_size
    )
    return float(np.mean(r**2))


def residual_square_sum(
    net: TracedNet,
    spec: ProblemSpec,
    quad: QuadratureRule,
    theta: np.ndarray,
    t: np.ndarray,
) -> Var:
    # Summed rather than averaged so that chunks of one set can be accumulated
    return traced_residuals(net, spec, quad, theta, t).square().sum()
