import typing as T

import numpy as np

from kurapinn.diff.models.gradient_vector import GradientVector
from kurapinn.diff.rules.grad_loss import grad_loss
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule
from kurapinn.physics.rules.loss_ic import traced_loss_ic
from kurapinn.physics.rules.loss_residual import loss_residual, residual_square_sum
from kurapinn.sampling.models.collocation_set import CollocationSet
from kurapinn.sampling.models.ic_set import ICSet
from kurapinn.training.models.train_config import TrainConfig


def compute_loss_and_grad(
    params: ParamSet,
    net_config: NetConfig,
    spec: ProblemSpec,
    train_config: TrainConfig,
    quad: QuadratureRule,
    colloc: CollocationSet,
    ic_set: ICSet,
) -> T.Tuple[float, float, GradientVector]:
    """L_res, L_IC and the gradient of λ_res·L_res + λ_IC·L_IC over the full sets.

    The residual term is accumulated over chunks of collocation points in a fixed
    order, each chunk on its own tape.
    """
    grad = np.zeros(net_config.param_count)

    if train_config.lambda_res > 0:
        l_res = 0.0
        scale = 1.0 / colloc.n_points
        size = train_config.chunk_size
        for start in range(0, colloc.n_points, size):
            theta = colloc.theta[start : start + size]
            t = colloc.t[start : start + size]
            value, chunk_grad = grad_loss(
                params,
                net_config,
                lambda net: residual_square_sum(net, spec, quad, theta, t) * scale,
            )
            l_res += value
            grad += train_config.lambda_res * chunk_grad
    else:
        l_res = loss_residual(
            params, net_config, spec, quad, colloc, chunk_size=train_config.chunk_size
        )

    l_ic, ic_grad = grad_loss(
        params, net_config, lambda net: traced_loss_ic(net, spec, ic_set.theta)
    )
    if train_config.lambda_ic > 0:
        grad += train_config.lambda_ic * ic_grad
    return l_res, l_ic, grad
