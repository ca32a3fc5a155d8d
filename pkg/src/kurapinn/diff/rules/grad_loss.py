import logging
import typing as T

import numpy as np

from kurapinn.diff.models.gradient_vector import GradientVector
from kurapinn.diff.models.traced_net import TracedNet
from kurapinn.diff.models.var import Var
from kurapinn.diff.rules.trace_params import trace_params
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.runtime.models.errors import NonFiniteError

logger = logging.getLogger(__name__)

LossFn = T.Callable[[TracedNet], Var]


def grad_loss(
    params: ParamSet, config: NetConfig, loss_fn: LossFn
) -> T.Tuple[float, GradientVector]:
    """Return the value of `loss_fn` and its exact gradient with respect to `params`.

    `loss_fn` receives the parameters on a fresh tape and must return a scalar Var.
    It may evaluate the network with input partials, in which case the gradient
    includes the derivative-of-derivative terms.
    """
    traced = trace_params(params, config, requires_grad=True)
    loss = loss_fn(traced)
    loss_value = float(loss.value)
    if not np.isfinite(loss_value):
        raise NonFiniteError(f"Non-finite loss: {loss_value}")

    if loss.requires_grad:
        loss.backward()

    chunks = []
    for var in traced.parameters():
        chunks.append(
            np.zeros(var.value.size) if var.grad is None else var.grad.ravel()
        )
    grad = np.concatenate(chunks)

    bad = np.flatnonzero(~np.isfinite(grad))
    if bad.size:
        raise NonFiniteError(
            f"Non-finite gradient component {bad[0]}", component=int(bad[0])
        )
    return loss_value, grad
