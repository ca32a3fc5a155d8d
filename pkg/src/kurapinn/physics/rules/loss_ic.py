import typing as T

import numpy as np

from kurapinn.diff.models.traced_net import TracedNet
from kurapinn.diff.models.var import Var
from kurapinn.diff.rules.trace_params import trace_params
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.rules.initial_condition import initial_condition_array
from kurapinn.runtime.models.errors import DomainError


def loss_ic(
    params: ParamSet,
    config: NetConfig,
    spec: ProblemSpec,
    ic_points: T.Sequence[float],
) -> float:
    net = trace_params(params, config, requires_grad=False)
    return float(traced_loss_ic(net, spec, ic_points).value)


def traced_loss_ic(
    net: TracedNet, spec: ProblemSpec, ic_points: T.Sequence[float]
) -> Var:
    theta = np.asarray(ic_points, dtype=np.float64).ravel()
    if theta.size == 0:
        raise DomainError("Initial-condition loss needs at least one point")
    target = initial_condition_array(spec, theta)
    u = net.evaluate(theta, np.zeros_like(theta)).u
    return (u - target).square().mean()
