import numpy as np

from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.rules.forward import forward_arrays
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule
from kurapinn.physics.rules.discrete_velocity import discrete_velocity


def velocity(
    params: ParamSet,
    config: NetConfig,
    spec: ProblemSpec,
    quad: QuadratureRule,
    theta: float,
    t: float,
) -> float:
    nodes = quad.nodes
    u_nodes = forward_arrays(params, config, nodes, np.full_like(nodes, t))
    return float(discrete_velocity(u_nodes, np.float64(theta), quad, spec.K))
