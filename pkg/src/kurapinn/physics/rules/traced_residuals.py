import numpy as np

from kurapinn.diff.models.traced_net import TracedNet
from kurapinn.diff.models.var import Var
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule


def traced_residuals(
    net: TracedNet,
    spec: ProblemSpec,
    quad: QuadratureRule,
    theta: np.ndarray,
    t: np.ndarray,
) -> Var:
    """r = ∂t u + (∂θV) u + V ∂θu at every (theta[i], t[i]), on the tape.

    V and ∂θV use the network values at (φ_j, t[i]); the nodes do not move with θ,
    so ∂θV is the cosine-kernel sum. The N_q network evaluations per point stay on
    the tape so that the parameter gradient includes the velocity dependence.
    """
    theta = np.asarray(theta, dtype=np.float64).ravel()
    t = np.asarray(t, dtype=np.float64).ravel()
    n_points = theta.size
    nodes = quad.nodes

    point = net.evaluate(theta, t, with_partials=True)

    node_theta = np.tile(nodes, n_points)
    node_t = np.repeat(t, quad.n_nodes)
    u_nodes = net.evaluate(node_theta, node_t).u.reshape(n_points, quad.n_nodes)

    offsets = theta[:, None] - nodes[None, :]
    scale = -spec.K * quad.delta
    v = (u_nodes * np.sin(offsets)).sum(axis=1) * scale
    dv_dtheta = (u_nodes * np.cos(offsets)).sum(axis=1) * scale

    return point.du_dt + dv_dtheta * point.u + v * point.du_dtheta
