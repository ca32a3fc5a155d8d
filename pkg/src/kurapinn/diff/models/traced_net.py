import typing as T

import numpy as np
from dataclassy import dataclass

from kurapinn.diff.models.var import Var
from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.utils.activations import activate_derivative
from kurapinn.runtime.models.errors import NonFiniteError


@dataclass(frozen=True, eq=False)
class TracedOutput:
    u: Var
    du_dtheta: T.Optional[Var] = None
    du_dt: T.Optional[Var] = None


@dataclass(eq=False)
class TracedNet:
    """The network with its parameters on a tape.

    Input partials are propagated forward as two tangent channels next to the
    primal values. The tangents are themselves tape nodes, so a loss built from
    them can be differentiated with respect to the parameters.
    """

    config: NetConfig
    weights: T.List[Var]
    biases: T.List[Var]

    def parameters(self) -> T.List[Var]:
        result = []
        for w, b in zip(self.weights, self.biases):
            result.extend([w, b])
        return result

    def evaluate(
        self, theta: np.ndarray, t: np.ndarray, with_partials: bool = False
    ) -> TracedOutput:
        theta = np.asarray(theta, dtype=np.float64).ravel()
        t = np.asarray(t, dtype=np.float64).ravel()
        if not (np.all(np.isfinite(theta)) and np.all(np.isfinite(t))):
            raise NonFiniteError("Non-finite network input", layer=0)

        batch = theta.size
        h = Var(np.stack([theta, t], axis=1))
        tangents = []
        if with_partials:
            tangents = [
                Var(np.broadcast_to([1.0, 0.0], (batch, 2))),
                Var(np.broadcast_to([0.0, 1.0], (batch, 2))),
            ]

        n_layers = len(self.weights)
        for i, (w, b) in enumerate(zip(self.weights, self.biases), start=1):
            z = h.matmul_t(w) + b
            dz = [tangent.matmul_t(w) for tangent in tangents]
            if i == n_layers:
                h, tangents = z, dz
            else:
                h, slope = _activate(self.config.activation, z)
                tangents = [d * slope for d in dz]
            if not np.all(np.isfinite(h.value)):
                raise NonFiniteError(f"Non-finite activation in layer {i}", layer=i)

        u = h.column(0)
        if not with_partials:
            return TracedOutput(u=u)
        return TracedOutput(
            u=u, du_dtheta=tangents[0].column(0), du_dt=tangents[1].column(0)
        )


def _activate(kind: ActivationKind, z: Var) -> T.Tuple[Var, Var]:
    # Returns the activation and its derivative, both traced
    if kind is ActivationKind.Tanh:
        a = z.tanh()
        return a, 1.0 - a.square()
    if kind is ActivationKind.Sin:
        return z.sin(), z.cos()
    return z.relu(), Var(activate_derivative(kind, z.value))
