from kurapinn.diff.models.traced_net import TracedNet
from kurapinn.diff.models.var import Var, leaf
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet


def trace_params(
    params: ParamSet, config: NetConfig, requires_grad: bool = True
) -> TracedNet:
    wrap = leaf if requires_grad else Var
    return TracedNet(
        config=config,
        weights=[wrap(w) for w in params.weights],
        biases=[wrap(b) for b in params.biases],
    )
