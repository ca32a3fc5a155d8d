from .gradient_vector import GradientVector  # noqa
from .traced_net import TracedNet, TracedOutput  # noqa
from .value_with_partials import ValueWithPartials  # noqa
from .var import Var  # noqa
