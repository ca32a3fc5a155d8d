from .activation_kind import ActivationKind  # noqa
from .net_config import NetConfig  # noqa
from .param_set import ParamSet  # noqa
