from .collocation_set import CollocationSet  # noqa
from .ic_set import ICSet  # noqa
