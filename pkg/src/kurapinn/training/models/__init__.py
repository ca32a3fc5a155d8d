from .adam_state import AdamState  # noqa
from .checkpoint import Checkpoint  # noqa
from .loss_history import LossHistory  # noqa
from .train_config import TrainConfig  # noqa
from .train_report import TrainReport  # noqa
