from .options import Options  # noqa
from .run_config import RunConfig  # noqa
