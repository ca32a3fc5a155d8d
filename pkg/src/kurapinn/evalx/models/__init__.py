from .error_report import ErrorReport  # noqa
from .oversmoothing_check import OversmoothingCheck  # noqa
from .profile_table import ProfileTable  # noqa
