from .claim_check import ClaimCheck  # noqa
from .record_status import RecordStatus  # noqa
from .sweep_cell import SweepCell  # noqa
from .sweep_grid import SweepGrid  # noqa
from .sweep_record import RECORD_COLUMNS, SweepRecord  # noqa
