import math
import typing

from dataclassy import dataclass

from kurapinn.sweep.models.record_status import RecordStatus

RECORD_COLUMNS = [
    "fingerprint",
    "activation",
    "depth",
    "width",
    "epochs",
    "n_colloc",
    "n_ic",
    "n_quad",
    "learning_rate",
    "lambda_res",
    "lambda_ic",
    "seed",
    "cell_seed",
    "init_seed",
    "K",
    "T",
    "ic",
    "eps",
    "init_scheme",
    "rng_algorithm",
    "energy_norm",
    "max_abs_error",
    "tv_ratio",
    "wall_clock_seconds",
    "final_l_res",
    "final_l_ic",
    "final_l_total",
    "epochs_completed",
    "status",
    "parallelism",
    "message",
]


@dataclass
class SweepRecord:
    fingerprint: str
    activation: str
    depth: int
    width: int
    epochs: int
    n_colloc: int
    n_ic: int
    n_quad: int
    learning_rate: float
    lambda_res: float
    lambda_ic: float
    seed: int
    cell_seed: int
    init_seed: int
    K: float
    T: float
    ic: str
    eps: float
    init_scheme: str
    rng_algorithm: str
    energy_norm: float = math.nan
    max_abs_error: float = math.nan
    tv_ratio: float = math.nan
    wall_clock_seconds: float = math.nan
    final_l_res: float = math.nan
    final_l_ic: float = math.nan
    final_l_total: float = math.nan
    epochs_completed: int = 0
    status: RecordStatus = RecordStatus.Ok
    parallelism: int = 1
    message: str = ""

    @property
    def is_ok(self) -> bool:
        return self.status is RecordStatus.Ok

    def to_row(self) -> typing.Dict[str, typing.Any]:
        row = {name: getattr(self, name) for name in RECORD_COLUMNS}
        row["status"] = self.status.value
        return row

    @classmethod
    def from_row(cls, row: typing.Dict[str, typing.Any]) -> "SweepRecord":
        ints = {"depth", "width", "epochs", "n_colloc", "n_ic", "n_quad", "seed",
                "cell_seed", "init_seed", "epochs_completed", "parallelism"}
        strings = {"fingerprint", "activation", "ic", "init_scheme", "rng_algorithm",
                   "message"}
        values = {}
        for name in RECORD_COLUMNS:
            value = row.get(name)
            if name == "status":
                values[name] = RecordStatus(value)
            elif name in ints:
                values[name] = int(value)
            elif name in strings:
                values[name] = "" if _is_missing(value) else str(value)
            else:
                values[name] = math.nan if _is_missing(value) else float(value)
        return cls(**values)


def _is_missing(value) -> bool:
    return value is None or (isinstance(value, float) and math.isnan(value))
