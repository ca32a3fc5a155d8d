import enum


class RecordStatus(enum.Enum):
    Ok = "ok"
    NonFinite = "nonfinite"
    Diverged = "diverged"
    Failed = "failed"
