from .errors import (  # noqa
    CflViolationError,
    ConfigError,
    DomainError,
    FormatError,
    GridMismatchError,
    KurapinnError,
    NonFiniteError,
    ShapeMismatchError,
)
