import typing as T


class KurapinnError(Exception):
    category = "error"
    exit_code = 1


class ConfigError(KurapinnError):
    category = "config"
    exit_code = 2


class DomainError(KurapinnError):
    category = "domain"
    exit_code = 3


class NonFiniteError(KurapinnError):
    """Raised when a forward pass, a gradient or a training loss stops being finite.

    Exactly one of `layer`, `component` or `epoch` locates the failure. Training also
    attaches the last parameters that produced a finite loss.
    """

    category = "nonfinite"
    exit_code = 4

    def __init__(
        self,
        message: str,
        layer: T.Optional[int] = None,
        component: T.Optional[int] = None,
        epoch: T.Optional[int] = None,
        last_finite_params: T.Any = None,
    ):
        super().__init__(message)
        self.layer = layer
        self.component = component
        self.epoch = epoch
        self.last_finite_params = last_finite_params


class ShapeMismatchError(KurapinnError):
    category = "shape"
    exit_code = 5


class CflViolationError(KurapinnError):
    category = "cfl"
    exit_code = 6


class GridMismatchError(KurapinnError):
    category = "mismatch"
    exit_code = 7


class FormatError(KurapinnError):
    category = "format"
    exit_code = 8
