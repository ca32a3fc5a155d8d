import typing as T

from dataclassy import dataclass

from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.runtime.models.errors import ConfigError

DEFAULT_SHAPES = ((4, 64), (4, 128), (6, 128), (6, 256), (8, 256))
DEFAULT_EPOCHS = (2048, 4096, 5120, 10240)
DEFAULT_COLLOC = (1024, 2048)


@dataclass(frozen=True)
class SweepGrid:
    activations: T.Tuple[ActivationKind, ...] = tuple(ActivationKind)
    shapes: T.Tuple[T.Tuple[int, int], ...] = DEFAULT_SHAPES
    epoch_budgets: T.Tuple[int, ...] = DEFAULT_EPOCHS
    colloc_counts: T.Tuple[int, ...] = DEFAULT_COLLOC
    seeds: T.Tuple[int, ...] = (0,)

    def __post_init__(self):
        for name in ("activations", "shapes", "epoch_budgets", "colloc_counts", "seeds"):
            if not getattr(self, name):
                raise ConfigError(f"Sweep grid field '{name}' must not be empty")
        for depth, width in self.shapes:
            if depth < 1 or width < 1:
                raise ConfigError(f"Invalid network shape ({depth}, {width})")

    @property
    def size(self) -> int:
        return (
            len(set(self.activations))
            * len(set(self.shapes))
            * len(set(self.epoch_budgets))
            * len(set(self.colloc_counts))
            * len(self.seeds)
        )
