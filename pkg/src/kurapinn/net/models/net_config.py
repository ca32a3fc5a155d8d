import typing as T

from dataclassy import dataclass

from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.runtime.models.errors import ConfigError

INPUT_DIM = 2
OUTPUT_DIM = 1
MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class NetConfig:
    depth: int
    width: int
    activation: ActivationKind = ActivationKind.Tanh
    seed: int = 0

    def __post_init__(self):
        if self.depth < 1:
            raise ConfigError(f"Network depth must be >= 1, got {self.depth}")
        if self.width < 1:
            raise ConfigError(f"Network width must be >= 1, got {self.width}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigError(f"Seed must fit in 64 unsigned bits, got {self.seed}")
        if not isinstance(self.activation, ActivationKind):
            raise ConfigError(f"Invalid activation: {self.activation!r}")

    @property
    def layer_sizes(self) -> T.List[int]:
        return [INPUT_DIM] + [self.width] * self.depth + [OUTPUT_DIM]

    @property
    def param_count(self) -> int:
        sizes = self.layer_sizes
        return sum(n_out * n_in + n_out for n_in, n_out in zip(sizes[:-1], sizes[1:]))

    @property
    def init_scheme(self) -> str:
        return "he_normal" if self.activation is ActivationKind.Relu else "glorot_uniform"
