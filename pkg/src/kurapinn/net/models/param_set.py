import typing as T

import numpy as np
from dataclassy import dataclass


@dataclass(frozen=True, eq=False)
class ParamSet:
    """Weights and biases of layers 1..L+1.

    `weights[i]` has shape (n_{i+1}, n_i) and `biases[i]` has shape (n_{i+1},). The
    arrays are made read-only so that a ParamSet can be shared between workers.
    """

    weights: T.Tuple[np.ndarray, ...]
    biases: T.Tuple[np.ndarray, ...]

    def __post_init__(self):
        for array in (*self.weights, *self.biases):
            array.setflags(write=False)

    @property
    def n_layers(self) -> int:
        return len(self.weights)

    @property
    def param_count(self) -> int:
        return sum(w.size + b.size for w, b in zip(self.weights, self.biases))

    @property
    def shapes(self) -> T.List[T.Tuple[T.Tuple[int, ...], T.Tuple[int, ...]]]:
        return [(w.shape, b.shape) for w, b in zip(self.weights, self.biases)]

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(a)) for a in (*self.weights, *self.biases))
