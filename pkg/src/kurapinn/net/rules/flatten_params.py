import numpy as np

from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.runtime.models.errors import ShapeMismatchError


def flatten_params(params: ParamSet) -> np.ndarray:
    # Layer-major, weights before biases, row-major within a matrix
    chunks = []
    for w, b in zip(params.weights, params.biases):
        chunks.append(w.ravel())
        chunks.append(b.ravel())
    return np.concatenate(chunks).astype(np.float64)


def unflatten_params(vector: np.ndarray, config: NetConfig) -> ParamSet:
    vector = np.asarray(vector, dtype=np.float64)
    if vector.shape != (config.param_count,):
        raise ShapeMismatchError(
            f"Expected {config.param_count} parameters, got shape {vector.shape}"
        )

    sizes = config.layer_sizes
    weights = []
    biases = []
    offset = 0
    for n_in, n_out in zip(sizes[:-1], sizes[1:]):
        weights.append(vector[offset : offset + n_out * n_in].reshape(n_out, n_in).copy())
        offset += n_out * n_in
        biases.append(vector[offset : offset + n_out].copy())
        offset += n_out
    return ParamSet(weights=tuple(weights), biases=tuple(biases))


def unflatten_like(vector: np.ndarray, template: ParamSet) -> ParamSet:
    vector = np.asarray(vector, dtype=np.float64)
    if vector.shape != (template.param_count,):
        raise ShapeMismatchError(
            f"Expected {template.param_count} parameters, got shape {vector.shape}"
        )

    weights = []
    biases = []
    offset = 0
    for w, b in zip(template.weights, template.biases):
        weights.append(vector[offset : offset + w.size].reshape(w.shape).copy())
        offset += w.size
        biases.append(vector[offset : offset + b.size].copy())
        offset += b.size
    return ParamSet(weights=tuple(weights), biases=tuple(biases))
