import logging

import numpy as np

from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "PCG64"


def init_params(config: NetConfig) -> ParamSet:
    """Draw initial weights for `config`, deterministically from `config.seed`.

    Smooth activations use Glorot-uniform bounds ±sqrt(6/(n_in+n_out)); ReLU uses
    He-normal with std sqrt(2/n_in). Biases start at zero.
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    sizes = config.layer_sizes

    weights = []
    biases = []
    for n_in, n_out in zip(sizes[:-1], sizes[1:]):
        if config.activation is ActivationKind.Relu:
            w = rng.normal(0.0, np.sqrt(2.0 / n_in), size=(n_out, n_in))
        else:
            bound = np.sqrt(6.0 / (n_in + n_out))
            w = rng.uniform(-bound, bound, size=(n_out, n_in))
        weights.append(w.astype(np.float64))
        biases.append(np.zeros(n_out, dtype=np.float64))

    params = ParamSet(weights=tuple(weights), biases=tuple(biases))
    logger.debug(
        f"Initialized {params.param_count} parameters with {config.init_scheme} "
        f"(seed={config.seed})"
    )
    return params
