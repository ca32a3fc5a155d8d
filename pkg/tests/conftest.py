import numpy as np
import pytest

from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.rules.init_params import init_params


@pytest.fixture
def make_net():
    def make(depth=2, width=4, activation=ActivationKind.Tanh, seed=3):
        config = NetConfig(depth=depth, width=width, activation=activation, seed=seed)
        return config, init_params(config)

    return make


@pytest.fixture
def random_net():
    """Init weights plus random biases, so that no layer starts at zero."""

    def make(depth=2, width=4, activation=ActivationKind.Tanh, seed=3):
        config = NetConfig(depth=depth, width=width, activation=activation, seed=seed)
        params = init_params(config)
        rng = np.random.Generator(np.random.PCG64(seed + 1000))
        biases = tuple(rng.normal(0.0, 0.3, size=b.shape) for b in params.biases)
        return config, ParamSet(
            weights=tuple(w.copy() for w in params.weights), biases=biases
        )

    return make


@pytest.fixture
def constant_net():
    """All weights zero and output bias `c`, so that u_Φ ≡ c."""

    def make(c=0.0, depth=2, width=4, activation=ActivationKind.Tanh):
        config = NetConfig(depth=depth, width=width, activation=activation)
        params = init_params(config)
        weights = tuple(np.zeros_like(w) for w in params.weights)
        biases = [np.zeros_like(b) for b in params.biases]
        biases[-1] = np.full_like(biases[-1], c)
        return config, ParamSet(weights=weights, biases=tuple(biases))

    return make
