import numpy as np
import pytest

from kurapinn.net.models.activation_kind import ActivationKind

ACTIVATIONS = list(ActivationKind)
N_SMALL_NETS = 25


@pytest.fixture(params=range(N_SMALL_NETS), ids=lambda k: f"net{k}")
def small_net(request, random_net):
    """One of 25 seeded nets with L <= 3 and n <= 8, cycling through activations."""
    k = request.param
    return random_net(
        depth=1 + k % 3,
        width=2 + (5 * k) % 7,
        activation=ACTIVATIONS[k % len(ACTIVATIONS)],
        seed=100 + k,
    )


@pytest.fixture
def preactivation_margin():
    """Smallest |z| over all hidden pre-activations at the points (theta[k], t[k])."""

    def margin(params, theta, t):
        h = np.stack([np.ravel(theta), np.ravel(t)], axis=1)
        smallest = np.inf
        hidden = list(zip(params.weights, params.biases))[:-1]
        for w, b in hidden:
            z = h @ w.T + b
            smallest = min(smallest, float(np.min(np.abs(z))))
            h = np.maximum(z, 0.0)
        return smallest

    return margin
