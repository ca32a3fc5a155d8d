import numpy as np

from kurapinn.net.models.activation_kind import ActivationKind


def activate(kind: ActivationKind, z: np.ndarray) -> np.ndarray:
    if kind is ActivationKind.Tanh:
        return np.tanh(z)
    if kind is ActivationKind.Sin:
        return np.sin(z)
    return np.maximum(z, 0.0)


def activate_derivative(kind: ActivationKind, z: np.ndarray) -> np.ndarray:
    if kind is ActivationKind.Tanh:
        return 1.0 - np.tanh(z) ** 2
    if kind is ActivationKind.Sin:
        return np.cos(z)
    # ReLU is not differentiable at 0; the subgradient 0 is used there
    return (z > 0.0).astype(np.float64)
