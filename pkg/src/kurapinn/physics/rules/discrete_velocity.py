import numpy as np

from kurapinn.physics.models.quadrature_rule import QuadratureRule


def discrete_velocity(
    values_at_nodes: np.ndarray, theta: np.ndarray, quad: QuadratureRule, K: float
) -> np.ndarray:
    """-K Σ_j sin(θ - φ_j) u(φ_j) Δφ.

    `values_at_nodes` has shape (..., N_q) and pairs row-wise with `theta`; a single
    row is broadcast against every θ.
    """
    kernel = np.sin(np.asarray(theta)[..., None] - quad.nodes)
    return -K * quad.delta * np.sum(kernel * values_at_nodes, axis=-1)


def discrete_velocity_slope(
    values_at_nodes: np.ndarray, theta: np.ndarray, quad: QuadratureRule, K: float
) -> np.ndarray:
    """∂θ of discrete_velocity: -K Σ_j cos(θ - φ_j) u(φ_j) Δφ."""
    kernel = np.cos(np.asarray(theta)[..., None] - quad.nodes)
    return -K * quad.delta * np.sum(kernel * values_at_nodes, axis=-1)
