import typing as T

import numpy as np

from kurapinn.diff.models.gradient_vector import GradientVector
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.rules.flatten_params import flatten_params, unflatten_like
from kurapinn.runtime.models.errors import ConfigError, ShapeMismatchError
from kurapinn.training.models.adam_state import AdamState
from kurapinn.training.models.train_config import TrainConfig


def adam_step(
    params: ParamSet,
    grad: GradientVector,
    state: AdamState,
    t_step: int,
    train_config: TrainConfig,
) -> T.Tuple[ParamSet, AdamState]:
    theta, m, v = adam_update(flatten_params(params), grad, state, t_step, train_config)
    return unflatten_like(theta, params), AdamState(m=m, v=v)


def adam_update(
    theta: np.ndarray,
    grad: np.ndarray,
    state: AdamState,
    t_step: int,
    train_config: TrainConfig,
) -> T.Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One bias-corrected Adam step on flat vectors; `t_step` counts from 1."""
    grad = np.asarray(grad, dtype=np.float64)
    if not (theta.shape == grad.shape == state.m.shape == state.v.shape):
        raise ShapeMismatchError(
            f"Adam shapes disagree: params {theta.shape}, grad {grad.shape}, "
            f"state {state.m.shape}/{state.v.shape}"
        )
    if t_step < 1:
        raise ConfigError(f"Adam step counter starts at 1, got {t_step}")

    beta1, beta2 = train_config.beta1, train_config.beta2
    m = beta1 * state.m + (1.0 - beta1) * grad
    v = beta2 * state.v + (1.0 - beta2) * (grad * grad)
    m_hat = m / (1.0 - beta1**t_step)
    v_hat = v / (1.0 - beta2**t_step)
    theta = theta - train_config.learning_rate * m_hat / (
        np.sqrt(v_hat) + train_config.eps_adam
    )
    return theta, m, v
