import numpy as np
import pytest
from dataclassy import replace

from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.models.net_config import NetConfig
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import ConfigError
from kurapinn.training.actions.train import train
from kurapinn.training.models.train_config import TrainConfig

SMALL = TrainConfig(n_colloc=32, n_ic=32, n_quad=16, epochs=50, chunk_size=16)
NET = NetConfig(depth=2, width=8, activation=ActivationKind.Tanh, seed=1)


def test_loss_decreases():
    result = train(NET, ProblemSpec(), SMALL)
    history = result.history
    assert len(history) == result.epochs_completed == 50
    assert history.l_total[-1] < history.l_total[0]
    assert all(np.isfinite(history.l_total))
    assert result.wall_clock_seconds >= 0


def test_training_is_bitwise_deterministic():
    first = train(NET, ProblemSpec(), replace(SMALL, epochs=10))
    second = train(NET, ProblemSpec(), replace(SMALL, epochs=10))
    assert first.history.l_total == second.history.l_total
    for a, b in zip(first.params.weights, second.params.weights):
        assert a.tobytes() == b.tobytes()


def test_checkpoints_are_kept():
    result = train(NET, ProblemSpec(), replace(SMALL, epochs=6, checkpoint_epochs=(3, 6)))
    assert sorted(result.checkpoints) == [3, 6]
    assert result.checkpoints[6] is result.params


def test_early_stopping_ends_the_run():
    config = replace(
        SMALL, epochs=200, early_stop_patience=1, early_stop_min_delta=1e9
    )
    result = train(NET, ProblemSpec(), config)
    assert result.stopped_early
    assert result.epochs_completed == 2


def test_ic_only_training_ignores_residual_gradient():
    config = replace(SMALL, lambda_res=0.0, epochs=20)
    result = train(NET, ProblemSpec(), config)
    assert result.history.l_ic[-1] < result.history.l_ic[0]
    assert result.history.l_total == result.history.l_ic


def test_resampling_changes_the_history():
    fixed = train(NET, ProblemSpec(), replace(SMALL, epochs=5))
    resampled = train(NET, ProblemSpec(), replace(SMALL, epochs=5, resample_colloc=True))
    assert fixed.history.l_res[0] == resampled.history.l_res[0]
    assert fixed.history.l_res[1:] != resampled.history.l_res[1:]


@pytest.mark.parametrize(
    "changes",
    [dict(epochs=0), dict(learning_rate=0.0), dict(beta1=1.0), dict(n_colloc=0)],
)
def test_invalid_train_config_is_rejected(changes):
    with pytest.raises(ConfigError):
        TrainConfig(**changes)


@pytest.mark.slow
def test_ic_regression_fits_initial_condition():
    config = TrainConfig(n_ic=512, epochs=2000, lambda_res=0.0, n_colloc=1)
    result = train(NetConfig(depth=4, width=64, seed=0), ProblemSpec(), config)
    assert result.history.l_ic[-1] < 1e-3
