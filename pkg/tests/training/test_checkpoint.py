import numpy as np
import pandas
import pytest

from kurapinn.net.rules.flatten_params import flatten_params
from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import FormatError
from kurapinn.training.actions.load_checkpoint import load_checkpoint
from kurapinn.training.actions.save_checkpoint import save_checkpoint
from kurapinn.training.actions.write_loss_history import write_loss_history
from kurapinn.training.models.loss_history import LossHistory


def test_checkpoint_restores_params_and_problem(tmp_path, random_net):
    config, params = random_net(depth=3, width=5)
    problem = ProblemSpec(K=2.0, ic=InitialConditionKind.Piecewise)
    filename = str(tmp_path / "model.ckpt")
    save_checkpoint(filename, params, config, problem)

    checkpoint = load_checkpoint(filename)
    assert checkpoint.net_config == config
    assert checkpoint.problem == problem
    assert flatten_params(checkpoint.params).tobytes() == flatten_params(params).tobytes()


def test_truncated_checkpoint_is_rejected(tmp_path, make_net):
    config, params = make_net()
    filename = tmp_path / "model.ckpt"
    save_checkpoint(str(filename), params, config)
    filename.write_bytes(filename.read_bytes()[:-8])
    with pytest.raises(FormatError):
        load_checkpoint(str(filename))


def test_garbage_is_rejected(tmp_path):
    filename = tmp_path / "model.ckpt"
    filename.write_bytes(b"not a header\n\x00\x01")
    with pytest.raises(FormatError):
        load_checkpoint(str(filename))


def test_missing_checkpoint_is_a_format_error(tmp_path):
    with pytest.raises(FormatError):
        load_checkpoint(str(tmp_path / "absent.ckpt"))


def test_loss_history_csv(tmp_path):
    history = LossHistory()
    history.append(0.2, 0.3, 0.5)
    history.append(0.1, 0.1, 0.2)
    filename = tmp_path / "loss_history.csv"
    write_loss_history(history, str(filename))
    frame = pandas.read_csv(filename)
    assert list(frame.columns) == ["epoch", "L_res", "L_IC", "L_total"]
    assert list(frame["epoch"]) == [1, 2]
    np.testing.assert_array_equal(frame["L_total"], [0.5, 0.2])
