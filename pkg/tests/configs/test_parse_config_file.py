import pathlib
import textwrap

import pytest

from kurapinn.configs.actions.parse_config_file import config_from_dict, parse_config_file
from kurapinn.configs.rules.apply_overrides import apply_overrides
from kurapinn.configs.rules.default_out_dir import FALLBACK_OUT_DIR, OUT_DIR_ENV
from kurapinn.configs.utils.resolve_path import resolve_path
from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.runtime.models.errors import ConfigError
from kurapinn.runtime.utils.derive_seed import derive_seed


def _write(tmp_path, text, name="kurapinn.yaml"):
    filename = tmp_path / name
    filename.write_text(textwrap.dedent(text))
    return str(filename)


def test_full_config_file(tmp_path):
    filename = _write(
        tmp_path,
        """
        problem:
          K: 2.0
          ic: dirac
          eps: 0.05
        net:
          depth: 6
          width: 256
          activation: sin
          seed: 9
        train:
          n_colloc: 2048
          epochs: 100
          checkpoint_epochs: [50]
        sweep:
          activations: [tanh, relu]
          shapes: [[4, 64]]
          epoch_budgets: [10]
          colloc_counts: [32]
          seeds: [0, 1]
        reference:
          M: 128
          n_levels: 11
        options:
          out_dir: results
          parallelism: 3
          cfl: 0.5
        """,
    )
    config = parse_config_file(filename)

    assert config.problem.K == 2.0
    assert config.problem.ic is InitialConditionKind.Dirac
    assert config.problem.eps == 0.05
    assert (config.net.depth, config.net.width) == (6, 256)
    assert config.net.activation is ActivationKind.Sin
    assert config.train.n_colloc == 2048
    assert config.train.checkpoint_epochs == (50,)
    assert config.sweep.activations == (ActivationKind.Tanh, ActivationKind.Relu)
    assert config.sweep.shapes == ((4, 64),)
    assert config.sweep.seeds == (0, 1)
    assert (config.ref_grid.M, config.ref_grid.n_levels) == (128, 11)
    assert config.options.parallelism == 3
    assert config.options.cfl == 0.5
    assert config.options.out_dir == str((tmp_path / "results").resolve())
    assert config.source_dirname == str(tmp_path.resolve())


def test_empty_file_gives_defaults(tmp_path, monkeypatch):
    monkeypatch.delenv(OUT_DIR_ENV, raising=False)
    config = parse_config_file(_write(tmp_path, ""))
    assert (config.net.depth, config.net.width) == (4, 128)
    assert config.net.activation is ActivationKind.Tanh
    assert config.train.epochs == 4096
    assert config.sweep.size == 120
    assert (config.ref_grid.M, config.ref_grid.n_levels) == (512, 205)
    assert config.options.out_dir == str(pathlib.Path(FALLBACK_OUT_DIR).resolve())
    assert config.options.parallelism is None


def test_out_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path / "from-env"))
    config = config_from_dict({})
    assert config.options.out_dir == str((tmp_path / "from-env").resolve())


@pytest.mark.parametrize(
    "text",
    [
        "models: {}\n",
        "train:\n  learning_rte: 0.1\n",
        "net:\n  activation: swish\n",
        "problem:\n  ic: gaussian\n",
        "problem:\n  K: -1\n",
        "sweep:\n  seeds: []\n",
        "- just\n- a list\n",
        "net: [1, 2]\n",
        "train: {epochs: 0}\n",
        "problem: {: bad\n",
    ],
)
def test_invalid_config_is_rejected(tmp_path, text):
    with pytest.raises(ConfigError):
        parse_config_file(_write(tmp_path, text))


def test_missing_file_is_rejected(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        parse_config_file(str(tmp_path / "missing.yaml"))


def test_overrides_narrow_the_sweep():
    config = apply_overrides(
        config_from_dict({}),
        dict(activation="relu", width=32, epochs=7, colloc=64, seed=5, ic=None),
    )
    assert config.net.activation is ActivationKind.Relu
    assert (config.net.depth, config.net.width) == (4, 32)
    assert config.sweep.activations == (ActivationKind.Relu,)
    assert config.sweep.shapes == ((4, 32),)
    assert config.sweep.epoch_budgets == (7,)
    assert config.sweep.colloc_counts == (64,)
    assert config.sweep.size == 1
    assert config.train.seed == 5
    assert config.net.seed == derive_seed(5, "init")
    assert config.problem.ic is InitialConditionKind.Polynomial


def test_overrides_leave_unset_values_alone():
    config = config_from_dict({"train": {"epochs": 11}})
    assert apply_overrides(config, dict(epochs=None, force=False)) == config


def test_override_paths_are_normalized(tmp_path):
    config = apply_overrides(
        config_from_dict({}), dict(out_dir=str(tmp_path / "a" / ".." / "b"))
    )
    assert config.options.out_dir == str((tmp_path / "b").resolve())


def test_paths_expand_home_and_variables(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("KURAPINN_RUNS", "runs")
    assert resolve_path("~/$KURAPINN_RUNS") == str((tmp_path / "runs").resolve())
    assert resolve_path("out", base_dir=str(tmp_path)) == str((tmp_path / "out").resolve())
    assert resolve_path(str(tmp_path / "abs"), base_dir="/elsewhere") == str(
        (tmp_path / "abs").resolve()
    )


def test_empty_path_is_rejected():
    with pytest.raises(ConfigError):
        resolve_path("  ")
