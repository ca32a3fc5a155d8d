import json
import textwrap

import pandas
import pytest

from kurapinn.runtime.entrypoints.kurapinn import main

RUN_LABEL = "tanh-L1-n4-e3-r16-s0"


@pytest.fixture
def config_file(tmp_path):
    filename = tmp_path / "kurapinn.yaml"
    filename.write_text(
        textwrap.dedent(
            """
            net: {depth: 1, width: 4, activation: tanh}
            train: {n_colloc: 16, n_ic: 16, n_quad: 8, epochs: 3}
            sweep:
              activations: [tanh]
              shapes: [[1, 4]]
              epoch_budgets: [3]
              colloc_counts: [16]
            reference: {M: 16, n_levels: 3}
            options: {out_dir: out}
            """
        )
    )
    return str(filename)


def test_solve_ref_with_convergence(config_file, tmp_path, capsys):
    assert main(["solve-ref", "--config", config_file, "--convergence", "16,32"]) == 0
    assert (tmp_path / "out" / "reference.fvb").exists()
    study = pandas.read_csv(tmp_path / "out" / "convergence.csv")
    assert list(study.columns) == ["M", "M_fine", "error", "order"]
    assert "Wrote reference (16 x 3)" in capsys.readouterr().out


def test_train_then_eval_and_profile(config_file, tmp_path, capsys):
    assert main(["solve-ref", "--config", config_file]) == 0
    reference = str(tmp_path / "out" / "reference.fvb")
    assert main(["train", "--config", config_file, "--reference", reference]) == 0

    run_dir = tmp_path / "out" / "runs" / RUN_LABEL
    for name in ("model.ckpt", "loss_history.csv", "colloc.csv", "ic.csv", "error.csv"):
        assert (run_dir / name).exists()
    with open(run_dir / "train.json") as f:
        summary = json.load(f)
    assert summary["epochs_completed"] == 3
    assert summary["energy_norm"] >= 0
    assert len(pandas.read_csv(run_dir / "colloc.csv")) == 16

    capsys.readouterr()
    checkpoint = str(run_dir / "model.ckpt")
    assert main(["eval", "--config", config_file, checkpoint, reference]) == 0
    out = capsys.readouterr().out
    assert f"Energy norm: {summary['energy_norm']:.6e}" in out

    plot_dir = tmp_path / "plots"
    args = ["profile", "--config", config_file, checkpoint, "--M-plot", "64"]
    assert main(args + ["--reference", reference, "--plot-data", str(plot_dir)]) == 0
    for name in ("solution.csv", "reference.csv", "error.csv"):
        assert (plot_dir / name).exists()
    assert len(pandas.read_csv(plot_dir / "solution.csv")) == 64


def test_sweep_then_report(config_file, tmp_path, capsys):
    assert main(["sweep", "--config", config_file, "--parallelism", "1"]) == 0
    assert "Sweep records: 1" in capsys.readouterr().out

    assert main(["report", "--config", config_file, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert lines[1].startswith(RUN_LABEL)


def test_command_line_flags_override_the_config(config_file, tmp_path):
    out_dir = tmp_path / "elsewhere"
    args = ["train", "--config", config_file, "--out-dir", str(out_dir), "--width", "3"]
    assert main(args) == 0
    assert (out_dir / "runs" / "tanh-L1-n3-e3-r16-s0" / "model.ckpt").exists()


@pytest.mark.parametrize(
    "args, category, exit_code",
    [
        (["train", "--activation", "swish"], "config", 2),
        (["train", "--config", "/nonexistent/kurapinn.yaml"], "config", 2),
        (["eval", "missing.ckpt", "missing.fvb"], "format", 8),
    ],
)
def test_errors_map_to_exit_codes(
    tmp_path, monkeypatch, capsys, args, category, exit_code
):
    monkeypatch.chdir(tmp_path)
    assert main(args) == exit_code
    assert capsys.readouterr().err.startswith(f"error: {category}: ")


def test_cfl_above_one_is_a_config_error(config_file, capsys):
    assert main(["solve-ref", "--config", config_file, "--cfl", "1.5"]) == 2
    assert "error: config:" in capsys.readouterr().err


def test_profile_rejects_a_single_plot_point(config_file, tmp_path, capsys):
    assert main(["train", "--config", config_file]) == 0
    checkpoint = str(tmp_path / "out" / "runs" / RUN_LABEL / "model.ckpt")
    args = ["profile", "--config", config_file, checkpoint]
    assert main(args + ["--M-plot", "1"]) == 2
    assert "error: config:" in capsys.readouterr().err


def test_profile_rejects_a_mismatched_reference(config_file, tmp_path, capsys):
    assert main(["solve-ref", "--config", config_file, "--K", "2"]) == 0
    reference = str(tmp_path / "out" / "reference.fvb")
    assert main(["train", "--config", config_file]) == 0
    checkpoint = str(tmp_path / "out" / "runs" / RUN_LABEL / "model.ckpt")
    args = ["profile", "--config", config_file, checkpoint, "--reference", reference]
    assert main(args) == 7
    assert "error: mismatch:" in capsys.readouterr().err
