import concurrent.futures

import pytest

import kurapinn.sweep.actions.run_cell as run_cell_module
import kurapinn.sweep.actions.run_sweep as run_sweep_module
from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import NonFiniteError
from kurapinn.sweep.actions.ledger import read_ledger
from kurapinn.sweep.actions.run_sweep import run_sweep
from kurapinn.sweep.models.record_status import RecordStatus
from kurapinn.sweep.models.sweep_grid import SweepGrid
from kurapinn.training.models.train_config import TrainConfig

TEMPLATE = TrainConfig(n_ic=16, n_quad=8)
REF_GRID = FvGrid(M=16, n_levels=3)


def _grid(activations=(ActivationKind.Tanh,), shapes=((1, 4),)):
    return SweepGrid(
        activations=activations,
        shapes=shapes,
        epoch_budgets=(3,),
        colloc_counts=(16,),
    )


def _run(out_dir, grid, parallelism=1, force=False):
    return run_sweep(
        grid,
        ProblemSpec(),
        parallelism,
        str(out_dir),
        template=TEMPLATE,
        ref_grid=REF_GRID,
        force=force,
    )


def test_single_cell_gives_one_record(tmp_path):
    records = _run(tmp_path, _grid())
    assert len(records) == 1
    record = records[0]
    assert record.status is RecordStatus.Ok
    assert record.epochs_completed == 3
    assert record.energy_norm >= 0
    assert record.init_scheme == "glorot_uniform"
    assert (tmp_path / "reference.fvb").exists()
    assert (tmp_path / "cells" / f"{record.fingerprint}.json").exists()


def test_rerun_trains_nothing(tmp_path, monkeypatch):
    first = _run(tmp_path, _grid())
    calls = []
    original = run_sweep_module.run_cell

    def counting(*args, **kwargs):
        calls.append(args[0])
        return original(*args, **kwargs)

    monkeypatch.setattr(run_sweep_module, "run_cell", counting)
    again = _run(tmp_path, _grid())
    assert calls == []
    assert [r.fingerprint for r in again] == [r.fingerprint for r in first]

    forced = _run(tmp_path, _grid(), force=True)
    assert len(calls) == 1
    assert [r.fingerprint for r in forced] == [r.fingerprint for r in first]
    assert len((tmp_path / "records.csv").read_text().splitlines()) == 3


def test_interrupted_sweep_resumes_to_the_same_records(tmp_path):
    grid = _grid(shapes=((1, 4), (2, 3)))
    _run(tmp_path / "a", _grid(shapes=((1, 4),)))
    resumed = _run(tmp_path / "a", grid)
    straight = _run(tmp_path / "b", grid)

    def key(r):
        return (r.fingerprint, r.energy_norm, r.final_l_total)

    assert sorted(map(key, resumed)) == sorted(map(key, straight))


def test_failing_cell_is_recorded_not_raised(tmp_path, monkeypatch):
    def exploding(*args, **kwargs):
        raise NonFiniteError("Epoch 2: boom", epoch=2)

    monkeypatch.setattr(run_cell_module, "train", exploding)
    records = _run(tmp_path, _grid())
    assert records[0].status is RecordStatus.NonFinite
    assert records[0].epochs_completed == 1
    assert "boom" in records[0].message


def test_parallel_cells_are_flagged(tmp_path):
    grid = _grid(activations=(ActivationKind.Tanh, ActivationKind.Sin))
    records = _run(tmp_path, grid, parallelism=2)
    assert len(records) == 2
    assert all(r.parallelism == 2 for r in records)
    assert {r.activation for r in records} == {"tanh", "sin"}


def test_parallel_and_serial_runs_agree(tmp_path):
    grid = _grid(activations=(ActivationKind.Tanh, ActivationKind.Sin))
    serial = _run(tmp_path / "serial", grid)
    parallel = _run(tmp_path / "parallel", grid, parallelism=2)
    assert sorted((r.fingerprint, r.energy_norm) for r in serial) == sorted(
        (r.fingerprint, r.energy_norm) for r in parallel
    )


@pytest.mark.slow
def test_default_grid_record_count(tmp_path):
    records = run_sweep(SweepGrid(), ProblemSpec(), 1, str(tmp_path))
    assert len(records) == 120


def test_unexpected_error_in_one_cell_does_not_stop_the_sweep(tmp_path, monkeypatch):
    original = run_cell_module.train

    def out_of_memory_for_tanh(net_config, *args, **kwargs):
        if net_config.activation is ActivationKind.Tanh:
            raise MemoryError("cell ran out of memory")
        return original(net_config, *args, **kwargs)

    monkeypatch.setattr(run_cell_module, "train", out_of_memory_for_tanh)
    grid = _grid(activations=(ActivationKind.Tanh, ActivationKind.Sin))
    records = {r.activation: r for r in _run(tmp_path, grid)}
    assert records["tanh"].status is RecordStatus.Failed
    assert records["tanh"].message == "MemoryError: cell ran out of memory"
    assert records["sin"].status is not RecordStatus.Failed


def test_worker_crash_is_recorded(tmp_path, monkeypatch):
    def crashing(cell, *args, **kwargs):
        raise OSError("worker lost")

    # Stands in for the pool: every submitted cell fails in its worker
    class FailingPool(concurrent.futures.ThreadPoolExecutor):
        def submit(self, fn, *args, **kwargs):
            return super().submit(crashing, *args, **kwargs)

    monkeypatch.setattr(
        run_sweep_module.concurrent.futures, "ProcessPoolExecutor", FailingPool
    )
    grid = _grid(activations=(ActivationKind.Tanh, ActivationKind.Sin))
    records = _run(tmp_path, grid, parallelism=2)
    assert len(records) == 2
    assert all(r.status is RecordStatus.Failed for r in records)
    assert all(r.message == "OSError: worker lost" for r in records)


def test_other_problems_in_the_store_are_not_returned(tmp_path):
    piecewise = ProblemSpec(ic=InitialConditionKind.Piecewise)
    _run(tmp_path, _grid())
    records = run_sweep(
        _grid(), piecewise, 1, str(tmp_path), template=TEMPLATE, ref_grid=REF_GRID
    )
    assert [r.ic for r in records] == ["piecewise"]
    assert len(read_ledger(str(tmp_path))) == 2
