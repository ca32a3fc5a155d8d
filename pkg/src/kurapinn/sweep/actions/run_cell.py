import logging
import math
import typing as T

from dataclassy import replace

from kurapinn.evalx.rules.energy_norm import energy_norm
from kurapinn.fvref.models.ref_solution import RefSolution
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.rules.init_params import RNG_ALGORITHM
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import KurapinnError, NonFiniteError
from kurapinn.runtime.utils.derive_seed import derive_seed
from kurapinn.sweep.models.record_status import RecordStatus
from kurapinn.sweep.models.sweep_cell import SweepCell
from kurapinn.sweep.models.sweep_record import SweepRecord
from kurapinn.sweep.rules.cell_fingerprint import cell_fingerprint
from kurapinn.training.actions.train import train
from kurapinn.training.models.train_config import TrainConfig

logger = logging.getLogger(__name__)


def run_cell(
    cell: SweepCell,
    spec: ProblemSpec,
    template: TrainConfig,
    ref: RefSolution,
    parallelism: int = 1,
) -> T.Tuple[SweepRecord, T.Dict]:
    """Train and evaluate one grid cell; failures end up in the record's status."""
    net_config, train_config, record, metadata = _prepare(
        cell, spec, template, parallelism
    )
    fingerprint = record.fingerprint

    logger.info(f"Running cell {fingerprint}")
    try:
        result = train(net_config, spec, train_config)
    except NonFiniteError as e:
        logger.warning(f"Cell {fingerprint} became non-finite: {e}")
        record.status = RecordStatus.NonFinite
        record.message = str(e)
        record.epochs_completed = (e.epoch - 1) if e.epoch else 0
        return record, metadata
    except Exception as e:
        _mark_failed(record, e)
        return record, metadata

    history = result.history
    record.wall_clock_seconds = result.wall_clock_seconds
    record.final_l_res = history.l_res[-1]
    record.final_l_ic = history.l_ic[-1]
    record.final_l_total = history.l_total[-1]
    record.epochs_completed = result.epochs_completed

    try:
        error = energy_norm(result.params, net_config, ref, problem=spec)
    except Exception as e:
        _mark_failed(record, e)
        return record, metadata

    record.energy_norm = error.energy_norm
    record.max_abs_error = error.max_abs_error
    record.tv_ratio = error.tv_ratio if error.tv_ratio is not None else math.nan
    if history.l_total[-1] > history.l_total[0]:
        record.status = RecordStatus.Diverged
        record.message = "final loss above first-epoch loss"
    metadata["loss_history_tail"] = history.l_total[-10:]
    logger.info(
        f"Cell {fingerprint}: energy norm {error.energy_norm:.3e} in "
        f"{result.wall_clock_seconds:.1f} s"
    )
    return record, metadata


def failed_cell(
    cell: SweepCell,
    spec: ProblemSpec,
    template: TrainConfig,
    error: BaseException,
    parallelism: int = 1,
) -> T.Tuple[SweepRecord, T.Dict]:
    """The record of a cell whose worker died before returning a result."""
    _, _, record, metadata = _prepare(cell, spec, template, parallelism)
    _mark_failed(record, error)
    return record, metadata


def _mark_failed(record: SweepRecord, error: BaseException) -> None:
    if isinstance(error, KurapinnError):
        record.message = f"{error.category}: {error}"
    else:
        record.message = f"{type(error).__name__}: {error}"
    logger.warning(f"Cell {record.fingerprint} failed: {record.message}")
    record.status = RecordStatus.Failed


def _prepare(
    cell: SweepCell, spec: ProblemSpec, template: TrainConfig, parallelism: int
) -> T.Tuple[NetConfig, TrainConfig, SweepRecord, T.Dict]:
    fingerprint = cell_fingerprint(cell, spec, template)
    cell_seed = derive_seed(cell.seed, fingerprint)
    net_config = NetConfig(
        depth=cell.depth,
        width=cell.width,
        activation=cell.activation,
        seed=derive_seed(cell_seed, "init"),
    )
    train_config = replace(
        template, epochs=cell.epochs, n_colloc=cell.n_colloc, seed=cell_seed
    )
    record = SweepRecord(
        fingerprint=fingerprint,
        activation=cell.activation.value,
        depth=cell.depth,
        width=cell.width,
        epochs=cell.epochs,
        n_colloc=cell.n_colloc,
        n_ic=train_config.n_ic,
        n_quad=train_config.n_quad,
        learning_rate=train_config.learning_rate,
        lambda_res=train_config.lambda_res,
        lambda_ic=train_config.lambda_ic,
        seed=cell.seed,
        cell_seed=cell_seed,
        init_seed=net_config.seed,
        K=spec.K,
        T=spec.T,
        ic=spec.ic.value,
        eps=spec.eps,
        init_scheme=net_config.init_scheme,
        rng_algorithm=RNG_ALGORITHM,
        parallelism=parallelism,
    )
    metadata = dict(
        net=dict(
            depth=net_config.depth,
            width=net_config.width,
            activation=net_config.activation.value,
            seed=net_config.seed,
            init_scheme=net_config.init_scheme,
        ),
        train=train_config.to_dict(),
        problem=spec.to_dict(),
    )
    return net_config, train_config, record, metadata
