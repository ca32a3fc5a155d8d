import concurrent.futures
import logging
import os
import typing as T

from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.sweep.actions.ensure_reference import ensure_reference
from kurapinn.sweep.actions.ledger import append_record, read_ledger
from kurapinn.sweep.actions.run_cell import failed_cell, run_cell
from kurapinn.sweep.models.sweep_grid import SweepGrid
from kurapinn.sweep.models.sweep_record import SweepRecord
from kurapinn.sweep.rules.cell_fingerprint import cell_fingerprint
from kurapinn.sweep.rules.expand_grid import expand_grid
from kurapinn.training.models.train_config import TrainConfig

logger = logging.getLogger(__name__)


def default_parallelism() -> int:
    return max(1, (os.cpu_count() or 1) - 1)


def run_sweep(
    grid: SweepGrid,
    spec: ProblemSpec,
    parallelism: int,
    out_dir: str,
    template: T.Optional[TrainConfig] = None,
    ref_grid: T.Optional[FvGrid] = None,
    cfl: float = 0.9,
    force: bool = False,
) -> T.List[SweepRecord]:
    """Run every cell of `grid` not yet in the ledger under `out_dir`.

    Returns one record per cell of `grid`, the newest one when a cell was rerun.
    Records of other grids or problems in the same store are left out. The
    reference solution is solved once and shared by all cells.
    """
    template = template or TrainConfig()
    ref_grid = ref_grid or FvGrid(T=spec.T)
    parallelism = max(1, parallelism)
    os.makedirs(out_dir, exist_ok=True)

    ref = ensure_reference(out_dir, spec, ref_grid, cfl)
    existing = {r.fingerprint for r in read_ledger(out_dir)}

    cells = expand_grid(grid)
    fingerprints = [cell_fingerprint(cell, spec, template) for cell in cells]
    pending = [
        cell
        for cell, fingerprint in zip(cells, fingerprints)
        if force or fingerprint not in existing
    ]
    logger.info(
        f"Sweep of {len(cells)} cells: {len(cells) - len(pending)} already recorded, "
        f"{len(pending)} to run with parallelism {parallelism}"
    )
    if parallelism > 1 and pending:
        logger.warning(
            "Cells share the machine; wall-clock times are not comparable across runs"
        )

    if parallelism == 1:
        for cell in pending:
            record, metadata = run_cell(cell, spec, template, ref, parallelism)
            append_record(out_dir, record, metadata)
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=parallelism) as pool:
            futures = {
                pool.submit(run_cell, cell, spec, template, ref, parallelism): cell
                for cell in pending
            }
            # Only this process writes to the ledger
            for future in concurrent.futures.as_completed(futures):
                try:
                    record, metadata = future.result()
                except Exception as e:
                    record, metadata = failed_cell(
                        futures[future], spec, template, e, parallelism
                    )
                append_record(out_dir, record, metadata)

    by_fingerprint = {r.fingerprint: r for r in read_ledger(out_dir)}
    records = [
        by_fingerprint[fp] for fp in dict.fromkeys(fingerprints) if fp in by_fingerprint
    ]
    logger.info(f"Sweep of {out_dir} returned {len(records)} records")
    return records
