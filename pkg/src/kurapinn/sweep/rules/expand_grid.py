import itertools
import typing as T

from kurapinn.sweep.models.sweep_cell import SweepCell
from kurapinn.sweep.models.sweep_grid import SweepGrid


def expand_grid(grid: SweepGrid) -> T.List[SweepCell]:
    cells = []
    for activation, (depth, width), epochs, n_colloc, seed in itertools.product(
        _unique(grid.activations),
        _unique(grid.shapes),
        _unique(grid.epoch_budgets),
        _unique(grid.colloc_counts),
        grid.seeds,
    ):
        cells.append(
            SweepCell(
                activation=activation,
                depth=depth,
                width=width,
                epochs=epochs,
                n_colloc=n_colloc,
                seed=seed,
            )
        )
    return cells


def _unique(items):
    seen = []
    for item in items:
        if item not in seen:
            seen.append(item)
    return seen
