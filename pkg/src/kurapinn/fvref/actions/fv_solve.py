import logging

import numpy as np

from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.fvref.models.ref_solution import RefSolution
from kurapinn.fvref.rules.cell_velocity import cell_velocity
from kurapinn.fvref.rules.project_initial_condition import project_initial_condition
from kurapinn.fvref.rules.stable_time_step import stable_time_step
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import (
    CflViolationError,
    ConfigError,
    GridMismatchError,
    NonFiniteError,
)

logger = logging.getLogger(__name__)

NEGATIVE_TOLERANCE = -1e-10


def fv_solve(spec: ProblemSpec, grid: FvGrid, cfl: float = 0.9) -> RefSolution:
    """Explicit finite-volume solve with a global Lax-Friedrichs flux.

    The internal step follows the CFL bound; snapshots at the stored levels are
    linear interpolations in time between the two substeps that bracket them.
    Every step is checked against the Courant bound before it is taken.
    """
    if not 0 < cfl <= 1:
        raise ConfigError(f"CFL number must lie in (0, 1], got {cfl}")
    if abs(grid.T - spec.T) > 1e-12 * spec.T:
        raise GridMismatchError(f"Grid horizon {grid.T} differs from problem T={spec.T}")

    times = grid.times
    dtheta = grid.dtheta
    values = np.empty((grid.M, grid.n_levels), dtype=np.float64)

    u = project_initial_condition(spec, grid)
    values[:, 0] = u
    t = 0.0
    level = 1
    n_substeps = 0
    min_value = float(u.min())

    while level < grid.n_levels:
        v = cell_velocity(u, grid, spec.K)
        alpha = float(np.max(np.abs(v)))
        dt = stable_time_step(alpha, dtheta, cfl, spec.T - t)
        courant = dt * alpha / dtheta
        if courant > 1.0 + 1e-12:
            raise CflViolationError(
                f"Courant number {courant:.4f} exceeds 1 at t={t:.6f}"
            )

        f = v * u
        # F_{j+1/2}, periodic
        flux = 0.5 * (f + np.roll(f, -1)) - 0.5 * alpha * (np.roll(u, -1) - u)
        u_next = u - dt / dtheta * (flux - np.roll(flux, 1))
        t_next = t + dt
        n_substeps += 1

        if not np.all(np.isfinite(u_next)):
            raise NonFiniteError(f"Reference solution became non-finite at t={t_next}")
        min_value = min(min_value, float(u_next.min()))

        while level < grid.n_levels and times[level] <= t_next + 1e-12 * spec.T:
            weight = min(max((times[level] - t) / dt, 0.0), 1.0)
            values[:, level] = (1.0 - weight) * u + weight * u_next
            level += 1

        u, t = u_next, t_next

    negative_overshoot = min_value < NEGATIVE_TOLERANCE
    if negative_overshoot:
        logger.warning(f"Reference solution undershoots to {min_value:.3e}")

    ref = RefSolution(
        grid=grid,
        values=values,
        problem=spec,
        cfl=cfl,
        negative_overshoot=negative_overshoot,
        n_substeps=n_substeps,
    )
    logger.info(
        f"Solved reference ({spec.ic.value}, M={grid.M}, {grid.n_levels} levels) "
        f"in {n_substeps} substeps; mass {ref.masses[0]:.12f} -> {ref.masses[-1]:.12f}"
    )
    return ref
