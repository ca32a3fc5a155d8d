import logging
import math
import typing as T

import numpy as np

from kurapinn.fvref.actions.fv_solve import fv_solve
from kurapinn.fvref.models.convergence_study import ConvergenceRow, ConvergenceStudy
from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import ConfigError

logger = logging.getLogger(__name__)


def fv_convergence_study(
    spec: ProblemSpec, M_list: T.Sequence[int], cfl: float = 0.9
) -> ConvergenceStudy:
    """L¹ self-convergence at t=T between successive refinements in M_list."""
    M_list = list(M_list)
    if len(M_list) < 2:
        raise ConfigError("A convergence study needs at least two grid sizes")
    for coarse, fine in zip(M_list[:-1], M_list[1:]):
        if fine < coarse or fine % coarse:
            raise ConfigError(
                f"Grid sizes must be ascending multiples of each other, got {M_list}"
            )

    finals = {}
    for M in sorted(set(M_list)):
        ref = fv_solve(spec, FvGrid(M=M, n_levels=2, T=spec.T), cfl=cfl)
        finals[M] = ref.values[:, -1]

    rows = []
    previous = None
    for coarse, fine in zip(M_list[:-1], M_list[1:]):
        restricted = finals[fine].reshape(coarse, fine // coarse).mean(axis=1)
        error = float(np.sum(np.abs(finals[coarse] - restricted)) * 2 * math.pi / coarse)
        order = None
        if previous is not None and previous > 0 and error > 0:
            order = math.log(previous / error, fine / coarse)
        rows.append(ConvergenceRow(M=coarse, M_fine=fine, error=error, order=order))
        logger.info(f"M={coarse} vs {fine}: L1 error {error:.3e}, order {order}")
        previous = error

    return ConvergenceStudy(rows=rows, fitted_order=_fitted_order(rows))


def _fitted_order(rows: T.List[ConvergenceRow]) -> T.Optional[float]:
    usable = [row for row in rows if row.error > 0]
    if len(usable) < 2:
        return None
    log_m = np.log([row.M for row in usable])
    log_e = np.log([row.error for row in usable])
    slope = np.polyfit(log_m, log_e, 1)[0]
    return float(-slope)
