import logging
import os
import typing as T

import numpy as np

from kurapinn.evalx.actions.write_error_report import write_error_report
from kurapinn.evalx.actions.write_profile import write_profile
from kurapinn.evalx.models.oversmoothing_check import OversmoothingCheck
from kurapinn.evalx.rules.energy_norm import energy_norm
from kurapinn.evalx.rules.oversmoothing_check import oversmoothing_check
from kurapinn.evalx.rules.profile import profile
from kurapinn.fvref.models.ref_solution import RefSolution
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.physics.models.problem_spec import ProblemSpec

logger = logging.getLogger(__name__)

DEFAULT_PLOT_TIMES = (0.0, 0.25, 0.5, 0.75, 1.0)


def write_plot_data(
    out_dir: str,
    params: ParamSet,
    config: NetConfig,
    ref: T.Optional[RefSolution],
    T_final: float,
    M_plot: int = 2048,
    ic: InitialConditionKind = InitialConditionKind.Polynomial,
    problem: T.Optional[ProblemSpec] = None,
) -> T.Optional[OversmoothingCheck]:
    """Write one CSV per figure preset into `out_dir`.

    - solution.csv: network profiles at fractions of T on M_plot points
    - reference.csv: reference cell averages at the nearest stored levels
    - error.csv (+ error.json): RMS error per stored level
    For the piecewise initial condition the t=0 oversmoothing check is returned.
    A `problem` other than the reference's is rejected before anything is written.
    """
    error = energy_norm(params, config, ref, problem=problem) if ref is not None else None
    t_values = np.asarray(DEFAULT_PLOT_TIMES) * T_final
    table = profile(params, config, t_values, M_plot)

    os.makedirs(out_dir, exist_ok=True)
    write_profile(
        table.theta, table.t_values, table.values, os.path.join(out_dir, "solution.csv")
    )

    if ref is not None:
        levels = [int(np.argmin(np.abs(ref.grid.times - t))) for t in t_values]
        write_profile(
            ref.grid.centers,
            ref.grid.times[levels],
            ref.values[:, levels],
            os.path.join(out_dir, "reference.csv"),
        )
        write_error_report(error, os.path.join(out_dir, "error.csv"))

    if ic is not InitialConditionKind.Piecewise:
        return None
    check = oversmoothing_check(table.theta, table.values[:, 0])
    logger.info(
        f"t=0 jump width {check.width_in_cells:.1f} plot cells, "
        f"TV ratio {check.tv_ratio:.2f}"
    )
    if not check.tv_in_band:
        logger.warning(f"Total variation ratio {check.tv_ratio:.2f} outside [0.8, 3.0]")
    return check
