import logging
import typing as T

from kurapinn.evalx.models.error_report import ErrorReport
from kurapinn.evalx.rules.error_report_from_fields import error_report_from_fields
from kurapinn.evalx.rules.predict_on_grid import predict_on_grid
from kurapinn.fvref.models.ref_solution import RefSolution
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import GridMismatchError

logger = logging.getLogger(__name__)


def energy_norm(
    params: ParamSet,
    config: NetConfig,
    ref: RefSolution,
    problem: T.Optional[ProblemSpec] = None,
) -> ErrorReport:
    """Compare u_Φ with the reference at every reference node (no interpolation).

    `problem` is the problem the network was trained on; a different T, K or
    initial condition than the reference's is rejected.
    """
    if problem is not None:
        _check_same_problem(problem, ref)

    predicted = predict_on_grid(params, config, ref.grid)
    report = error_report_from_fields(predicted, ref.values, times=ref.grid.times)
    logger.info(
        f"Energy norm {report.energy_norm:.4e} over {report.n_eval} nodes "
        f"(max abs error {report.max_abs_error:.4e})"
    )
    return report


def _check_same_problem(problem: ProblemSpec, ref: RefSolution) -> None:
    reference = ref.problem
    mismatches = []
    if abs(problem.T - ref.grid.T) > 1e-12 * ref.grid.T:
        mismatches.append(f"T {problem.T} != {ref.grid.T}")
    if abs(problem.K - reference.K) > 1e-12 * reference.K:
        mismatches.append(f"K {problem.K} != {reference.K}")
    if problem.ic is not reference.ic:
        mismatches.append(f"ic {problem.ic.value} != {reference.ic.value}")
    if mismatches:
        raise GridMismatchError(
            "Network and reference solve different problems: " + ", ".join(mismatches)
        )
