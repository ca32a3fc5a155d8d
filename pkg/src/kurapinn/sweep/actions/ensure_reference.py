import logging
import os

from kurapinn.fvref.actions.fv_solve import fv_solve
from kurapinn.fvref.actions.load_ref_solution import load_ref_solution
from kurapinn.fvref.actions.save_ref_solution import save_ref_solution
from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.fvref.models.ref_solution import RefSolution
from kurapinn.physics.models.problem_spec import ProblemSpec

logger = logging.getLogger(__name__)

REFERENCE_FILENAME = "reference.fvb"


def ensure_reference(
    out_dir: str, spec: ProblemSpec, grid: FvGrid, cfl: float
) -> RefSolution:
    """Load the stored reference for `spec`, or solve and store it."""
    filename = os.path.join(out_dir, REFERENCE_FILENAME)
    if os.path.exists(filename):
        ref = load_ref_solution(filename)
        if (
            ref.problem == spec
            and ref.grid == grid
            and abs(ref.cfl - cfl) <= 1e-12
        ):
            logger.info(f"Reusing reference solution {filename}")
            return ref
        logger.warning(f"Stored reference {filename} is for another problem; re-solving")

    ref = fv_solve(spec, grid, cfl=cfl)
    save_ref_solution(ref, filename)
    return ref
