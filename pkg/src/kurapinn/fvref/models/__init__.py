from .convergence_study import ConvergenceRow, ConvergenceStudy  # noqa
from .fv_grid import FvGrid  # noqa
from .ref_solution import RefSolution  # noqa
