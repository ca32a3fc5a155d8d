import typing as T

from dataclassy import dataclass


@dataclass(frozen=True)
class ConvergenceRow:
    M: int
    M_fine: int
    error: float
    order: T.Optional[float] = None


@dataclass(eq=False)
class ConvergenceStudy:
    rows: T.List[ConvergenceRow]
    fitted_order: T.Optional[float] = None
