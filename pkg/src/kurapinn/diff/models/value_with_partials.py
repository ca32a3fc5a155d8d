from dataclassy import dataclass


@dataclass(frozen=True)
class ValueWithPartials:
    u: float
    du_dtheta: float
    du_dt: float
