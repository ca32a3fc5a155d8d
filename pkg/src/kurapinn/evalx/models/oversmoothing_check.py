from dataclassy import dataclass


@dataclass(frozen=True)
class OversmoothingCheck:
    transition_width: float
    width_in_cells: float
    tv_ratio: float
    oversmoothed: bool
    tv_in_band: bool
