import typing as T

from dataclassy import dataclass

from kurapinn.net.models.param_set import ParamSet
from kurapinn.training.models.loss_history import LossHistory


@dataclass(eq=False)
class TrainReport:
    history: LossHistory
    wall_clock_seconds: float
    params: ParamSet
    epochs_completed: int
    checkpoints: T.Dict[int, ParamSet] = {}
    stopped_early: bool = False
    colloc_seed: int = 0
    ic_seed: int = 0
    rng_algorithm: str = "PCG64"
