import typing as T

from dataclassy import dataclass

from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.physics.models.problem_spec import ProblemSpec


@dataclass(eq=False)
class Checkpoint:
    net_config: NetConfig
    params: ParamSet
    problem: T.Optional[ProblemSpec] = None
