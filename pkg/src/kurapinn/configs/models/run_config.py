from dataclassy import dataclass

from kurapinn.configs.models.options import Options
from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.net.models.net_config import NetConfig
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.sweep.models.sweep_grid import SweepGrid
from kurapinn.training.models.train_config import TrainConfig

DEFAULT_DEPTH = 4
DEFAULT_WIDTH = 128


@dataclass
class RunConfig:
    source_dirname: str = ""
    problem: ProblemSpec = ProblemSpec()
    net: NetConfig = NetConfig(depth=DEFAULT_DEPTH, width=DEFAULT_WIDTH)
    train: TrainConfig = TrainConfig()
    sweep: SweepGrid = SweepGrid()
    ref_grid: FvGrid = FvGrid()
    options: Options = Options()
