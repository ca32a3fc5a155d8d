import typing as T

from dataclassy import dataclass


@dataclass
class Options:
    out_dir: str = ""
    parallelism: T.Optional[int] = None
    force: bool = False
    cfl: float = 0.9
    plot_data: T.Optional[str] = None
