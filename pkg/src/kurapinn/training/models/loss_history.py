import typing as T

from dataclassy import dataclass


@dataclass
class LossHistory:
    l_res: T.List[float] = []
    l_ic: T.List[float] = []
    l_total: T.List[float] = []

    def __len__(self):
        return len(self.l_total)

    def append(self, l_res: float, l_ic: float, l_total: float) -> None:
        self.l_res.append(l_res)
        self.l_ic.append(l_ic)
        self.l_total.append(l_total)
