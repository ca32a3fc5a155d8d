from dataclassy import dataclass

from kurapinn.net.models.activation_kind import ActivationKind


@dataclass(frozen=True)
class SweepCell:
    activation: ActivationKind
    depth: int
    width: int
    epochs: int
    n_colloc: int
    seed: int

    @property
    def label(self) -> str:
        return (
            f"{self.activation.value}-L{self.depth}-n{self.width}"
            f"-e{self.epochs}-r{self.n_colloc}-s{self.seed}"
        )
