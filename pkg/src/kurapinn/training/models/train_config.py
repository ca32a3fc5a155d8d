import typing as T

from dataclassy import dataclass

from kurapinn.runtime.models.errors import ConfigError


@dataclass(frozen=True)
class TrainConfig:
    n_colloc: int = 1024
    n_ic: int = 512
    n_quad: int = 128
    epochs: int = 4096
    learning_rate: float = 1e-3
    lambda_res: float = 1.0
    lambda_ic: float = 1.0
    beta1: float = 0.9
    beta2: float = 0.999
    eps_adam: float = 1e-8
    seed: int = 0
    # Collocation points per tape; bounds memory, not the result
    chunk_size: int = 256
    resample_colloc: bool = False
    early_stop_patience: T.Optional[int] = None
    early_stop_min_delta: float = 0.0
    checkpoint_epochs: T.Tuple[int, ...] = ()
    log_every: int = 256

    def __post_init__(self):
        for name in ("n_colloc", "n_ic", "n_quad", "epochs", "chunk_size"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not self.learning_rate > 0:
            raise ConfigError(f"Learning rate must be > 0, got {self.learning_rate}")
        for name in ("beta1", "beta2"):
            if not 0 < getattr(self, name) < 1:
                raise ConfigError(f"{name} must lie in (0, 1), got {getattr(self, name)}")
        if not self.eps_adam > 0:
            raise ConfigError(f"eps_adam must be > 0, got {self.eps_adam}")
        if self.lambda_res < 0 or self.lambda_ic < 0:
            raise ConfigError("Loss weights must be >= 0")
        if self.early_stop_patience is not None and self.early_stop_patience < 1:
            raise ConfigError("early_stop_patience must be >= 1 when set")

    def to_dict(self) -> dict:
        return dict(
            n_colloc=self.n_colloc,
            n_ic=self.n_ic,
            n_quad=self.n_quad,
            epochs=self.epochs,
            learning_rate=self.learning_rate,
            lambda_res=self.lambda_res,
            lambda_ic=self.lambda_ic,
            beta1=self.beta1,
            beta2=self.beta2,
            eps_adam=self.eps_adam,
            seed=self.seed,
            resample_colloc=self.resample_colloc,
            early_stop_patience=self.early_stop_patience,
            early_stop_min_delta=self.early_stop_min_delta,
        )
