import enum

from kurapinn.runtime.models.errors import ConfigError


class ActivationKind(enum.Enum):
    Tanh = "tanh"
    Sin = "sin"
    Relu = "relu"

    @classmethod
    def parse(cls, token: str) -> "ActivationKind":
        normalized = token.strip().lower()
        aliases = {"sine": "sin"}
        normalized = aliases.get(normalized, normalized)
        for kind in cls:
            if kind.value == normalized:
                return kind
        raise ConfigError(
            f"Unknown activation '{token}', expected one of: "
            + ", ".join(kind.value for kind in cls)
        )
