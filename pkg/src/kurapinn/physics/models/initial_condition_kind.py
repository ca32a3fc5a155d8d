import enum

from kurapinn.runtime.models.errors import ConfigError


class InitialConditionKind(enum.Enum):
    Polynomial = "poly"
    Dirac = "dirac"
    Piecewise = "piecewise"

    @classmethod
    def parse(cls, token: str) -> "InitialConditionKind":
        normalized = token.strip().lower()
        aliases = {"polynomial": "poly", "pw": "piecewise"}
        normalized = aliases.get(normalized, normalized)
        for kind in cls:
            if kind.value == normalized:
                return kind
        raise ConfigError(
            f"Unknown initial condition '{token}', expected one of: "
            + ", ".join(kind.value for kind in cls)
        )
