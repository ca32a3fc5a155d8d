import os
from pathlib import Path

from kurapinn.runtime.models.errors import ConfigError


def resolve_path(path: str, base_dir: str = "") -> str:
    """Absolute form of an output or config path.

    `~` and `$VARS` are expanded in both arguments. A relative `path` is taken
    relative to `base_dir` when given, else to the working directory.
    """
    if not str(path).strip():
        raise ConfigError("Empty path in run configuration")
    resolved = Path(os.path.expandvars(str(path))).expanduser()
    if base_dir and not resolved.is_absolute():
        resolved = Path(os.path.expandvars(base_dir)).expanduser() / resolved
    return str(resolved.resolve())
