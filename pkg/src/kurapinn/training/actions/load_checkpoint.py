import json
import logging

import numpy as np

from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.rules.flatten_params import unflatten_params
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import FormatError
from kurapinn.training.actions.save_checkpoint import CHECKPOINT_FORMAT
from kurapinn.training.models.checkpoint import Checkpoint

logger = logging.getLogger(__name__)


def load_checkpoint(filename: str) -> Checkpoint:
    try:
        with open(filename, "rb") as f:
            header_line = f.readline()
            payload = f.read()
    except FileNotFoundError as e:
        raise FormatError(f"Checkpoint not found: {filename}") from e

    try:
        header = json.loads(header_line.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise FormatError(f"Unreadable checkpoint header in {filename}: {e}") from e
    if header.get("format") != CHECKPOINT_FORMAT:
        raise FormatError(f"{filename} is not a kurapinn checkpoint")

    net_config = NetConfig(
        depth=int(header["depth"]),
        width=int(header["width"]),
        activation=ActivationKind.parse(header["activation"]),
        seed=int(header["seed"]),
    )
    expected_shapes = [[list(w), list(b)] for w, b in _shapes(net_config)]
    if header.get("shapes") != expected_shapes:
        raise FormatError(f"Checkpoint shapes in {filename} do not match its config")
    if len(payload) != 8 * net_config.param_count:
        raise FormatError(
            f"Checkpoint {filename} holds {len(payload)} bytes, expected "
            f"{8 * net_config.param_count}"
        )

    params = unflatten_params(np.frombuffer(payload, dtype="<f8"), net_config)
    problem = header.get("problem")
    logger.info(f"Loaded checkpoint {filename} ({net_config.param_count} parameters)")
    return Checkpoint(
        net_config=net_config,
        params=params,
        problem=ProblemSpec.from_dict(problem) if problem else None,
    )


def _shapes(net_config: NetConfig):
    sizes = net_config.layer_sizes
    return [((n_out, n_in), (n_out,)) for n_in, n_out in zip(sizes[:-1], sizes[1:])]
