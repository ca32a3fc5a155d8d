import json
import logging
import os
import typing as T

from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.net.rules.flatten_params import flatten_params
from kurapinn.physics.models.problem_spec import ProblemSpec

logger = logging.getLogger(__name__)

CHECKPOINT_FORMAT = "kurapinn-ckpt"
CHECKPOINT_VERSION = 1


def save_checkpoint(
    filename: str,
    params: ParamSet,
    net_config: NetConfig,
    problem: T.Optional[ProblemSpec] = None,
) -> None:
    """Write a JSON header line followed by the flat little-endian float64 parameters."""
    header = dict(
        format=CHECKPOINT_FORMAT,
        version=CHECKPOINT_VERSION,
        depth=net_config.depth,
        width=net_config.width,
        activation=net_config.activation.value,
        seed=net_config.seed,
        init_scheme=net_config.init_scheme,
        param_count=params.param_count,
        shapes=[[list(w), list(b)] for w, b in params.shapes],
        problem=problem.to_dict() if problem else None,
    )
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    with open(filename, "wb") as f:
        f.write(json.dumps(header, sort_keys=True).encode("utf-8") + b"\n")
        f.write(flatten_params(params).astype("<f8").tobytes())
    logger.info(f"Saved checkpoint with {params.param_count} parameters to {filename}")
