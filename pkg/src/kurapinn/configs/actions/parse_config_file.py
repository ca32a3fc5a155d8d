import logging
import typing as T
from pathlib import Path

import yaml

from kurapinn.configs.models.options import Options
from kurapinn.configs.models.run_config import DEFAULT_DEPTH, DEFAULT_WIDTH, RunConfig
from kurapinn.configs.rules.default_out_dir import default_out_dir
from kurapinn.configs.utils.resolve_path import resolve_path
from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.models.net_config import NetConfig
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import ConfigError
from kurapinn.sweep.models.sweep_grid import SweepGrid
from kurapinn.training.models.train_config import TrainConfig

logger = logging.getLogger(__name__)

SECTIONS = ("problem", "net", "train", "sweep", "reference", "options")


def parse_config_file(config_file: str) -> RunConfig:
    normalized_config_file = resolve_path(config_file)
    logger.info(f"Parsing config file: {normalized_config_file}")

    try:
        with open(normalized_config_file, "r") as f:
            config_data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {normalized_config_file}")
    except yaml.YAMLError as e:
        raise ConfigError(f"Error parsing config file: {e}")

    if not isinstance(config_data, dict):
        raise ConfigError(f"Config file must hold a mapping: {normalized_config_file}")
    unknown = sorted(set(config_data) - set(SECTIONS))
    if unknown:
        raise ConfigError(f"Unknown config sections: {', '.join(unknown)}")

    source_dirname = str(Path(normalized_config_file).parent)
    return config_from_dict(config_data, source_dirname=source_dirname)


def config_from_dict(config_data: dict, source_dirname: str = "") -> RunConfig:
    problem = ProblemSpec.from_dict(_section(config_data, "problem"))
    config = RunConfig(
        source_dirname=source_dirname,
        problem=problem,
        net=_parse_net(_section(config_data, "net")),
        train=_parse_train(_section(config_data, "train")),
        sweep=_parse_sweep(_section(config_data, "sweep")),
        ref_grid=_parse_reference(_section(config_data, "reference"), problem),
        options=_parse_options(_section(config_data, "options"), source_dirname),
    )
    logger.debug(f"Parsed run config: out_dir={config.options.out_dir}")
    return config


def _section(config_data: dict, name: str) -> dict:
    section = config_data.get(name) or {}
    if not isinstance(section, dict):
        raise ConfigError(f"Config section '{name}' must be a mapping")
    return section


def _parse_net(net_data: dict) -> NetConfig:
    return NetConfig(
        depth=int(net_data.get("depth", DEFAULT_DEPTH)),
        width=int(net_data.get("width", DEFAULT_WIDTH)),
        activation=ActivationKind.parse(str(net_data.get("activation", "tanh"))),
        seed=int(net_data.get("seed", 0)),
    )


def _parse_train(train_data: dict) -> TrainConfig:
    fields = set(TrainConfig.__annotations__)
    unknown = sorted(set(train_data) - fields)
    if unknown:
        raise ConfigError(f"Unknown train settings: {', '.join(unknown)}")
    values = dict(train_data)
    if "checkpoint_epochs" in values:
        values["checkpoint_epochs"] = tuple(int(x) for x in values["checkpoint_epochs"])
    return TrainConfig(**values)


def _parse_sweep(sweep_data: dict) -> SweepGrid:
    values: T.Dict[str, T.Any] = {}
    if "activations" in sweep_data:
        values["activations"] = tuple(
            ActivationKind.parse(str(x)) for x in sweep_data["activations"]
        )
    if "shapes" in sweep_data:
        values["shapes"] = tuple(
            (int(depth), int(width)) for depth, width in sweep_data["shapes"]
        )
    for name in ("epoch_budgets", "colloc_counts", "seeds"):
        if name in sweep_data:
            values[name] = tuple(int(x) for x in sweep_data[name])
    return SweepGrid(**values)


def _parse_reference(reference_data: dict, problem: ProblemSpec) -> FvGrid:
    return FvGrid(
        M=int(reference_data.get("M", 512)),
        n_levels=int(reference_data.get("n_levels", 205)),
        T=problem.T,
    )


def _parse_options(options_data: dict, source_dirname: str) -> Options:
    out_dir = options_data.get("out_dir", "")
    plot_data = options_data.get("plot_data", "")
    parallelism = options_data.get("parallelism")
    return Options(
        out_dir=(
            resolve_path(out_dir, base_dir=source_dirname)
            if out_dir
            else default_out_dir()
        ),
        parallelism=int(parallelism) if parallelism is not None else None,
        force=bool(options_data.get("force", False)),
        cfl=float(options_data.get("cfl", 0.9)),
        plot_data=(
            resolve_path(plot_data, base_dir=source_dirname) if plot_data else None
        ),
    )
