import typing as T

from dataclassy import replace

from kurapinn.configs.models.run_config import RunConfig
from kurapinn.configs.utils.resolve_path import resolve_path
from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.runtime.utils.derive_seed import derive_seed


def apply_overrides(config: RunConfig, overrides: T.Dict[str, T.Any]) -> RunConfig:
    """Return `config` with the command-line values in `overrides` applied.

    Keys with value None are ignored. Network and training flags also narrow the
    sweep grid to the given value.
    """
    given = {key: value for key, value in overrides.items() if value is not None}

    problem_changes = {}
    if "ic" in given:
        problem_changes["ic"] = InitialConditionKind.parse(given["ic"])
    for name in ("K", "eps"):
        if name in given:
            problem_changes[name] = float(given[name])
    problem = config.problem
    if problem_changes:
        problem = replace(problem, **problem_changes)

    net_changes = {}
    sweep_changes = {}
    if "activation" in given:
        activation = ActivationKind.parse(given["activation"])
        net_changes["activation"] = activation
        sweep_changes["activations"] = (activation,)
    for name in ("depth", "width"):
        if name in given:
            net_changes[name] = int(given[name])
    if "depth" in given or "width" in given:
        depth = net_changes.get("depth", config.net.depth)
        width = net_changes.get("width", config.net.width)
        sweep_changes["shapes"] = ((depth, width),)

    train_changes = {}
    if "epochs" in given:
        train_changes["epochs"] = int(given["epochs"])
        sweep_changes["epoch_budgets"] = (int(given["epochs"]),)
    if "colloc" in given:
        train_changes["n_colloc"] = int(given["colloc"])
        sweep_changes["colloc_counts"] = (int(given["colloc"]),)
    if "quad" in given:
        train_changes["n_quad"] = int(given["quad"])
    if "seed" in given:
        seed = int(given["seed"])
        train_changes["seed"] = seed
        net_changes["seed"] = derive_seed(seed, "init")
        sweep_changes["seeds"] = (seed,)

    options_changes = {}
    if "out_dir" in given:
        options_changes["out_dir"] = resolve_path(given["out_dir"])
    if "plot_data" in given:
        options_changes["plot_data"] = resolve_path(given["plot_data"])
    if "parallelism" in given:
        options_changes["parallelism"] = int(given["parallelism"])
    if "cfl" in given:
        options_changes["cfl"] = float(given["cfl"])
    if given.get("force"):
        options_changes["force"] = True

    return replace(
        config,
        problem=problem,
        net=replace(config.net, **net_changes) if net_changes else config.net,
        train=replace(config.train, **train_changes) if train_changes else config.train,
        sweep=replace(config.sweep, **sweep_changes) if sweep_changes else config.sweep,
        options=replace(config.options, **options_changes),
    )
