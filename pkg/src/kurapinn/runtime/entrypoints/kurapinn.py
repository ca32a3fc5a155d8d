#!/usr/bin/env python3
"""
kurapinn - Physics-informed networks for the Kuramoto density equation
"""

import argparse
import json
import logging
import os
import sys

from kurapinn.configs.actions.parse_config_file import (
    config_from_dict,
    parse_config_file,
)
from kurapinn.configs.rules.apply_overrides import apply_overrides
from kurapinn.evalx.actions.write_error_report import write_error_report
from kurapinn.evalx.actions.write_plot_data import write_plot_data
from kurapinn.evalx.rules.energy_norm import energy_norm
from kurapinn.fvref.actions.fv_solve import fv_solve
from kurapinn.fvref.actions.load_ref_solution import load_ref_solution
from kurapinn.fvref.actions.save_ref_solution import save_ref_solution
from kurapinn.fvref.actions.write_convergence_study import write_convergence_study
from kurapinn.fvref.rules.fv_convergence_study import fv_convergence_study
from kurapinn.runtime.models.errors import KurapinnError
from kurapinn.sampling.actions.write_points_csv import write_points_csv
from kurapinn.sampling.rules.ic_sample import ic_sample
from kurapinn.sampling.rules.lhs_sample import lhs_sample
from kurapinn.sweep.actions.ledger import read_ledger
from kurapinn.sweep.actions.run_sweep import default_parallelism, run_sweep
from kurapinn.sweep.rules.report import REPORT_FORMATS, report
from kurapinn.training.actions.load_checkpoint import load_checkpoint
from kurapinn.training.actions.save_checkpoint import save_checkpoint
from kurapinn.training.actions.train import train
from kurapinn.training.actions.write_loss_history import write_loss_history

logger = logging.getLogger(__name__)

OVERRIDE_FLAGS = (
    "activation",
    "depth",
    "width",
    "epochs",
    "colloc",
    "quad",
    "ic",
    "K",
    "eps",
    "seed",
    "cfl",
    "out_dir",
    "parallelism",
    "force",
    "plot_data",
)


def _add_config_flags(parser):
    parser.add_argument("--config", help="Path to a YAML run config file")
    parser.add_argument("--out-dir", help="Output directory (default: $KURAPINN_OUT_DIR)")
    parser.add_argument("--activation", help="Activation: tanh, sin or relu")
    parser.add_argument("--depth", type=int, help="Number of hidden layers")
    parser.add_argument("--width", type=int, help="Neurons per hidden layer")
    parser.add_argument("--epochs", type=int, help="Number of training epochs")
    parser.add_argument("--colloc", type=int, help="Number of collocation points")
    parser.add_argument("--quad", type=int, help="Number of quadrature nodes")
    parser.add_argument("--ic", help="Initial condition: poly, dirac or piecewise")
    parser.add_argument("--K", type=float, help="Coupling strength")
    parser.add_argument("--eps", type=float, help="Mollifier half-width (dirac only)")
    parser.add_argument("--seed", type=int, help="Base random seed")
    parser.add_argument("--cfl", type=float, help="CFL number of the reference solver")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Increase verbosity"
    )


def _parse_args(argv=None):
    parser = argparse.ArgumentParser(
        description="kurapinn - Physics-informed networks for the Kuramoto density equation"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve_ref = subparsers.add_parser("solve-ref", help="Compute the FV reference")
    _add_config_flags(solve_ref)
    solve_ref.add_argument("--output", help="Reference file (.fvb or .csv)")
    solve_ref.add_argument(
        "--convergence",
        help="Comma-separated cell counts for a self-convergence study",
    )

    train_parser = subparsers.add_parser("train", help="Train a single configuration")
    _add_config_flags(train_parser)
    train_parser.add_argument(
        "--reference", help="Reference file to evaluate the trained network against"
    )

    sweep = subparsers.add_parser("sweep", help="Run the configuration grid")
    _add_config_flags(sweep)
    sweep.add_argument("--parallelism", type=int, help="Cells trained concurrently")
    sweep.add_argument(
        "--force", action="store_true", default=None, help="Rerun recorded cells"
    )

    eval_parser = subparsers.add_parser("eval", help="Energy norm of a checkpoint")
    _add_config_flags(eval_parser)
    eval_parser.add_argument("checkpoint", help="Checkpoint file")
    eval_parser.add_argument("reference", help="Reference file (.fvb or .csv)")
    eval_parser.add_argument("--output", help="Error report CSV")

    report_parser = subparsers.add_parser("report", help="Summarize a sweep store")
    _add_config_flags(report_parser)
    report_parser.add_argument("--format", choices=REPORT_FORMATS, default="summary")

    profile_parser = subparsers.add_parser("profile", help="Write plot data")
    _add_config_flags(profile_parser)
    profile_parser.add_argument("checkpoint", help="Checkpoint file")
    profile_parser.add_argument("--reference", help="Reference file (.fvb or .csv)")
    profile_parser.add_argument("--plot-data", help="Directory for the plot CSVs")
    profile_parser.add_argument(
        "--M-plot", type=int, default=2048, help="Number of plot points in theta"
    )

    return parser.parse_args(argv)


def _setup_logging(verbosity):
    log_level = logging.WARNING
    if verbosity >= 2:
        log_level = logging.DEBUG
    elif verbosity >= 1:
        log_level = logging.INFO

    logging.basicConfig(level=log_level, format="%(levelname)s: %(message)s")


def _load_config(args):
    config = parse_config_file(args.config) if args.config else config_from_dict({})
    overrides = {name: getattr(args, name, None) for name in OVERRIDE_FLAGS}
    return apply_overrides(config, overrides)


def _run_solve_ref(args, config):
    logger.info("Running solve-ref command")
    ref = fv_solve(config.problem, config.ref_grid, cfl=config.options.cfl)
    output = args.output or os.path.join(config.options.out_dir, "reference.fvb")
    save_ref_solution(ref, output)
    print(f"Wrote reference ({ref.grid.M} x {ref.grid.n_levels}) to {output}")
    if ref.negative_overshoot:
        print("warning: negative density overshoot below -1e-10")

    if args.convergence:
        M_list = [int(x) for x in args.convergence.split(",")]
        study = fv_convergence_study(config.problem, M_list, cfl=config.options.cfl)
        filename = os.path.join(os.path.dirname(output), "convergence.csv")
        write_convergence_study(study, filename)
        for row in study.rows:
            order = "-" if row.order is None else f"{row.order:.3f}"
            print(f"  M={row.M:5d}  error={row.error:.3e}  order={order}")
        if study.fitted_order is not None:
            print(f"Fitted order: {study.fitted_order:.3f}")
    return 0


def _run_train(args, config):
    logger.info("Running train command")
    net, problem, train_config = config.net, config.problem, config.train
    run_dir = os.path.join(
        config.options.out_dir,
        "runs",
        f"{net.activation.value}-L{net.depth}-n{net.width}"
        f"-e{train_config.epochs}-r{train_config.n_colloc}-s{train_config.seed}",
    )
    result = train(net, problem, train_config)

    save_checkpoint(os.path.join(run_dir, "model.ckpt"), result.params, net, problem)
    for epoch, params in sorted(result.checkpoints.items()):
        filename = os.path.join(run_dir, f"model-e{epoch}.ckpt")
        save_checkpoint(filename, params, net, problem)
    write_loss_history(result.history, os.path.join(run_dir, "loss_history.csv"))
    write_points_csv(
        lhs_sample(train_config.n_colloc, problem.T, result.colloc_seed),
        os.path.join(run_dir, "colloc.csv"),
    )
    write_points_csv(
        ic_sample(train_config.n_ic, result.ic_seed), os.path.join(run_dir, "ic.csv")
    )

    summary = dict(
        net=dict(
            depth=net.depth,
            width=net.width,
            activation=net.activation.value,
            seed=net.seed,
            init_scheme=net.init_scheme,
        ),
        train=train_config.to_dict(),
        problem=problem.to_dict(),
        wall_clock_seconds=result.wall_clock_seconds,
        epochs_completed=result.epochs_completed,
        stopped_early=result.stopped_early,
        colloc_seed=result.colloc_seed,
        ic_seed=result.ic_seed,
        rng_algorithm=result.rng_algorithm,
        final_l_res=result.history.l_res[-1],
        final_l_ic=result.history.l_ic[-1],
        final_l_total=result.history.l_total[-1],
    )

    if args.reference:
        ref = load_ref_solution(args.reference)
        error = energy_norm(result.params, net, ref, problem=problem)
        write_error_report(error, os.path.join(run_dir, "error.csv"))
        summary["energy_norm"] = error.energy_norm
        summary["checkpoint_energy_norms"] = {
            str(epoch): energy_norm(params, net, ref, problem=problem).energy_norm
            for epoch, params in sorted(result.checkpoints.items())
        }

    with open(os.path.join(run_dir, "train.json"), "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2)

    print(
        f"Trained {result.epochs_completed} epochs in {result.wall_clock_seconds:.1f} s, "
        f"L_total={summary['final_l_total']:.6e}"
    )
    if "energy_norm" in summary:
        print(f"Energy norm: {summary['energy_norm']:.6e}")
    print(f"Outputs in {run_dir}")
    return 0


def _run_sweep(args, config):
    logger.info("Running sweep command")
    parallelism = config.options.parallelism or default_parallelism()
    records = run_sweep(
        config.sweep,
        config.problem,
        parallelism,
        config.options.out_dir,
        template=config.train,
        ref_grid=config.ref_grid,
        cfl=config.options.cfl,
        force=config.options.force,
    )
    print(report(records))
    return 0


def _run_eval(args, config):
    logger.info("Running eval command")
    checkpoint = load_checkpoint(args.checkpoint)
    ref = load_ref_solution(args.reference)
    error = energy_norm(
        checkpoint.params, checkpoint.net_config, ref, problem=checkpoint.problem
    )
    if args.output:
        write_error_report(error, args.output)
    print(f"Energy norm: {error.energy_norm:.6e}")
    print(f"Max abs error: {error.max_abs_error:.6e}")
    if error.tv_ratio is not None:
        print(f"TV ratio: {error.tv_ratio:.3f}")
    return 0


def _run_report(args, config):
    logger.info("Running report command")
    records = read_ledger(config.options.out_dir)
    print(report(records, format=args.format), end="" if args.format == "csv" else "\n")
    return 0


def _run_profile(args, config):
    logger.info("Running profile command")
    checkpoint = load_checkpoint(args.checkpoint)
    problem = checkpoint.problem or config.problem
    ref = load_ref_solution(args.reference) if args.reference else None
    plot_dir = config.options.plot_data or os.path.join(
        config.options.out_dir, "plot-data"
    )
    check = write_plot_data(
        plot_dir,
        checkpoint.params,
        checkpoint.net_config,
        ref,
        T_final=problem.T,
        M_plot=args.M_plot,
        ic=problem.ic,
        problem=checkpoint.problem,
    )
    print(f"Wrote plot data to {plot_dir}")
    if check is not None:
        print(
            f"Transition width: {check.width_in_cells:.1f} plot cells, "
            f"TV ratio: {check.tv_ratio:.3f}, "
            f"oversmoothed: {'yes' if check.oversmoothed else 'no'}"
        )
    return 0


COMMANDS = {
    "solve-ref": _run_solve_ref,
    "train": _run_train,
    "sweep": _run_sweep,
    "eval": _run_eval,
    "report": _run_report,
    "profile": _run_profile,
}


def main(argv=None):
    args = _parse_args(argv)
    _setup_logging(args.verbose)

    try:
        config = _load_config(args)
        return COMMANDS[args.command](args, config)
    except KurapinnError as e:
        print(f"error: {e.category}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
