"""
Command-line front end.

Every sub-command writes its result files and prints a report to stdout;
log output goes to stderr (or GROVER_SCHEDULES_LOG_FILE). Library errors
are reported as ``error: <message>`` with exit status 2.
"""
import argparse
import logging
import sys
from typing import List, Optional

from mcp_grover_schedules.features.montecarlo.formatting import (
    format_simulation_report,
)
from mcp_grover_schedules.features.montecarlo.simulate import (
    simulate,
    success_step_histogram,
)
from mcp_grover_schedules.features.optimizer.common import OptimizerConfig
from mcp_grover_schedules.features.optimizer.formatting import (
    format_run_report,
)
from mcp_grover_schedules.features.optimizer.sweep import optimize
from mcp_grover_schedules.features.prior.distributions import (
    load_prior,
    table1_specs,
)
from mcp_grover_schedules.features.prior.formatting import (
    format_prior_summary,
)
from mcp_grover_schedules.features.prior.io import write_prior
from mcp_grover_schedules.features.report.fit import (
    fit_linear,
    format_fit,
    write_fit,
    write_plot_data,
)
from mcp_grover_schedules.features.report.table import (
    build_table,
    format_table,
    read_table,
    write_table,
)
from mcp_grover_schedules.features.schedule.cost import expected_cost
from mcp_grover_schedules.features.schedule.formatting import (
    format_cost_report,
)
from mcp_grover_schedules.features.schedule.io import (
    read_schedule,
    write_schedule,
)
from mcp_grover_schedules.features.statevector.evolution import (
    check_against_closed_form,
)
from mcp_grover_schedules.features.statevector.formatting import (
    format_check,
    max_error,
)
from mcp_grover_schedules.utils.config import Settings, get_settings
from mcp_grover_schedules.utils.errors import GroverScheduleError
from mcp_grover_schedules.utils.log import configure_logging

logger = logging.getLogger(__name__)

STATEVECTOR_TOLERANCE = 1e-10


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _add_prior_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dist", required=True,
                        help="uniform | power:<n> | exp:<c> | hnorm:<c> | "
                             "custom:<path>")
    parser.add_argument("--size", type=int, required=True,
                        help="search-set size N")
    parser.add_argument("--permute-seed", type=_u64, default=None,
                        help="randomly permute the prior with this seed")


def _optimizer_config(settings: Settings, args) -> OptimizerConfig:
    return OptimizerConfig.from_settings(
        settings,
        n=args.steps,
        tol_e=args.tol,
        lambda_init=getattr(args, "lambda_init", None),
    )


def _describe(args, settings: Settings) -> int:
    prior = load_prior(args.dist, args.size, args.permute_seed)
    if args.out:
        write_prior(prior, args.out)
    print(format_prior_summary(prior))
    return 0


def _optimize(args, settings: Settings) -> int:
    prior = load_prior(args.dist, args.size, args.permute_seed)
    state = optimize(prior, _optimizer_config(settings, args))
    write_schedule(state.schedule, args.out, state.lambdas)
    print(format_run_report(state, prior))
    return 0


def _evaluate(args, settings: Settings) -> int:
    schedule, _ = read_schedule(args.plan)
    prior = load_prior(args.dist, args.size, args.permute_seed)
    print(format_cost_report(schedule, prior,
                             expected_cost(schedule, prior)))
    return 0


def _simulate(args, settings: Settings) -> int:
    schedule, _ = read_schedule(args.plan)
    prior = load_prior(args.dist, args.size, args.permute_seed)
    report = simulate(schedule, prior, args.trials, args.seed, args.mode)
    histogram = success_step_histogram(schedule, prior, args.trials,
                                       args.seed, args.mode)
    print(format_simulation_report(report, histogram))
    return 0


def _check_statevector(args, settings: Settings) -> int:
    bias = args.bias if args.bias is not None else args.size ** -0.5
    iterations = args.iters if args.iters else list(range(11))
    rows = check_against_closed_form(args.size, args.solution, bias,
                                     iterations)
    error = max_error(rows)
    print(format_check(rows), end="")
    passed = error <= STATEVECTOR_TOLERANCE
    print(f"maxError\t{error!r}\t{'pass' if passed else 'fail'}")
    return 0 if passed else 1


def _table1(args, settings: Settings) -> int:
    seed = args.seed if args.with_permuted else None
    rows = build_table(table1_specs(args.size),
                       _optimizer_config(settings, args), seed)
    write_table(rows, args.out)
    print(format_table(rows), end="")
    failed = [row.label for row in rows if not row.converged]
    if failed:
        logger.error("Rows did not converge: %s", ", ".join(failed))
        return 1
    return 0


def _fit(args, settings: Settings) -> int:
    rows = read_table(args.table)
    fit = fit_linear(rows)
    write_fit(fit, rows, args.out)
    if args.plot_data:
        write_plot_data(rows, args.plot_data)
    print(format_fit(fit, rows), end="")
    return 0


def _serve(args, settings: Settings) -> int:
    # Imported here so the plain sub-commands do not build the server
    from mcp_grover_schedules.server import mcp

    mcp.run()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grover-schedules",
        description="Optimal multi-step Grover search for known priors")
    parser.add_argument("--log-level", default=None,
                        help="override GROVER_SCHEDULES_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    describe = commands.add_parser(
        "describe", help="discretize a prior and print its statistics")
    _add_prior_args(describe)
    describe.add_argument("--out", default=None, help="write the prior file")
    describe.set_defaults(handler=_describe)

    opt = commands.add_parser("optimize", help="optimize a schedule")
    _add_prior_args(opt)
    opt.add_argument("--steps", type=int, default=None)
    opt.add_argument("--tol", type=float, default=None)
    opt.add_argument("--out", required=True, help="plan file to write")
    opt.add_argument("--lambda-init", type=float, default=None)
    opt.set_defaults(handler=_optimize)

    evaluate = commands.add_parser("evaluate",
                                   help="expected cost of a saved plan")
    evaluate.add_argument("--plan", required=True)
    _add_prior_args(evaluate)
    evaluate.set_defaults(handler=_evaluate)

    sim = commands.add_parser("simulate", help="Monte-Carlo replay of a plan")
    sim.add_argument("--plan", required=True)
    _add_prior_args(sim)
    sim.add_argument("--trials", type=int, default=100000)
    sim.add_argument("--seed", type=_u64, default=1)
    sim.add_argument("--mode", choices=("relaxed", "integer"),
                     default="relaxed")
    sim.set_defaults(handler=_simulate)

    check = commands.add_parser(
        "check-statevector",
        help="compare exact evolution with the closed-form probability")
    check.add_argument("--size", type=int, required=True)
    check.add_argument("--bias", type=float, default=None,
                       help="initial solution amplitude (default 1/sqrt(N))")
    check.add_argument("--iters", type=int, nargs="+", default=None)
    check.add_argument("--solution", type=int, default=0)
    check.set_defaults(handler=_check_statevector)

    table = commands.add_parser("table1", help="rebuild the reference table")
    table.add_argument("--size", type=int, default=1000000)
    table.add_argument("--steps", type=int, default=None)
    table.add_argument("--tol", type=float, default=None)
    table.add_argument("--out", required=True)
    table.add_argument("--with-permuted", action="store_true")
    table.add_argument("--seed", type=_u64, default=1)
    table.set_defaults(handler=_table1)

    fit = commands.add_parser("fit", help="fit E = k sqrt(sigma) to a table")
    fit.add_argument("--table", required=True)
    fit.add_argument("--out", required=True)
    fit.add_argument("--plot-data", default=None)
    fit.set_defaults(handler=_fit)

    serve = commands.add_parser("serve", help="run the MCP server")
    serve.set_defaults(handler=_serve)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for the ``grover-schedules`` script."""
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
        if args.log_level:
            settings = settings.with_log_level(args.log_level)
        configure_logging(settings)
        return args.handler(args, settings)
    except (GroverScheduleError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
