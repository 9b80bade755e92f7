# The command line application: argument parsing, the RunConfig built from
# arguments and configuration, and dispatch to the command controllers.
import argparse
import logging
import sys

# Import the jetbound initialization package
# ------------------------------------------
# Importing the package runs the Configurator, so settings and the shared
# error handler are ready before any command is registered.
from jetbound import c as configurator, error_handler, settings

# Import the command controllers
# ------------------------------
from cli_controllers import BoundController, TableController, PolyController, SweepController, VerifyController

# Import the command set
# ----------------------
from Commands.CommandSet import CommandSet

from Batch.RunConfig import RunConfig
from cli_helpers.build_response import EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jetbound",
        description="Effective degree thresholds for invariant jet differentials."
    )
    parser.add_argument("--show-config", action="store_true", dest="show_config",
                        help="Print the configuration variables and their values to stderr")
    parser.add_argument("--dry-run", action="store_true", dest="dry_run",
                        help="Validate the command and print the run configuration only")

    commands = CommandSet(error_handler=error_handler, parser=parser)
    commands.bound(controller=BoundController)
    error_handler.log(message="Added command bound", logger=logging.debug)
    commands.table(controller=TableController)
    commands.poly(controller=PolyController)
    commands.sweep(controller=SweepController)
    commands.verify(controller=VerifyController)
    return parser


def _given(args, name, setting):
    # Zero is a value to validate, not a request for the default.
    value = getattr(args, name, None)
    return settings.get(setting) if value is None else value


def run_config(args):
    """RunConfig from the parsed arguments; configuration fills what the command line leaves out."""
    return RunConfig(
        command=args.command,
        n=getattr(args, "dim", None),
        k=getattr(args, "order", None),
        geometry=getattr(args, "geometry", "log"),
        weights=getattr(args, "weights", None),
        response_format=args.response_format,
        cache_dir=settings.get("JETBOUND_CACHE"),
        cache_enabled=settings.get("JETBOUND_CACHE_ENABLED", True) and not args.no_cache,
        sweep_budget=_given(args, "budget", "JETBOUND_SWEEP_BUDGET"),
        sweep_max_total=_given(args, "max_total", "JETBOUND_SWEEP_MAX_TOTAL"),
        threads=_given(args, "threads", "JETBOUND_THREADS"),
        integrated=getattr(args, "integrated", False)
    )


def main(argv=None):
    error_handler.module = "main.py"
    error_handler.method = "main"
    args = build_parser().parse_args(argv)

    if args.show_config:
        configurator.print_variables()

    try:
        cfg = run_config(args)
    except (ValueError, TypeError) as e:
        response = error_handler.failure(e, module="main.py", method="main")
        print(response.body, file=sys.stderr)
        return response.status

    if args.dry_run or settings.get("JETBOUND_DRY_RUN"):
        print(cfg)
        return EXIT_OK

    response = args.controller().dispatch(cfg)
    print(response.body, file=sys.stderr if response.error else sys.stdout)
    return response.status
