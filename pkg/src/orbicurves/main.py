import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from orbicurves.commands import COMMANDS, CommandResult, create_command
from orbicurves.errors import OrbicurvesError, UsageError
from orbicurves.logger import RunLogger
from orbicurves.settings import load_settings


class CommandLineParser(argparse.ArgumentParser):
    """Argument parser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{message}. {self.format_usage().strip()}")


def build_parser() -> CommandLineParser:
    common = CommandLineParser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="Tab separated output instead of JSON")
    common.add_argument("--out", help="Write the output to this file instead of stdout")
    common.add_argument("--config", help="YAML settings file (default: packaged defaults)")
    common.add_argument("--logs-dir", help="Directory for run logs (default: env ORBICURVES_LOGS_DIR)")

    parser = CommandLineParser(prog="orbicurves", description="Orbifold types of hyperplane arrangements on P^n")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        subparser = subparsers.add_parser(command.name, help=command.help, parents=[common])
        command.add_arguments(subparser)
    return parser


def run(argv: Optional[List[str]] = None) -> CommandResult:
    """Parse ``argv``, dispatch to the subcommand and return its result; never raises domain errors."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return CommandResult.from_error(e)

    logs_dir = args.logs_dir or os.getenv("ORBICURVES_LOGS_DIR")
    run_logger = RunLogger(Path(logs_dir) if logs_dir else None)
    logger = run_logger.logger
    try:
        settings = load_settings(args.config)
        result = create_command(args.command, settings, logger).run(args)
    except OrbicurvesError as e:
        logger.error(f"{args.command} failed [{e.code}]: {e}")
        result = CommandResult.from_error(e)
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}")
        result = CommandResult.internal(e)

    run_logger.save_command_details(args.command, {
        "argv": list(argv) if argv is not None else sys.argv[1:],
        "status": result.status,
        "code": result.code,
        "diagnostics": result.diagnostics,
    })
    run_logger.close()
    return replace(result, tsv=args.tsv, out=Path(args.out) if args.out else None)


def emit(result: CommandResult) -> None:
    text = result.render()
    if result.ok and result.out is not None:
        result.out.parent.mkdir(parents=True, exist_ok=True)
        result.out.write_text(text + "\n")
        return
    print(text)


def main():
    load_dotenv()
    result = run(sys.argv[1:])
    emit(result)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
