"""
Command-line interface for rabi-kinetics.

Each registered command gets a subparser whose flags mirror its parameter
model. Results are written as CSV with a `#` comment block holding the
package version, the command and every resolved parameter.

Exit codes: 0 on success, 2 for invalid input, 3 when a numerical
tolerance cannot be met.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import pydantic

from .. import __version__
from ..exceptions.base import EXIT_INPUT, RabiKineticsError
from .commands import COMMAND_REGISTRY, Command, CommandOutput, get_command, list_commands
from .params import CommandParams

__all__ = [
    "main",
    "build_parser",
    "run_command",
    "Command",
    "CommandOutput",
    "COMMAND_REGISTRY",
    "get_command",
    "list_commands",
]


EXIT_OK = 0

logger = logging.getLogger(__name__)


def _flag(name: str) -> str:
    return "--" + name.replace("_", "-")


def _add_model_flags(parser: argparse.ArgumentParser, model: type[CommandParams]) -> None:
    for name, info in model.model_fields.items():
        if info.annotation is bool:
            parser.add_argument(
                _flag(name),
                dest=name,
                action=argparse.BooleanOptionalAction,
                default=None,
                help=f"(default: {info.default})",
            )
        else:
            parser.add_argument(_flag(name), dest=name, default=None, help=f"(default: {info.default})")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per registered command."""
    parser = argparse.ArgumentParser(
        prog="rabi-kinetics",
        description="Two-level system kinetics with time-dependent Einstein coefficients",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMAND_REGISTRY.values():
        subparser = subparsers.add_parser(command.name, help=command.help, description=command.help)
        _add_model_flags(subparser, command.params)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _describe_validation(error: pydantic.ValidationError) -> str:
    parts = []
    for item in error.errors():
        key = ".".join(str(part) for part in item["loc"]) or "params"
        parts.append(f"{key}: {item['msg']}")
    return "; ".join(parts)


def run_command(name: str, values: dict[str, Any]) -> tuple[Path, CommandOutput]:
    """
    Validate parameters, run a command and write its CSV.

    Args:
        name: Registered command name
        values: Raw parameter values keyed by field name

    Returns:
        The output path and the command's output
    """
    command = get_command(name)
    params = command.params.model_validate(values)
    output = command.run(params)

    path = params.output if params.output is not None else Path(f"{name}.csv")
    echoed = params.model_dump(mode="json", exclude={"output", "trace_output"})
    comments: dict[str, Any] = {"rabi_kinetics_version": __version__, "command": name}
    comments.update(echoed)
    comments.update(output.comments)
    output.series.to_csv(path, comments=comments)
    return path, output


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the `rabi-kinetics` script."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    _configure_logging(args.verbose)
    command = get_command(args.command)
    values = {
        name: getattr(args, name)
        for name in command.params.model_fields
        if getattr(args, name, None) is not None
    }

    try:
        path, output = run_command(args.command, values)
    except pydantic.ValidationError as e:
        print(f"error: {_describe_validation(e)}", file=sys.stderr)
        return EXIT_INPUT
    except RabiKineticsError as e:
        print(f"error [{e.error_code or 'INVALID_INPUT'}]: {e.message}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    line = f"{args.command}: wrote {len(output.series)} rows to {path}"
    if output.summary:
        line += f" ({output.summary})"
    print(line)
    return EXIT_OK
