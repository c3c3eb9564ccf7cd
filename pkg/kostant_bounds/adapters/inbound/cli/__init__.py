"""
Command-line front-end.
Builds the argument parser from the registered subcommands and maps exceptions to exit codes.
"""

import argparse
import sys
from collections.abc import Sequence
from typing import IO

from kostant_bounds.adapters.outbound import write_json
from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.lib.errors import handle_exception
from kostant_bounds.lib.logger import logger

from .commands import COMMANDS, CommandInterface

__all__ = ['build_parser', 'main', 'run']

settings = get_settings()


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, CommandInterface]]:
    """
    Factory for the top-level parser.

    Returns:
        The parser and the subcommand instances keyed by name.
    """

    parser = argparse.ArgumentParser(
        prog=settings.app.NAME,
        description='Exact counts and entropy/capacity bounds for the type-A Kostant partition function.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {settings.app.VERSION}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    commands = {}
    for command_class in COMMANDS:
        command = command_class()
        command.configure(subparsers.add_parser(command.name, help=command.help))
        commands[command.name] = command
    return parser, commands


def run(argv: Sequence[str] | None = None, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].
        stdout: Result stream.
        stderr: Error stream receiving the structured error payload.

    Returns:
        Exit code: 0 on success, 2 on usage errors, 3 on resource limits, 4 on non-convergence.
    """

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser, commands = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return commands[args.command].handle(args, stdout)
    except Exception as exc:
        handled = handle_exception(exc)
        if handled is None:
            raise
        exit_code, payload = handled
        logger.debug('Command failed', command=args.command, error=payload.type)
        write_json(payload, stderr)
        return exit_code


def main() -> None:
    sys.exit(run())
