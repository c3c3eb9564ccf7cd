"""
Defines a common interface for command-line subcommands.

Each subcommand inherits from `CommandInterface`, sets `name` and `help` and implements
`configure()` and `handle()`.
"""

from __future__ import annotations

import argparse
from abc import ABC, abstractmethod
from typing import IO

__all__ = ['CommandInterface']


class CommandInterface(ABC):
    """
    Abstract subcommand.

    Attributes:
        name (str): Subcommand name on the command line.
        help (str): One-line description shown by ``--help``.
    """

    name: str | None = None
    help: str = ''

    def __init_subclass__(cls, **kwargs):
        """
        Ensures that all subclasses define required attributes.
        """

        super().__init_subclass__(**kwargs)

        required = ('name',)
        for attr in required:
            if getattr(cls, attr, None) in (None, ''):
                raise TypeError(f'{cls.__name__}: attribute `{attr}` must be set.')

    @abstractmethod
    def configure(self, parser: argparse.ArgumentParser) -> None:
        """
        Add the subcommand's arguments.
        """

    @abstractmethod
    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        """
        Run the subcommand and write its result.

        Returns:
            Process exit code.
        """
