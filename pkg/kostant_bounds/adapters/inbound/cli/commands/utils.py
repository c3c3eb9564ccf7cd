"""
Output helpers shared by the subcommands.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import IO

from kostant_bounds.config.constants import CSV_SUFFIX
from kostant_bounds.lib.errors import BadParamsError

__all__ = ['is_csv', 'output_stream', 'reject_csv']


def is_csv(path: str | None) -> bool:
    return path is not None and Path(path).suffix.lower() == CSV_SUFFIX


@contextmanager
def output_stream(path: str | None, stdout: IO[str]) -> Iterator[IO[str]]:
    """
    The file at `path` opened for writing, or standard output when no path is given.
    """

    if path is None:
        yield stdout
        return
    with Path(path).open('w', encoding='utf-8', newline='') as stream:
        yield stream


def reject_csv(path: str | None, command: str) -> None:
    """
    Raises:
        BadParamsError: If `path` asks for CSV from a command without a tabular output.
    """

    if is_csv(path):
        raise BadParamsError(f'`{command}` has no CSV output', details={'out': path})
