"""
PyProject TOML schema definition and utilities.
Provides typed access to the Poetry metadata the settings layer reads.
"""

from typing import Any

import msgspec

__all__ = ['PyProject', 'decode']


class Base(
    msgspec.Struct,
    omit_defaults=True,
    rename='kebab',
):
    """A base class holding some common settings.

    - ``omit_defaults = True`` omits fields holding their default value when encoding.
    - ``rename = 'kebab'`` maps ``build_backend`` to ``build-backend``, the convention used in pyproject.toml.
    """

    pass


class BuildSystem(Base):
    """
    Build system requirements configuration.
    """

    requires: list[str] = []
    build_backend: str | None = None


class PyProject(Base):
    """
    The parts of pyproject.toml read at startup.
    """

    build_system: BuildSystem | None = None
    tool: dict[str, dict[str, Any]] = {}


def decode(data: bytes | str) -> PyProject:
    """
    Parse pyproject.toml into typed PyProject object.
    """

    return msgspec.toml.decode(data, type=PyProject)
