"""
Automatically discovers, imports, and instantiates NetflowFamilyInterface subclasses
from modules in this package.
"""

from __future__ import annotations

import importlib
import inspect
import pkgutil
from pathlib import Path

from kostant_bounds.lib.logger import logger

from .family_interface import NetflowFamilyInterface

__all__ = ['discover_families']

SKIPPED_MODULES = frozenset({'family_factory', 'utils'})


def discover_families() -> dict[str, NetflowFamilyInterface]:
    """
    Imports all family modules and returns a dict of instantiated NetflowFamilyInterface subclasses.
    """

    families: dict[str, NetflowFamilyInterface] = {}
    package = '.'.join(__name__.split('.')[:-1])
    for _, module_name, _ in pkgutil.iter_modules([str(Path(__file__).parent)]):
        if module_name in SKIPPED_MODULES:
            continue
        module_path = f'{package}.{module_name}'
        try:
            module = importlib.import_module(module_path)
            for cls_name in getattr(module, '__all__', ()):
                cls = getattr(module, cls_name, None)
                if (
                    isinstance(cls, type)
                    and issubclass(cls, NetflowFamilyInterface)
                    and not inspect.isabstract(cls)
                ):
                    families[cls.name] = cls()
        except Exception as exc:
            logger.critical(f'Failed to import module {module_path}: {exc}')

    return families
