"""
Factory and registry for netflow families.
"""

from __future__ import annotations

from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import UnsupportedFamilyError
from kostant_bounds.lib.singleton import SingletonMeta

from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily
from .utils import discover_families

__all__ = ['FamilyFactory', 'family']


class FamilyFactory(metaclass=SingletonMeta):
    """
    Singleton registry of netflow families, filled by package discovery.

    Attributes:
        _families: A dictionary mapping family tags to their instances.
    """

    _families: dict[str, NetflowFamilyInterface] = discover_families()

    @classmethod
    def names(cls) -> list[str]:
        return sorted(cls._families)

    @classmethod
    def get(cls, name: str) -> NetflowFamilyInterface:
        """
        Retrieve a registered family by tag.

        Raises:
            UnsupportedFamilyError: If the tag is not registered.
        """

        try:
            return cls._families[name.lower()]
        except KeyError as exc:
            raise UnsupportedFamilyError(name) from exc

    @classmethod
    def register(cls, name: str, family_obj: NetflowFamilyInterface) -> None:
        """
        Manually register a family under a given tag.
        """

        cls._families[name.lower()] = family_obj


def family(params: NamedFamily, n: int) -> NetflowVector:
    """
    The member of a named family on vertices 0..n.

    Args:
        params: Family tag and parameters.
        n: Last vertex.

    Returns:
        The validated netflow vector.

    Raises:
        UnsupportedFamilyError: Unknown tag.
        BadParamsError: Parameters outside the family's range.
    """

    return FamilyFactory.get(params.tag).netflow(params, n)
