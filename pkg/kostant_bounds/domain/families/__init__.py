from .family_factory import FamilyFactory, family
from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily

__all__ = ['FamilyFactory', 'NamedFamily', 'NetflowFamilyInterface', 'family']
