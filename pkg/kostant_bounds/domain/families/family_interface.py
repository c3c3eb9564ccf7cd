"""
Defines a common interface for netflow families.

Each family must inherit from `NetflowFamilyInterface`, set `name` and implement `entries()`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from kostant_bounds.domain.netflow import NetflowVector, make_netflow
from kostant_bounds.lib.errors import BadParamsError

from .named_family import NamedFamily

__all__ = ['NetflowFamilyInterface']


class NetflowFamilyInterface(ABC):
    """
    Abstract base class for parametrised netflow families on the complete DAG.

    Attributes:
        name (str): Family tag used on the command line and in sweep tables.
        uses (tuple[str, ...]): Parameters of `NamedFamily` the family reads.
    """

    name: str | None = None
    uses: tuple[str, ...] = ()

    def __init_subclass__(cls, **kwargs):
        """
        Ensures that all subclasses define required attributes.
        """

        super().__init_subclass__(**kwargs)

        required = ('name',)
        for attr in required:
            if getattr(cls, attr, None) in (None, ''):
                raise TypeError(f'{cls.__name__}: attribute `{attr}` must be set.')

    def validate(self, params: NamedFamily, n: int) -> None:
        """
        Checks the shared parameter ranges; families add their own checks on top.

        Raises:
            BadParamsError: On n < 1, a <= 0 or p < 0 (for the parameters the family uses).
        """

        if n < 1:
            raise BadParamsError('n must be positive', details={'family': self.name, 'n': n})
        if 'a' in self.uses and params.a <= 0:
            raise BadParamsError('a must be positive', details={'family': self.name, 'a': str(params.a)})
        if 'p' in self.uses and params.p < 0:
            raise BadParamsError('p must be nonnegative', details={'family': self.name, 'p': str(params.p)})

    @abstractmethod
    def entries(self, params: NamedFamily, n: int) -> list[int]:
        """
        The first n entries N_0..N_{n-1}; the sink entry is appended by `netflow`.
        """

    def netflow(self, params: NamedFamily, n: int) -> NetflowVector:
        """
        Validates the parameters and builds the family member on vertices 0..n.
        """

        self.validate(params, n)
        head = self.entries(params, n)
        return make_netflow([*head, -sum(head)])
