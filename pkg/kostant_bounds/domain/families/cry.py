"""
Chan-Robbins-Yuen netflows (t, 0, ..., 0, -t).
"""

from kostant_bounds.lib.errors import BadParamsError

from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily

__all__ = ['CryFamily']


class CryFamily(NetflowFamilyInterface):
    name = 'cry'
    uses = ('t',)

    def validate(self, params: NamedFamily, n: int) -> None:
        super().validate(params, n)
        if params.t < 1:
            raise BadParamsError('t must be at least 1', details={'family': self.name, 't': params.t})

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        return [params.t] + [0] * (n - 1)
