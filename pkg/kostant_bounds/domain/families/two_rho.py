"""
Dilations t * 2rho = t (n, n-2, ..., -n+2, -n) of the sum of positive roots.
"""

from kostant_bounds.lib.errors import BadParamsError

from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily

__all__ = ['TwoRhoFamily']


class TwoRhoFamily(NetflowFamilyInterface):
    name = 'two_rho'
    uses = ('t',)

    def validate(self, params: NamedFamily, n: int) -> None:
        super().validate(params, n)
        if params.t < 1:
            raise BadParamsError('t must be at least 1', details={'family': self.name, 't': params.t})

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        return [params.t * (n - 2 * k) for k in range(n)]
