"""
Shifted staircase netflows (t, t+1, ..., t+n-1, -nt - C(n, 2)).
"""

from kostant_bounds.lib.errors import BadParamsError

from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily

__all__ = ['StaircaseFamily']


class StaircaseFamily(NetflowFamilyInterface):
    """
    K of this family has the product form C_1 ... C_{n-1} F(t, n).
    """

    name = 'staircase'
    uses = ('t',)

    def validate(self, params: NamedFamily, n: int) -> None:
        super().validate(params, n)
        if params.t < 0:
            raise BadParamsError('t must be nonnegative', details={'family': self.name, 't': params.t})

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        return [params.t + i for i in range(n)]
