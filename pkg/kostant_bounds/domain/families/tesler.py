"""
Tesler netflows (1, ..., 1, -n) and their dilations (t, ..., t, -nt).
"""

from kostant_bounds.lib.errors import BadParamsError

from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily

__all__ = ['DilatedTeslerFamily', 'TeslerFamily']


class TeslerFamily(NetflowFamilyInterface):
    name = 'tesler'

    def entries(self, params: NamedFamily, n: int) -> list[int]:  # noqa: ARG002
        return [1] * n


class DilatedTeslerFamily(NetflowFamilyInterface):
    name = 'dilated_tesler'
    uses = ('t',)

    def validate(self, params: NamedFamily, n: int) -> None:
        super().validate(params, n)
        if params.t < 1:
            raise BadParamsError('t must be at least 1', details={'family': self.name, 't': params.t})

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        return [params.t] * n
