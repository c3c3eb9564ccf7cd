"""
Positive netflows of polynomial growth.

Non-integral values a * n are rounded up, so every member satisfies N_k >= a * k^p
(resp. >= a * n) as the polynomial growth bounds require.
"""

import math

from .family_interface import NetflowFamilyInterface
from .named_family import NamedFamily

__all__ = ['ConstantAnFamily', 'LinearFamily', 'PowerFamily']


class LinearFamily(NetflowFamilyInterface):
    """
    N_i = a n + i.
    """

    name = 'linear'
    uses = ('a',)

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        base = math.ceil(params.a * n)
        return [base + i for i in range(n)]


class ConstantAnFamily(NetflowFamilyInterface):
    """
    N_i = a n.
    """

    name = 'constant_an'
    uses = ('a',)

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        return [math.ceil(params.a * n)] * n


class PowerFamily(NetflowFamilyInterface):
    """
    N_k = ceil(a k^p), with 0^0 = 1.
    """

    name = 'power'
    uses = ('a', 'p')

    def entries(self, params: NamedFamily, n: int) -> list[int]:
        values = []
        for k in range(n):
            power = 1 if params.p == 0 else k**params.p
            values.append(math.ceil(params.a * power))
        return values
