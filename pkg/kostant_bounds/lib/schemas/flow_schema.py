"""
Wire schema of a flow polytope point.
"""

from fractions import Fraction
from numbers import Real

import msgspec

__all__ = ['FlowMatrixSchema', 'format_value']


def format_value(value: Real) -> str:
    """
    Exact values as ``p/q`` (or an integer), floats by repr.
    """

    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'
    return str(value)


class FlowMatrixSchema(msgspec.Struct, frozen=True, forbid_unknown_fields=True):
    """
    JSON shape {n, upper, subdiag}; upper is the row-major triangular list of f_{ij}.

    Attributes:
        n: Last vertex of the DAG
        upper: Row i lists f_{i,i+1}..f_{i,n}
        subdiag: g_1..g_{n-1}
    """

    n: int
    upper: list[list[str]]
    subdiag: list[str]
