"""
Numeric helpers shared by the bound evaluators.

All bound arithmetic is done in natural logs; sums of log terms go through `math.fsum`.
"""

import math
from fractions import Fraction
from numbers import Real

from kostant_bounds.lib.errors import NegativeArgError

__all__ = ['as_fraction', 'h', 'log_factorial', 'log_int', 'xlogx']


def h(t: Real) -> float:
    """
    Entropy-like function h(t) = (t+1) log(t+1) - t log t, with h(0) = 0.

    Evaluated as log1p(t) + t * log1p(1/t), which keeps full relative accuracy for large t.

    Raises:
        NegativeArgError: If t < 0.
    """

    if t < 0:
        raise NegativeArgError(details={'t': str(t)})
    if t == 0:
        return 0.0
    t = float(t)
    return math.log1p(t) + t * math.log1p(1.0 / t)


def xlogx(x: Real) -> float:
    """
    x log x with the convention 0 log 0 = 0.
    """

    if x < 0:
        raise NegativeArgError(details={'x': str(x)})
    return 0.0 if x == 0 else float(x) * math.log(x)


def log_int(value: int) -> float:
    """
    Natural log of a positive integer of any size.
    """

    if value <= 0:
        raise NegativeArgError('log of a nonpositive integer', details={'value': str(value)})
    return math.log(value)


def log_factorial(n: int) -> float:
    """
    log n! via lgamma.
    """

    return math.lgamma(n + 1)


def as_fraction(value: Real, max_denominator: int | None = None) -> Fraction:
    """
    Exact rational of an int/Fraction, or the rationalized value of a float.
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    fraction = Fraction(float(value))
    return fraction.limit_denominator(max_denominator) if max_denominator else fraction
