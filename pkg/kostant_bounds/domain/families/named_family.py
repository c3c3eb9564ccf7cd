"""
Parameters of a named netflow family.
"""

from dataclasses import dataclass
from fractions import Fraction

__all__ = ['NamedFamily']


@dataclass(frozen=True, slots=True)
class NamedFamily:
    """
    A family tag together with its parameters.

    Attributes:
        tag: Registered family name, e.g. ``cry`` or ``two_rho``.
        t: Integer dilation parameter.
        a: Positive rational scale (linear, constant_an, power).
        p: Nonnegative rational exponent (power).
    """

    tag: str
    t: int = 1
    a: Fraction = Fraction(1)
    p: Fraction = Fraction(1)

    def describe(self) -> str:
        """
        Compact parameter string used in sweep tables.
        """

        return f't={self.t};a={self.a};p={self.p}'
