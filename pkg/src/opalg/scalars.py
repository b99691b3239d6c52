"""Exact rational scalars.

The ground field is Q, realized by the standard library ``fractions.Fraction``
(always reduced, positive denominator, exact arithmetic).  This module only
adds the wire format used across the package: ``p/q`` strings with the ``/q``
part omitted for integers.
"""

from fractions import Fraction

__all__ = ["Fraction", "scalar_from_str", "scalar_to_str"]


def scalar_from_str(text):
    """Parse ``p`` or ``p/q`` into a Fraction.

    >>> scalar_from_str("-3/6")
    Fraction(-1, 2)
    """
    return Fraction(text.strip())


def scalar_to_str(value):
    """Render a Fraction as ``p`` or ``p/q`` with no spaces.

    >>> scalar_to_str(Fraction(-1, 2))
    '-1/2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
