"""Module contains exact rational helpers built on :class:`fractions.Fraction`."""
import math
from fractions import Fraction
from typing import Dict, Tuple, Union

from WitnessPy.exceptions import InvalidArgument

__all__ = ["Rational", "RationalLike", "to_rational", "sqrt_bracket", "rational_to_dict"]

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def to_rational(value: Union[RationalLike, float]) -> Fraction:
    """Convert `value` into a :class:`fractions.Fraction`.

    Floats are read through their shortest decimal repr, so `0.75` becomes `3/4`
    and `-0.64191` becomes `-64191/100000`.

    Raises:
        InvalidArgument: The value does not parse as a finite rational.
    """
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as error:
        raise InvalidArgument(f"{value!r} is not a rational number: {error}")


def sqrt_bracket(n: RationalLike, precision: RationalLike) -> Tuple[Fraction, Fraction]:
    """Rational `(lo, hi)` with `lo ** 2 <= n <= hi ** 2` and `hi - lo <= precision`.

    The bracket sits on the grid `1/s` with `s = ceil(1 / precision)` and comes from one
    integer square root, so it is exact for any size of `n`. A perfect square on that
    grid collapses to `(root, root)`.

    Args:
        n: Positive rational.
        precision: Positive bracket width.

    Returns:
        The bracket.

    Raises:
        InvalidArgument: `n` or `precision` is not positive.

    Examples:
        >>> sqrt_bracket(4, Fraction(1, 10))
        (Fraction(2, 1), Fraction(2, 1))
    """
    n, precision = to_rational(n), to_rational(precision)
    if n <= 0:
        raise InvalidArgument(f"sqrt_bracket needs n > 0, got {n}")
    if precision <= 0:
        raise InvalidArgument(f"sqrt_bracket needs precision > 0, got {precision}")
    s = math.ceil(1 / precision)
    r = math.isqrt(n.numerator * s * s // n.denominator)
    lo = Fraction(r, s)
    if lo * lo == n:
        return lo, lo
    return lo, Fraction(r + 1, s)


def rational_to_dict(value: Fraction) -> Dict[str, str]:
    """JSON form `{"num", "den"}` with decimal strings."""
    return {"num": str(value.numerator), "den": str(value.denominator)}
