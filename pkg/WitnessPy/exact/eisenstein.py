"""Module contains :class:`.EisensteinRational`, exact numbers :math:`a + b\\omega` over the rationals."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Union

from WitnessPy.exact.rational import RationalLike, rational_to_dict, to_rational

__all__ = ["EisensteinRational"]

_SQRT3_HALF = 3 ** 0.5 / 2


@dataclass(frozen=True)
class EisensteinRational:
    """Element :math:`a + b\\omega` of :math:`\\mathbb{Q}[\\omega]`, :math:`\\omega^2 = -1 - \\omega`.

    Ints, strings and :class:`fractions.Fraction` mix freely with instances in
    arithmetic. Equality is exact.

    Args:
        a: Rational part.
        b: Coefficient of :math:`\\omega`.

    Examples:
        >>> w = EisensteinRational.omega_power(1)
        >>> w * w * w == 1
        True
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))

    @classmethod
    def omega_power(cls, m: int) -> "EisensteinRational":
        """:math:`\\omega^m` for any integer `m`."""
        return (cls(1), cls(0, 1), cls(-1, -1))[m % 3]

    @property
    def is_real(self) -> bool:
        """bool: The :math:`\\omega` coefficient is zero."""
        return self.b == 0

    def conjugate(self) -> "EisensteinRational":
        """Complex conjugate, :math:`(a - b) - b\\omega`."""
        return EisensteinRational(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """:math:`|z|^2 = a^2 - ab + b^2`."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def to_complex(self) -> complex:
        """Double precision value."""
        a, b = float(self.a), float(self.b)
        return complex(a - b / 2, b * _SQRT3_HALF)

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        """JSON form with both parts as `{"num", "den"}`."""
        return {"a": rational_to_dict(self.a), "b": rational_to_dict(self.b)}

    def __add__(self, other: "EisensteinLike") -> "EisensteinRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "EisensteinRational":
        return EisensteinRational(-self.a, -self.b)

    def __sub__(self, other: "EisensteinLike") -> "EisensteinRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: "EisensteinLike") -> "EisensteinRational":
        return -self + other

    def __mul__(self, other: "EisensteinLike") -> "EisensteinRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinRational(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: "EisensteinLike") -> "EisensteinRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q[omega]")
        numerator = self * other.conjugate()
        return EisensteinRational(numerator.a / norm, numerator.b / norm)

    def __rtruediv__(self, other: "EisensteinLike") -> "EisensteinRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "EisensteinRational":
        if exponent < 0:
            return EisensteinRational(1) / self ** -exponent
        result, base = EisensteinRational(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"({self.b})w"
        return f"{self.a} + ({self.b})w"


EisensteinLike = Union[EisensteinRational, RationalLike]


def _coerce(value: object):
    if isinstance(value, EisensteinRational):
        return value
    if isinstance(value, (int, Fraction)):
        return EisensteinRational(value)
    return None
