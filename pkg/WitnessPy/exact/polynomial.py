"""Module contains exact univariate polynomials over the rationals and the characteristic polynomial."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from WitnessPy.exact.eisenstein import EisensteinRational
from WitnessPy.exact.matrix import ExactMatrix, exact_matmul, exact_trace
from WitnessPy.exact.rational import RationalLike, rational_to_dict, to_rational
from WitnessPy.exceptions import DimensionMismatch, InvalidArgument

__all__ = ["ExactPolynomial", "char_poly"]


@dataclass(frozen=True)
class ExactPolynomial:
    """Polynomial with :class:`fractions.Fraction` coefficients in ascending degree.

    Trailing zero coefficients are dropped, so the zero polynomial has no coefficients
    and degree -1.

    Args:
        coefficients: Coefficients of :math:`1, \\lambda, \\lambda^2, \\ldots`.

    Examples:
        >>> ExactPolynomial.from_roots([1, 2]) == ExactPolynomial([2, -3, 1])
        True
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        values = [to_rational(c) for c in self.coefficients]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def from_roots(cls, roots: Sequence[RationalLike]) -> "ExactPolynomial":
        """Monic polynomial :math:`\\prod (\\lambda - r)`."""
        result = cls([1])
        for root in roots:
            result = result * cls([-to_rational(root), 1])
        return result

    @property
    def degree(self) -> int:
        """int: Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        """Fraction: Leading coefficient, 0 for the zero polynomial."""
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def evaluate(self, x: RationalLike) -> Fraction:
        """Exact value at `x` by Horner's scheme."""
        x = to_rational(x)
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    __call__ = evaluate

    def reflect(self) -> "ExactPolynomial":
        """:math:`p(-\\lambda)`."""
        return ExactPolynomial([c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients)])

    def sign_changes(self) -> int:
        """Sign changes in the coefficient sequence, zeros skipped."""
        signs = [c > 0 for c in self.coefficients if c != 0]
        return sum(1 for left, right in zip(signs, signs[1:]) if left != right)

    def negative_root_count_bound(self) -> int:
        """Descartes' bound on the number of negative roots, the sign changes of :math:`p(-\\lambda)`.

        The true count differs from the bound by an even number, so a bound of 1 is exact.
        """
        return self.reflect().sign_changes()

    def to_float_roots(self) -> np.ndarray:
        """Complex roots in double precision, sorted by real part."""
        if self.degree < 1:
            return np.array([], dtype=complex)
        roots = np.roots([float(c) for c in reversed(self.coefficients)])
        return np.array(sorted(roots.astype(complex), key=lambda z: (z.real, z.imag)))

    def to_dict(self) -> Dict[str, object]:
        """JSON form: ascending coefficients as `{"num", "den"}`."""
        return {
            "degree": self.degree,
            "coefficients": [rational_to_dict(c) for c in self.coefficients],
        }

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        left = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        right = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return ExactPolynomial([a + b for a, b in zip(left, right)])

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["ExactPolynomial", RationalLike]) -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            try:
                scalar = to_rational(other)
            except InvalidArgument:
                return NotImplemented
            return ExactPolynomial([c * scalar for c in self.coefficients])
        if not self.coefficients or not other.coefficients:
            return ExactPolynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return ExactPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExactPolynomial":
        if exponent < 0:
            raise InvalidArgument("polynomial powers need a nonnegative exponent")
        result = ExactPolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            magnitude = "" if abs(c) == 1 and k else str(abs(c))
            body = "*".join(part for part in (magnitude, power) if part)
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def char_poly(m: ExactMatrix) -> ExactPolynomial:
    """Characteristic polynomial :math:`\\det(\\lambda I - M)` by the Faddeev-LeVerrier recursion.

    With :math:`M_0 = 0` and :math:`c_n = 1`, each step sets :math:`M_k = M M_{k-1} + c_{n-k+1} I`
    and :math:`c_{n-k} = -\\mathrm{tr}(M M_k) / k`. All arithmetic stays in :math:`\\mathbb{Q}[\\omega]`.

    Args:
        m: Square matrix over the Eisenstein rationals.

    Returns:
        The monic characteristic polynomial.

    Raises:
        DimensionMismatch: `m` is not square.
        InvalidArgument: A coefficient has a nonzero :math:`\\omega` part, which a Hermitian input never produces.
    """
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise DimensionMismatch("char_poly needs a non-empty square matrix")
    coefficients: List[EisensteinRational] = [EisensteinRational(0)] * (n + 1)
    coefficients[n] = EisensteinRational(1)
    previous = [[EisensteinRational(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        product = exact_matmul(m, previous)
        c = coefficients[n - k + 1]
        current = [
            [product[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)
        ]
        coefficients[n - k] = -exact_trace(exact_matmul(m, current)) / k
        previous = current
    if not all(c.is_real for c in coefficients):
        raise InvalidArgument("characteristic polynomial has non-real coefficients")
    return ExactPolynomial([c.a for c in coefficients])
