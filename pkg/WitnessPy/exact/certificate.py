"""Module contains the exact certificate that the SPA state at γ = 3/4 is detected by realignment.

The argument runs entirely in exact arithmetic:

1. :math:`\\det(\\lambda I - W_{3/4}) = q(\\lambda)^3` with
   :math:`q(\\lambda) = \\lambda^3 - \\lambda^2 - \\tfrac{25}{64}\\lambda + \\tfrac{109}{256}`.
2. :math:`P = -q` is positive at :math:`\\lambda'`.
3. :math:`q` has exactly one negative root (Descartes), and :math:`P(0) < 0`, so
   :math:`P > 0` only left of :math:`\\lambda_-`, hence :math:`\\lambda' < \\lambda_-`.
4. A rational bracket of :math:`\\lambda_0` lies strictly below :math:`\\lambda'`.
5. :math:`\\lambda_- > \\lambda' > \\lambda_0`, so :math:`\\|R(\\rho_{3/4})\\|_1 > 1`.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from WitnessPy.enum import WITNESSPY_LAMBDA_PRIME
from WitnessPy.exact.matrix import exact_witness
from WitnessPy.exact.polynomial import ExactPolynomial, char_poly
from WitnessPy.exact.rational import (
    RationalLike,
    rational_to_dict,
    sqrt_bracket,
    to_rational,
)
from WitnessPy.exceptions import InvalidArgument
from WitnessPy.utils import WitnessPyJSON

__all__ = [
    "CUBIC_FACTOR",
    "PUBLISHED_CUBIC",
    "PROBES",
    "CertificateReport",
    "exact_lambda0_bracket",
    "certify_gamma_three_quarters",
]

logger = logging.getLogger(__name__)

GAMMA = Fraction(3, 4)
# -x^3 + x^2 + 25/64 x - 109/256
PUBLISHED_CUBIC = ExactPolynomial([Fraction(-109, 256), Fraction(25, 64), 1, -1])
CUBIC_FACTOR = -PUBLISHED_CUBIC
PROBES = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2))
DEFAULT_PRECISION = Fraction(1, 10 ** 12)


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of :func:`.certify_gamma_three_quarters`.

    Args:
        char_poly: Exact characteristic polynomial of :math:`W_{3/4}`.
        cubic_factor: The monic cubic whose cube `char_poly` should be.
        lambda_prime: Rational probe point.
        p_at_lambda_prime: Exact :math:`P(\\lambda')`.
        lambda0_bracket: Rational bracket of :math:`\\lambda_0`.
        probe_values: Exact :math:`P` at the fixed probes and at :math:`\\lambda'`.
        verdict: Every step passed.
        narrative: One line per step naming the checked inequality.
        failed_step: Number of the first failing step or None.
    """

    char_poly: ExactPolynomial
    cubic_factor: ExactPolynomial
    lambda_prime: Fraction
    p_at_lambda_prime: Fraction
    lambda0_bracket: Tuple[Fraction, Fraction]
    probe_values: Tuple[Tuple[Fraction, Fraction], ...]
    verdict: bool
    narrative: List[str] = field(default_factory=list)
    failed_step: Optional[int] = None

    def to_dict(self) -> WitnessPyJSON:
        """JSON form, every rational as `{"num", "den"}`."""
        return {
            "gamma": rational_to_dict(GAMMA),
            "char_poly": self.char_poly.to_dict(),
            "cubic_factor": self.cubic_factor.to_dict(),
            "lambda_prime": rational_to_dict(self.lambda_prime),
            "p_at_lambda_prime": rational_to_dict(self.p_at_lambda_prime),
            "p_at_lambda_prime_float": float(self.p_at_lambda_prime),
            "lambda0_bracket": [rational_to_dict(value) for value in self.lambda0_bracket],
            "probes": [
                {"at": rational_to_dict(at), "value": rational_to_dict(value)}
                for at, value in self.probe_values
            ],
            "verdict": self.verdict,
            "failed_step": self.failed_step,
            "narrative": list(self.narrative),
        }


def exact_lambda0_bracket(
    gamma: RationalLike, precision: RationalLike = DEFAULT_PRECISION
) -> Tuple[Fraction, Fraction]:
    """Rational bracket of the realignment threshold :math:`\\lambda_0(\\gamma)`.

    Mirrors :func:`~WitnessPy.realignment.lambda0_threshold`: the leading term is
    :math:`(1-\\gamma)/2` for :math:`\\gamma \\geq 1/3` and :math:`(1+3\\gamma)/6` below.

    Args:
        gamma: Rational in `(0, 1)`.
        precision: Width of each square root bracket; the result is at most two thirds of it wider.

    Returns:
        Tuple `(lo, hi)` with `lo <= lambda0 <= hi`.
    """
    g = to_rational(gamma)
    if not 0 < g < 1:
        raise InvalidArgument(f"gamma needs to be in (0, 1), got {g}")
    lead = (1 - g) / 2 if 3 * g >= 1 else (1 + 3 * g) / 6
    u_lo, u_hi = sqrt_bracket(3 * g * g - 3 * g + 1, precision)
    v_lo, v_hi = sqrt_bracket(3 * g * g + 1, precision)
    return lead - (u_hi + v_hi) / 3, lead - (u_lo + v_lo) / 3


def certify_gamma_three_quarters(
    lambda_prime: RationalLike = WITNESSPY_LAMBDA_PRIME,
    precision: RationalLike = DEFAULT_PRECISION,
) -> CertificateReport:
    """Run the five step certificate at γ = 3/4.

    Every step is evaluated and narrated; the verdict is true iff all pass.

    Args:
        lambda_prime: Rational point separating :math:`\\lambda_0` from :math:`\\lambda_-`.
        precision: Square root bracket width used for :math:`\\lambda_0`.

    Returns:
        The :class:`.CertificateReport`.
    """
    lam = to_rational(lambda_prime)
    narrative: List[str] = []
    results: List[bool] = []

    def record(passed: bool, text: str) -> None:
        results.append(passed)
        narrative.append(f"step {len(results)} {'PASS' if passed else 'FAIL'}: {text}")

    poly = char_poly(exact_witness(GAMMA))
    record(
        poly == CUBIC_FACTOR ** 3,
        f"det(x I - W_3/4) = ({CUBIC_FACTOR})^3, the negated published cubic P cubed",
    )

    p_lam = PUBLISHED_CUBIC.evaluate(lam)
    record(p_lam > 0, f"P({lam}) = {p_lam} ~ {float(p_lam):.6e} > 0")

    probe_values = tuple(
        (at, PUBLISHED_CUBIC.evaluate(at)) for at in sorted(PROBES + (lam,))
    )
    descartes = CUBIC_FACTOR.negative_root_count_bound()
    p_zero = PUBLISHED_CUBIC.evaluate(0)
    record(
        descartes == 1 and lam < 0 and p_zero < 0 and p_lam > 0,
        (
            f"q(-x) has {descartes} sign change so the 3-fold eigenvalue lambda_- is the only "
            f"negative root; P(0) = {p_zero} < 0 and P({lam}) > 0 give {lam} < lambda_-; probes "
            + ", ".join(f"P({at}) {'>' if value > 0 else '<=' if value < 0 else '='} 0" for at, value in probe_values)
        ),
    )

    lo, hi = exact_lambda0_bracket(GAMMA, precision)
    record(
        lam > hi,
        f"lambda_0 = 1/8 (1 - 2/3 sqrt 7 - 2/3 sqrt 43) in [{float(lo):.10f}, {float(hi):.10f}] "
        f"and {lam} > {float(hi):.10f}",
    )

    record(
        all(results),
        "lambda_- > lambda' > lambda_0, hence ||R(rho_3/4)||_1 > 1 and rho_3/4 is entangled",
    )
    verdict = all(results)
    failed_step = None if verdict else results.index(False) + 1
    if not verdict:
        logger.info("certificate failed at step %d", failed_step)
    return CertificateReport(
        char_poly=poly,
        cubic_factor=CUBIC_FACTOR,
        lambda_prime=lam,
        p_at_lambda_prime=p_lam,
        lambda0_bracket=(lo, hi),
        probe_values=probe_values,
        verdict=verdict,
        narrative=narrative,
        failed_step=failed_step,
    )
