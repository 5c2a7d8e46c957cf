"""Module contains the realignment criterion for the SPA states of the witness family.

A state :math:`\\rho` with :math:`\\|R(\\rho)\\|_1 > 1` is entangled. For the family the
trace norm of :math:`R(Q_\\gamma)`, :math:`Q_\\gamma = W_\\gamma - \\lambda_- I`, has the closed form

.. math::

    |3\\gamma - 1| + (1 - 3\\lambda_-) + 2\\sqrt{3\\gamma^2 - 3\\gamma + 1} + 2\\sqrt{3\\gamma^2 + 1}

and the SPA state is :math:`Q_\\gamma / \\mathrm{Tr}\\, Q_\\gamma`.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Union

import numpy as np

from WitnessPy.core.matrix import ComplexMatrix, realign, singular_values, trace_norm
from WitnessPy.core.weyl import omega_power
from WitnessPy.enum import WITNESSPY_FACTOR_A
from WitnessPy.exceptions import InvalidArgument
from WitnessPy.utils import WitnessPyJSON, get_workers
from WitnessPy.witness import BellFamilyParams, SpaResult, build_witness, spa

__all__ = [
    "BlockCoefficients",
    "RealignmentReport",
    "ScanRow",
    "block_coefficients",
    "analytic_gram_matrix",
    "analytic_singular_values",
    "analytic_trace_norm",
    "lambda0_threshold",
    "realignment_margin",
    "entanglement_margin",
    "scan",
]

logger = logging.getLogger(__name__)

ENTANGLED = "entangled"
UNDETECTED = "undetected"

# index groups of the three 3x3 blocks of R(Q) R(Q)^dagger
GRAM_BLOCKS = ((0, 4, 8), (1, 5, 6), (2, 3, 7))


class BlockCoefficients(NamedTuple):
    """Diagonal and off-diagonal magnitudes of the blocks of :math:`R(Q_\\gamma) R(Q_\\gamma)^\\dagger`."""

    d1: float
    d2: float
    q1: float
    q2: float


class ScanRow(NamedTuple):
    """One grid point of :func:`.scan`, laid out as the CSV columns."""

    gamma: float
    lambda_min: float
    p_star: float
    margin: float
    trace_norm_numeric: float
    trace_norm_analytic: float
    lambda0: float


@dataclass(frozen=True, eq=False)
class RealignmentReport:
    """Outcome of the realignment criterion on one state.

    Trace norms are those of the realigned unit trace state. The analytic fields are
    None unless the state is the SPA of a family witness.

    Args:
        gamma: Family parameter or None.
        lambda_min: Smallest witness eigenvalue or None.
        singular_values: Descending singular values of the realigned state.
        trace_norm_numeric: Sum of `singular_values`.
        trace_norm_analytic: Closed form trace norm divided by :math:`\\mathrm{Tr}\\, Q_\\gamma`.
        margin: `trace_norm_numeric - 1`.
        lambda0: Threshold eigenvalue above which the family state is detected.
        threshold_flag: Whether `lambda_min > lambda0`.
    """

    gamma: Optional[float]
    lambda_min: Optional[float]
    singular_values: np.ndarray
    trace_norm_numeric: float
    trace_norm_analytic: Optional[float]
    margin: float
    lambda0: Optional[float] = None
    threshold_flag: Optional[bool] = None

    @property
    def entangled_flag(self) -> bool:
        """bool: The realignment criterion detects entanglement."""
        return self.margin > 0

    @property
    def verdict(self) -> str:
        """str: `"entangled"` or `"undetected"`; the criterion never proves separability."""
        return ENTANGLED if self.entangled_flag else UNDETECTED

    def to_dict(self) -> WitnessPyJSON:
        """Serialize into plain JSON types."""
        return {
            "gamma": self.gamma,
            "lambda_min": self.lambda_min,
            "singular_values": self.singular_values.tolist(),
            "trace_norm_numeric": self.trace_norm_numeric,
            "trace_norm_analytic": self.trace_norm_analytic,
            "margin": self.margin,
            "entangled_flag": self.entangled_flag,
            "lambda0": self.lambda0,
            "threshold_flag": self.threshold_flag,
            "verdict": self.verdict,
        }


def _check_family_point(gamma: float, lambda_min: float) -> None:
    if not 0.0 < gamma < 1.0:
        raise InvalidArgument(f"gamma needs to be in (0, 1), got {gamma}")
    if lambda_min >= 0:
        raise InvalidArgument(f"lambda_min needs to be negative, got {lambda_min}")


def block_coefficients(gamma: float, lambda_min: float) -> BlockCoefficients:
    """Evaluate :math:`d_1, d_2, q_1, q_2` at `(gamma, lambda_min)`.

    Args:
        gamma: Family parameter in `(0, 1)`.
        lambda_min: Smallest eigenvalue of :math:`W_\\gamma`.

    Returns:
        The :class:`.BlockCoefficients`.

    Examples:
        >>> block_coefficients(0.5, -0.5).d2 - block_coefficients(0.5, -0.5).q2
        0.4375
    """
    g, lam = gamma, lambda_min
    return BlockCoefficients(
        d1=(g + lam - 1) ** 2 + lam ** 2 + (g - lam) ** 2,
        d2=g ** 2 + ((g - 1) / 2) ** 2,
        q1=lam * (g + lam - 1) - (g - lam) * (g + 2 * lam - 1),
        q2=g * (g - 1) / 2,
    )


def analytic_gram_matrix(gamma: float, lambda_min: float) -> np.ndarray:
    """Closed form of :math:`R(Q_\\gamma) R(Q_\\gamma)^\\dagger` for the default Weyl factor.

    The matrix is the direct sum over the index groups `{0,4,8}`, `{1,5,6}`, `{2,3,7}` of

    .. math::

        A_1 = \\begin{pmatrix} d_1 & q_1 & q_1 \\\\ q_1 & d_1 & q_1 \\\\ q_1 & q_1 & d_1 \\end{pmatrix},\\quad
        A_2 = \\begin{pmatrix} d_2 & q_2\\omega^* & q_2\\omega \\\\ q_2\\omega & d_2 & q_2\\omega^* \\\\
        q_2\\omega^* & q_2\\omega & d_2 \\end{pmatrix},\\quad A_3 = \\overline{A_2}

    Args:
        gamma: Family parameter in `(0, 1)`.
        lambda_min: Smallest eigenvalue of :math:`W_\\gamma`.

    Returns:
        The 9x9 complex array.
    """
    _check_family_point(gamma, lambda_min)
    c = block_coefficients(gamma, lambda_min)
    w, wc = omega_power(1), omega_power(2)
    a1 = np.full((3, 3), c.q1, dtype=complex)
    np.fill_diagonal(a1, c.d1)
    a2 = c.q2 * np.array([[0, wc, w], [w, 0, wc], [wc, w, 0]])
    np.fill_diagonal(a2, c.d2)
    gram = np.zeros((9, 9), dtype=complex)
    for group, block in zip(GRAM_BLOCKS, (a1, a2, a2.conj())):
        gram[np.ix_(group, group)] = block
    return gram


def analytic_singular_values(gamma: float, lambda_min: float) -> np.ndarray:
    """Singular values of :math:`R(Q_\\gamma)` from the block eigenvalues, descending.

    :math:`A_1` contributes :math:`(1-3\\lambda_-)^2` once and :math:`3\\gamma^2-3\\gamma+1` twice,
    each of :math:`A_2, A_3` contributes :math:`(3\\gamma-1)^2/4` once and :math:`(3\\gamma^2+1)/4` twice.
    """
    _check_family_point(gamma, lambda_min)
    g = gamma
    s1 = math.sqrt(3 * g * g - 3 * g + 1)
    s2 = math.sqrt(3 * g * g + 1) / 2
    s3 = abs(3 * g - 1) / 2
    values = [1 - 3 * lambda_min, s1, s1, s3, s3, s2, s2, s2, s2]
    return np.array(sorted(values, reverse=True))


def analytic_trace_norm(gamma: float, lambda_min: float) -> float:
    """Closed form :math:`\\|R(Q_\\gamma)\\|_1`, using :math:`|3\\gamma - 1|` so it holds on all of `(0, 1)`.

    Args:
        gamma: Family parameter in `(0, 1)`.
        lambda_min: Smallest eigenvalue of :math:`W_\\gamma`.

    Returns:
        The trace norm.
    """
    _check_family_point(gamma, lambda_min)
    g = gamma
    return (
        abs(3 * g - 1)
        + (1 - 3 * lambda_min)
        + 2 * math.sqrt(3 * g * g - 3 * g + 1)
        + 2 * math.sqrt(3 * g * g + 1)
    )


def lambda0_threshold(gamma: float, signed: bool = False) -> float:
    """Threshold :math:`\\lambda_0(\\gamma)` with :math:`\\|R(Q_\\gamma)\\|_1 > \\mathrm{Tr}\\, Q_\\gamma \\iff \\lambda_- > \\lambda_0`.

    For :math:`\\gamma \\geq 1/3`

    .. math::

        \\lambda_0 = \\frac{1-\\gamma}{2} - \\frac{1}{3}\\sqrt{3\\gamma^2-3\\gamma+1} - \\frac{1}{3}\\sqrt{3\\gamma^2+1}

    Below 1/3 the absolute value in the trace norm turns the leading term into
    :math:`(1+3\\gamma)/6`. Pass `signed=True` to evaluate the first expression everywhere.
    The two differ only below 1/3: at :math:`\\gamma = 0` the default gives :math:`-1/2`
    and `signed=True` gives :math:`-1/6`. Only the default matches the sign of the
    realignment margin there.

    Args:
        gamma: Family parameter.
        signed: Keep :math:`3\\gamma - 1` signed instead of taking its absolute value.

    Returns:
        The threshold.

    Examples:
        >>> round(lambda0_threshold(0.75), 5)
        -0.64193
        >>> round(lambda0_threshold(0.0), 12), round(lambda0_threshold(0.0, signed=True), 12)
        (-0.5, -0.166666666667)
    """
    g = gamma
    roots = (math.sqrt(3 * g * g - 3 * g + 1) + math.sqrt(3 * g * g + 1)) / 3
    if signed or 3 * g >= 1:
        return (1 - g) / 2 - roots
    return (1 + 3 * g) / 6 - roots


def realignment_margin(state: ComplexMatrix) -> float:
    """:math:`\\|R(\\rho)\\|_1 - 1`, positive for states detected as entangled."""
    return trace_norm(realign(state)) - 1.0


def entanglement_margin(spa_or_state: Union[SpaResult, ComplexMatrix]) -> RealignmentReport:
    """Run the realignment criterion on an SPA state or a bare state.

    For a :class:`.SpaResult` of the family the numeric margin is cross-checked against
    the closed form and against :math:`\\lambda_- > \\lambda_0`. Disagreement between the
    three predicates is logged as a warning; it only happens within round-off of zero.

    Args:
        spa_or_state: Either an :class:`.SpaResult` or a unit trace state.

    Returns:
        The :class:`.RealignmentReport`.
    """
    if isinstance(spa_or_state, SpaResult):
        state = spa_or_state.spa_state
        gamma, lambda_min = spa_or_state.gamma, spa_or_state.lambda_min
    else:
        state, gamma, lambda_min = spa_or_state, None, None

    values = singular_values(realign(state))
    numeric = float(np.sum(values))
    margin = numeric - 1.0
    report = RealignmentReport(
        gamma=gamma,
        lambda_min=lambda_min,
        singular_values=values,
        trace_norm_numeric=numeric,
        trace_norm_analytic=None,
        margin=margin,
    )
    if gamma is None or not 0.0 < gamma < 1.0:
        return report

    q_trace = spa_or_state.q_trace
    analytic = analytic_trace_norm(gamma, lambda_min) / q_trace
    lambda0 = lambda0_threshold(gamma)
    threshold_flag = lambda_min > lambda0
    if len({margin > 0, analytic > 1.0, threshold_flag}) > 1:
        logger.warning(
            "realignment predicates disagree at gamma=%s: margin=%.3e analytic=%.3e lambda-lambda0=%.3e",
            gamma,
            margin,
            analytic - 1.0,
            lambda_min - lambda0,
        )
    return RealignmentReport(
        gamma=gamma,
        lambda_min=lambda_min,
        singular_values=values,
        trace_norm_numeric=numeric,
        trace_norm_analytic=analytic,
        margin=margin,
        lambda0=lambda0,
        threshold_flag=threshold_flag,
    )


def _scan_row(gamma: float, weyl_factor: str) -> ScanRow:
    result = spa(build_witness(BellFamilyParams(gamma, weyl_factor)), gamma=gamma)
    report = entanglement_margin(result)
    return ScanRow(
        gamma=gamma,
        lambda_min=result.lambda_min,
        p_star=result.p_star,
        margin=report.margin,
        trace_norm_numeric=report.trace_norm_numeric,
        trace_norm_analytic=report.trace_norm_analytic,
        lambda0=report.lambda0,
    )


def scan(
    gamma_from: float,
    gamma_to: float,
    steps: int,
    workers: Optional[int] = None,
    weyl_factor: str = WITNESSPY_FACTOR_A,
) -> List[ScanRow]:
    """Evaluate the realignment margin on an evenly spaced γ grid.

    Grid points are evaluated on a thread pool; rows are returned in γ order
    whatever the completion order.

    Args:
        gamma_from: First grid point, in `(0, 1)`.
        gamma_to: Last grid point, in `(gamma_from, 1)`.
        steps: Number of grid points, at least 2.
        workers: Thread count, resolved through :func:`~WitnessPy.utils.get_workers`.
        weyl_factor: Weyl factor of the family.

    Returns:
        One :class:`.ScanRow` per grid point.

    Raises:
        InvalidArgument: Bad range or step count.
    """
    if not 0.0 < gamma_from < gamma_to < 1.0:
        raise InvalidArgument(
            f"need 0 < from < to < 1, got from={gamma_from} to={gamma_to}"
        )
    if steps < 2:
        raise InvalidArgument(f"steps needs to be at least 2, got {steps}")
    grid = [float(g) for g in np.linspace(gamma_from, gamma_to, steps)]
    with ThreadPoolExecutor(max_workers=get_workers(workers)) as executor:
        rows = list(executor.map(lambda g: _scan_row(g, weyl_factor), grid))
    logger.debug("scanned %d grid points", len(rows))
    return rows
