"""Module contains the numerical optimality certificate of the witness family.

Product vectors :math:`|x \\otimes y\\rangle` with :math:`\\langle x \\otimes y|B_\\gamma|x \\otimes y\\rangle = 0`
are orthogonal to the three family Bell vectors. Orthogonality to :math:`\\Omega_{10}` and
:math:`\\Omega_{20}` forces :math:`x_k y_k` constant, so :math:`y_k = 1/x_k` in the gauge
:math:`x_0 = 1`. Orthogonality to the third vector is a quadratic in :math:`x_2` once
:math:`x_1 = t` is fixed. The vectors :math:`|x \\otimes y^*\\rangle` then lie in the zero set
of :math:`W_\\gamma`; spanning the whole space proves optimality.
"""
import cmath
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from WitnessPy.core.matrix import (
    ComplexMatrix,
    hermitian_deviation,
    singular_values,
)
from WitnessPy.core.weyl import WeylIndex, bell_vector
from WitnessPy.enum import (
    WITNESSPY_DISCRIMINANT_TOL,
    WITNESSPY_FACTOR_A,
    WITNESSPY_HERMITIAN_TOL,
    WITNESSPY_MIN_ITERS,
    WITNESSPY_MIN_RESTARTS,
    WITNESSPY_MIN_SAMPLES,
    WITNESSPY_MONOTONE_TOL,
    WITNESSPY_PROJECTOR_TOL,
    WITNESSPY_RADIUS_RATIO,
    WITNESSPY_RANK_TOL,
)
from WitnessPy.exceptions import (
    InvalidArgument,
    NotAProjector,
    NotHermitian,
    NumericalInconsistency,
)
from WitnessPy.utils import WitnessPyJSON, WitnessPyVector, as_complex_vector, get_workers
from WitnessPy.witness import FAMILY_INDICES, BellFamilyParams, build_b, build_witness

__all__ = [
    "ConstraintSolution",
    "SpanCertificate",
    "OptimalityReport",
    "constraint_coefficients",
    "solve_constraint",
    "sample_parameters",
    "span_rank",
    "see_saw",
    "ces_overlap",
    "family_subspace_projector",
    "certify_optimality",
]

logger = logging.getLogger(__name__)

EXPECTED_RANKS = (6, 9)


@dataclass(frozen=True, eq=False)
class ConstraintSolution:
    """A product vector in the zero set of :math:`B_\\gamma`.

    Args:
        t: Free coordinate :math:`x_1`.
        x: Left vector with :math:`x_0 = 1`.
        y: Right vector, :math:`y_k = 1 / x_k`.
    """

    t: complex
    x: np.ndarray
    y: np.ndarray

    def product_vector(self) -> np.ndarray:
        """:math:`|x \\otimes y\\rangle`, unnormalized."""
        return np.kron(self.x, self.y)

    def conjugate_product_vector(self) -> np.ndarray:
        """:math:`|x \\otimes y^*\\rangle`, unnormalized."""
        return np.kron(self.x, self.y.conj())

    def orthogonality_residual(self, weyl_factor: str = WITNESSPY_FACTOR_A) -> float:
        """Largest overlap of the normalized product vector with the family Bell vectors."""
        v = self.product_vector()
        v = v / np.linalg.norm(v)
        return max(
            abs(np.vdot(bell_vector(WeylIndex(k, l), weyl_factor).amplitudes, v))
            for k, l in FAMILY_INDICES
        )


@dataclass(frozen=True, eq=False)
class SpanCertificate:
    """Numeric rank of a set of vectors.

    Args:
        vector_set: Stacked normalized vectors, one per row.
        singular_values: Descending singular values of `vector_set`.
        numeric_rank: Singular values above `1e-8` times the largest one.
    """

    vector_set: np.ndarray
    singular_values: np.ndarray
    numeric_rank: int

    def to_dict(self) -> WitnessPyJSON:
        """Serialize, keeping every singular value for audit."""
        return {
            "vector_count": int(self.vector_set.shape[0]),
            "numeric_rank": self.numeric_rank,
            "singular_values": self.singular_values.tolist(),
            "vectors": {
                "re": self.vector_set.real.tolist(),
                "im": self.vector_set.imag.tolist(),
            },
        }


@dataclass(frozen=True, eq=False)
class OptimalityReport:
    """Bundle of the optimality checks at one γ.

    Args:
        gamma: Family parameter.
        b_span: Span of the zero vectors :math:`|x \\otimes y\\rangle` of :math:`B_\\gamma`.
        w_span: Span of the zero vectors :math:`|x \\otimes y^*\\rangle` of :math:`W_\\gamma`.
        ces_value: Best see-saw product overlap with the family subspace.
        max_b_residual: Largest :math:`|\\langle x \\otimes y|B_\\gamma|x \\otimes y\\rangle|`.
        max_w_residual: Largest :math:`|\\langle x \\otimes y^*|W_\\gamma|x \\otimes y^*\\rangle|`.
    """

    gamma: float
    b_span: SpanCertificate
    w_span: SpanCertificate
    ces_value: float
    max_b_residual: float
    max_w_residual: float

    @property
    def ranks(self) -> Tuple[int, int]:
        """Tuple[int, int]: Numeric ranks of the B span and the W span."""
        return self.b_span.numeric_rank, self.w_span.numeric_rank

    @property
    def ranks_ok(self) -> bool:
        """bool: Ranks are 6 and 9."""
        return self.ranks == EXPECTED_RANKS

    def to_dict(self) -> WitnessPyJSON:
        """Serialize into plain JSON types."""
        return {
            "gamma": self.gamma,
            "b_span": self.b_span.to_dict(),
            "w_span": self.w_span.to_dict(),
            "ces_value": self.ces_value,
            "ces_evidence": "numerical",
            "max_b_residual": self.max_b_residual,
            "max_w_residual": self.max_w_residual,
            "ranks_ok": self.ranks_ok,
        }


def constraint_coefficients(
    t: complex, weyl_factor: str = WITNESSPY_FACTOR_A
) -> Tuple[complex, complex, complex]:
    """Coefficients `(A, B, C)` of :math:`A x_2^2 + B x_2 + C = 0`.

    The quadratic is :math:`x_2 \\sqrt{3} \\langle \\Omega_{11}|x \\otimes y\\rangle` with
    :math:`x = (1, t, x_2)` and :math:`y_k = 1/x_k`. For the default factor this is
    :math:`\\omega x_2^2 + x_2 / t + \\omega^2 t`.

    Args:
        t: Nonzero value of :math:`x_1`.
        weyl_factor: Weyl factor of the family.

    Raises:
        InvalidArgument: `t` is zero.
    """
    t = complex(t)
    if t == 0:
        raise InvalidArgument("t needs to be nonzero")
    amplitudes = bell_vector(WeylIndex(1, 1), weyl_factor).amplitudes * math.sqrt(3)
    coefficients = [0j, 0j, 0j]
    for i in range(3):
        for j in range(3):
            c = amplitudes[i * 3 + j].conjugate()
            if abs(c) < WITNESSPY_HERMITIAN_TOL:
                continue
            # x_i / x_j * x_2 as a monomial in x_2
            value = c * (t if i == 1 else 1) / (t if j == 1 else 1)
            coefficients[(i == 2) - (j == 2) + 1] += value
    return coefficients[2], coefficients[1], coefficients[0]


def _discriminant(t: complex, weyl_factor: str) -> complex:
    a, b, c = constraint_coefficients(t, weyl_factor)
    return b * b - 4 * a * c


def solve_constraint(
    t: complex, weyl_factor: str = WITNESSPY_FACTOR_A
) -> List[ConstraintSolution]:
    """All zero-set product vectors with :math:`x_0 = 1, x_1 = t`.

    Args:
        t: Nonzero free coordinate.
        weyl_factor: Weyl factor of the family.

    Returns:
        One or two :class:`.ConstraintSolution`, a double root is returned once.

    Raises:
        InvalidArgument: `t` is zero.

    Examples:
        >>> sorted(round(s.x[2].real, 6) for s in solve_constraint(1))
        [-0.5, 1.0]
    """
    a, b, c = constraint_coefficients(t, weyl_factor)
    discriminant = b * b - 4 * a * c
    if abs(discriminant) <= WITNESSPY_HERMITIAN_TOL * max(1.0, abs(b * b), abs(4 * a * c)):
        candidates = [-b / (2 * a)]
    else:
        root = cmath.sqrt(discriminant)
        candidates = [(-b + root) / (2 * a), (-b - root) / (2 * a)]
    solutions = []
    for x2 in candidates:
        if x2 == 0:
            logger.debug("rejected root x2=0 at t=%s", t)
            continue
        x = np.array([1.0, t, x2], dtype=complex)
        x.setflags(write=False)
        y = 1.0 / x
        y.setflags(write=False)
        solutions.append(ConstraintSolution(t=complex(t), x=x, y=y))
    return solutions


def sample_parameters(
    radius: float = 1.3,
    count: int = 24,
    weyl_factor: str = WITNESSPY_FACTOR_A,
) -> List[complex]:
    """Points alternating between `|t| = radius` and `|t| = 1.37 radius`, nudged away from the discriminant zeros.

    On a single circle :math:`1/\\bar t = t/r^2`, which pins two entries of every
    :math:`|x \\otimes y^*\\rangle` to a fixed ratio and caps their span at 8.

    Args:
        radius: Inner circle radius.
        count: Number of points.
        weyl_factor: Weyl factor of the family.

    Returns:
        `count` parameters in angular order, even positions on the inner circle.
    """
    if radius <= 0 or count < 1:
        raise InvalidArgument("radius needs to be positive and count at least 1")
    result = []
    for k in range(count):
        modulus = radius if k % 2 == 0 else radius * WITNESSPY_RADIUS_RATIO
        angle = 2 * math.pi * (k + 0.5) / count
        t = cmath.rect(modulus, angle)
        while abs(_discriminant(t, weyl_factor)) < WITNESSPY_DISCRIMINANT_TOL:
            angle += math.pi / (7 * count)
            t = cmath.rect(modulus, angle)
        result.append(t)
    return result


def span_rank(vectors: Sequence[WitnessPyVector]) -> SpanCertificate:
    """Numeric rank of the normalized `vectors` at threshold `1e-8` relative to the largest singular value.

    Raises:
        InvalidArgument: No vectors or a zero vector.
    """
    if not len(vectors):
        raise InvalidArgument("span_rank needs at least one vector")
    rows = []
    for vector in vectors:
        v = as_complex_vector(vector)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise InvalidArgument("span_rank got a zero vector")
        rows.append(v / norm)
    stacked = np.vstack(rows)
    values = singular_values(stacked)
    rank = int(np.sum(values > WITNESSPY_RANK_TOL * values[0]))
    return SpanCertificate(vector_set=stacked, singular_values=values, numeric_rank=rank)


def _top_eigenpair(a: np.ndarray) -> Tuple[float, np.ndarray]:
    eigenvalues, eigenvectors = np.linalg.eigh(a)
    return float(eigenvalues[-1]), eigenvectors[:, -1]


def see_saw(
    projector: ComplexMatrix,
    x0: WitnessPyVector,
    y0: WitnessPyVector,
    iters: int = WITNESSPY_MIN_ITERS,
) -> Tuple[float, List[float]]:
    """Alternating maximization of :math:`\\langle x \\otimes y|\\Pi|x \\otimes y\\rangle` over unit vectors.

    Each half-step replaces one factor with the top eigenvector of the operator
    contracted over the other factor.

    Args:
        projector: Positive operator on the bipartite space.
        x0: Start of the left factor.
        y0: Start of the right factor.
        iters: Number of full iterations.

    Returns:
        Tuple of the final value and the value after every half-step, starting with the
        value at the start point.

    Raises:
        NumericalInconsistency: The objective decreased by more than round-off.
    """
    p = projector.data.reshape(projector.dim_a, projector.dim_b, projector.dim_a, projector.dim_b)
    x = as_complex_vector(x0, projector.dim_a)
    y = as_complex_vector(y0, projector.dim_b)
    x, y = x / np.linalg.norm(x), y / np.linalg.norm(y)
    history = [float(np.einsum("i,j,ijkl,k,l->", x.conj(), y.conj(), p, x, y).real)]
    for _ in range(iters):
        value, x = _top_eigenpair(np.einsum("j,ijkl,l->ik", y.conj(), p, y))
        history.append(value)
        value, y = _top_eigenpair(np.einsum("i,ijkl,k->jl", x.conj(), p, x))
        history.append(value)
        if history[-2] < history[-3] - WITNESSPY_MONOTONE_TOL or (
            history[-1] < history[-2] - WITNESSPY_MONOTONE_TOL
        ):
            raise NumericalInconsistency(
                f"see-saw objective decreased from {history[-3]:.15g} to {history[-1]:.15g}"
            )
    return history[-1], history


def _check_projector(projector: ComplexMatrix) -> None:
    if hermitian_deviation(projector) > WITNESSPY_HERMITIAN_TOL:
        raise NotHermitian("projector needs to be hermitian")
    square = projector.data @ projector.data
    if np.max(np.abs(square - projector.data)) > WITNESSPY_PROJECTOR_TOL:
        raise NotAProjector()


def ces_overlap(
    subspace_projector: ComplexMatrix,
    restarts: int = 32,
    iters: int = WITNESSPY_MIN_ITERS,
    seed: int = 0,
    workers: Optional[int] = None,
) -> float:
    """Best product overlap with a subspace over Haar-random see-saw restarts.

    A value clearly below 1 is numerical evidence that the subspace contains no product
    vector. Every restart draws from its own spawned seed, so the result does not
    depend on `workers`.

    Args:
        subspace_projector: Orthogonal projector onto the subspace.
        restarts: Number of random starts, at least 8.
        iters: See-saw iterations per start, at least 200.
        seed: Root seed.
        workers: Thread count, resolved through :func:`~WitnessPy.utils.get_workers`.

    Returns:
        The largest value found.

    Raises:
        NotAProjector: The input is not idempotent within `1e-10`.
        InvalidArgument: `restarts` or `iters` below their minimum.
    """
    if restarts < WITNESSPY_MIN_RESTARTS or iters < WITNESSPY_MIN_ITERS:
        raise InvalidArgument(
            f"need restarts >= {WITNESSPY_MIN_RESTARTS} and iters >= {WITNESSPY_MIN_ITERS}"
        )
    _check_projector(subspace_projector)
    da, db = subspace_projector.dim_a, subspace_projector.dim_b

    def run(child: np.random.SeedSequence) -> float:
        rng = np.random.default_rng(child)
        x0 = rng.standard_normal(da) + 1j * rng.standard_normal(da)
        y0 = rng.standard_normal(db) + 1j * rng.standard_normal(db)
        return see_saw(subspace_projector, x0, y0, iters)[0]

    children = np.random.SeedSequence(seed).spawn(restarts)
    with ThreadPoolExecutor(max_workers=get_workers(workers)) as executor:
        values = list(executor.map(run, children))
    logger.debug("see-saw restarts: best=%.12g worst=%.12g", max(values), min(values))
    return max(values)


def family_subspace_projector(params: BellFamilyParams) -> ComplexMatrix:
    """Projector onto the span of the three family Bell vectors."""
    vectors = np.array(
        [bell_vector(WeylIndex(k, l), params.weyl_factor).amplitudes for k, l in FAMILY_INDICES]
    )
    return ComplexMatrix(vectors.T @ vectors.conj(), hermitian=True)


def certify_optimality(
    params: BellFamilyParams,
    samples: int = 24,
    seed: int = 0,
    radius: float = 1.3,
    restarts: int = 32,
    iters: int = WITNESSPY_MIN_ITERS,
    workers: Optional[int] = None,
) -> OptimalityReport:
    """Collect the zero-set spans and the see-saw product overlap at one γ.

    Args:
        params: Family parameters, `gamma` in `(0, 1)`.
        samples: Number of circle parameters, at least 12.
        seed: Root seed of the see-saw restarts.
        radius: Inner radius of the two parameter circles.
        restarts: See-saw restarts.
        iters: See-saw iterations.
        workers: Thread count for the restarts.

    Returns:
        The :class:`.OptimalityReport`.
    """
    if not 0.0 < params.gamma < 1.0:
        raise InvalidArgument(f"gamma needs to be in (0, 1), got {params.gamma}")
    if samples < WITNESSPY_MIN_SAMPLES:
        raise InvalidArgument(f"samples needs to be at least {WITNESSPY_MIN_SAMPLES}")
    b, w = build_b(params).data, build_witness(params).data
    solutions = [
        solution
        for t in sample_parameters(radius, samples, params.weyl_factor)
        for solution in solve_constraint(t, params.weyl_factor)
    ]
    product = [s.product_vector() / np.linalg.norm(s.product_vector()) for s in solutions]
    conjugate = [
        s.conjugate_product_vector() / np.linalg.norm(s.conjugate_product_vector())
        for s in solutions
    ]
    report = OptimalityReport(
        gamma=params.gamma,
        b_span=span_rank(product),
        w_span=span_rank(conjugate),
        ces_value=ces_overlap(
            family_subspace_projector(params), restarts, iters, seed, workers
        ),
        max_b_residual=max(abs(np.vdot(v, b @ v)) for v in product),
        max_w_residual=max(abs(np.vdot(v, w @ v)) for v in conjugate),
    )
    logger.debug(
        "gamma=%s ranks=%s ces=%.6g", params.gamma, report.ranks, report.ces_value
    )
    return report
