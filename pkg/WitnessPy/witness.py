"""Module contains the Bell-diagonal witness family and its structural physical approximation.

The family is

.. math::

    B_\\gamma = \\tfrac{1-\\gamma}{2} P_{10} + \\tfrac{1-\\gamma}{2} P_{20} + \\gamma P_{11},
    \\qquad W_\\gamma = 3 B_\\gamma^\\Gamma

where :math:`\\Gamma` is the partial transpose on the second factor. :math:`W_\\gamma` has trace 3.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from WitnessPy.core.matrix import (
    ComplexMatrix,
    hermitian_deviation,
    hermitian_eigensystem,
    partial_transpose,
)
from WitnessPy.core.weyl import WeylIndex, bell_projector
from WitnessPy.enum import (
    WITNESSPY_CLUSTER_TOL,
    WITNESSPY_FACTOR_A,
    WITNESSPY_FACTORS,
    WITNESSPY_HERMITIAN_TOL,
    WITNESSPY_QUTRIT_DIM,
    WITNESSPY_SPA_IDENTITY_TOL,
)
from WitnessPy.exceptions import (
    DimensionMismatch,
    InvalidArgument,
    NotAWitness,
    NotHermitian,
    NumericalInconsistency,
)
from WitnessPy.utils import WitnessPyIndex, WitnessPyJSON

__all__ = [
    "FAMILY_INDICES",
    "BellFamilyParams",
    "SpaResult",
    "build_b",
    "build_witness",
    "principal_submatrix",
    "negative_eigenvalue_count",
    "witness_spectrum_check",
    "witness_clusters",
    "spa",
    "ppt_check",
    "spa_line_search",
    "product_expectation_floor",
]

logger = logging.getLogger(__name__)

FAMILY_INDICES: Tuple[WitnessPyIndex, ...] = ((1, 0), (2, 0), (1, 1))


@dataclass(frozen=True)
class BellFamilyParams:
    """Parameters of :math:`B_\\gamma` and :math:`W_\\gamma`.

    Args:
        gamma: Mixing parameter in `[0, 1]`.
        weyl_factor: Tensor factor the Weyl operators act on when building the Bell
            projectors. The default `"a"` gives the published matrix form of the witness,
            `"b"` gives its complex conjugate up to a SWAP of the factors.

    Raises:
        InvalidArgument: `gamma` outside `[0, 1]` or unknown `weyl_factor`.
    """

    gamma: float
    weyl_factor: str = WITNESSPY_FACTOR_A

    def __post_init__(self) -> None:
        if not np.isfinite(self.gamma) or not 0.0 <= self.gamma <= 1.0:
            raise InvalidArgument(f"gamma needs to be in [0, 1], got {self.gamma}")
        if self.weyl_factor not in WITNESSPY_FACTORS:
            raise InvalidArgument(
                f"weyl_factor needs to be one of {WITNESSPY_FACTORS}, got {self.weyl_factor!r}"
            )

    @property
    def weights(self) -> Dict[WitnessPyIndex, float]:
        """Dict[Tuple[int, int], float]: Projector weights keyed by Weyl index."""
        half = (1.0 - self.gamma) / 2
        return {(1, 0): half, (2, 0): half, (1, 1): self.gamma}


@dataclass(frozen=True, eq=False)
class SpaResult:
    """Structural physical approximation of a witness.

    Args:
        gamma: Family parameter, None for witnesses built elsewhere.
        lambda_min: Smallest eigenvalue of the witness as given (trace 3 for the family).
        p_star: Largest mixing weight keeping the mixture positive semidefinite.
        spa_state: The unit trace SPA state.
        ppt_min_eig: Smallest eigenvalue of the partial transpose of `spa_state`.
        q_trace: Trace of :math:`Q = W - \\lambda_{min} I`.
    """

    gamma: Optional[float]
    lambda_min: float
    p_star: float
    spa_state: ComplexMatrix
    ppt_min_eig: float
    q_trace: float

    @property
    def is_ppt(self) -> bool:
        """bool: Partial transpose is positive semidefinite within the Hermitian tolerance."""
        return self.ppt_min_eig >= -WITNESSPY_HERMITIAN_TOL

    def to_dict(self) -> WitnessPyJSON:
        """Serialize, embedding `spa_state` in the :class:`.ComplexMatrix` JSON layout."""
        return {
            "gamma": self.gamma,
            "lambda_min": self.lambda_min,
            "p_star": self.p_star,
            "ppt_min_eig": self.ppt_min_eig,
            "q_trace": self.q_trace,
            "spa_state": self.spa_state.to_dict(),
        }


def build_b(params: BellFamilyParams) -> ComplexMatrix:
    """Assemble :math:`B_\\gamma` from the weighted Bell projectors.

    Args:
        params: Family parameters.

    Returns:
        Positive semidefinite unit trace :class:`.ComplexMatrix`.
    """
    result = ComplexMatrix(
        np.zeros((WITNESSPY_QUTRIT_DIM ** 2,) * 2), hermitian=True
    )
    for (k, l), weight in params.weights.items():
        if weight:
            result = result + weight * bell_projector(WeylIndex(k, l), params.weyl_factor)
    return result


def build_witness(params: BellFamilyParams) -> ComplexMatrix:
    """Assemble :math:`W_\\gamma = 3 B_\\gamma^\\Gamma`.

    With the default Weyl factor every entry is one of :math:`1-\\gamma`, :math:`\\gamma`,
    :math:`\\omega\\gamma`, :math:`\\omega^*\\gamma`, :math:`-(1-\\gamma)/2` or zero.

    Args:
        params: Family parameters.

    Returns:
        Hermitian trace 3 :class:`.ComplexMatrix`.

    Examples:
        >>> build_witness(BellFamilyParams(0.25)).data[0, 0]
        (0.75+0j)
    """
    return 3.0 * partial_transpose(build_b(params))


def principal_submatrix(m: ComplexMatrix, indices: Sequence[int]) -> np.ndarray:
    """Rows and columns `indices` of `m`, in the given order."""
    index = list(indices)
    if not index or min(index) < 0 or max(index) >= m.shape[0]:
        raise DimensionMismatch(f"indices {index} out of range for shape {m.shape}")
    return np.array(m.data[np.ix_(index, index)])


def negative_eigenvalue_count(a: np.ndarray, tol: float = WITNESSPY_HERMITIAN_TOL) -> int:
    """Count eigenvalues of the Hermitian array `a` below `-tol`."""
    if hermitian_deviation(a) > WITNESSPY_HERMITIAN_TOL:
        raise NotHermitian()
    return int(np.sum(np.linalg.eigvalsh(a) < -tol))


def witness_spectrum_check(
    w: ComplexMatrix, tol: float = WITNESSPY_CLUSTER_TOL
) -> Tuple[float, int]:
    """Smallest eigenvalue of `w` and how many eigenvalues lie within `tol` of it.

    Args:
        w: Hermitian operator.
        tol: Cluster tolerance.

    Returns:
        Tuple of `(lambda_min, degeneracy)`.
    """
    eigenvalues = hermitian_eigensystem(w).eigenvalues
    lambda_min = float(eigenvalues[0])
    degeneracy = int(np.sum(np.abs(eigenvalues - lambda_min) <= tol))
    logger.debug("lambda_min=%.15g degeneracy=%d", lambda_min, degeneracy)
    return lambda_min, degeneracy


def witness_clusters(
    w: ComplexMatrix, tol: float = WITNESSPY_CLUSTER_TOL
) -> List[Tuple[float, int]]:
    """Group the ascending spectrum of `w` into clusters of width `tol`.

    Returns:
        List of `(mean value, multiplicity)` in ascending order.
    """
    clusters: List[List[float]] = []
    for value in hermitian_eigensystem(w).eigenvalues:
        if clusters and value - clusters[-1][0] <= tol:
            clusters[-1].append(float(value))
        else:
            clusters.append([float(value)])
    return [(float(np.mean(cluster)), len(cluster)) for cluster in clusters]


def ppt_check(state: ComplexMatrix) -> float:
    """Smallest eigenvalue of the partial transpose of `state`.

    A value `>= -1e-12` certifies that `state` is PPT.
    """
    return hermitian_eigensystem(partial_transpose(state)).minimum


def _mixture(w: ComplexMatrix, p: float) -> ComplexMatrix:
    size = w.shape[0]
    return w * (p / w.trace().real) + ComplexMatrix.identity(w.dim_a, w.dim_b) * (
        (1.0 - p) / size
    )


def spa(w: ComplexMatrix, gamma: Optional[float] = None) -> SpaResult:
    """Structural physical approximation :math:`p^* \\hat W + (1 - p^*) I / D`.

    The witness is normalized to :math:`\\hat W = W / \\mathrm{Tr}\\, W` and
    :math:`p^* = 1 / (1 - D \\lambda_{min} / \\mathrm{Tr}\\, W)`, which is
    :math:`1 / (1 - 3\\lambda_{min})` for the trace 3 family. The state is checked
    against :math:`Q / \\mathrm{Tr}\\, Q` with :math:`Q = W - \\lambda_{min} I`.

    Args:
        w: Hermitian operator with positive trace and a negative eigenvalue.
        gamma: Family parameter recorded in the result.

    Returns:
        The :class:`.SpaResult`.

    Raises:
        NotAWitness: `w` has no negative eigenvalue.
        InvalidArgument: `w` has non-positive trace.
        NumericalInconsistency: The SPA state deviates from :math:`Q / \\mathrm{Tr}\\, Q`.
    """
    lambda_min = hermitian_eigensystem(w).minimum
    if lambda_min >= 0:
        raise NotAWitness(f"smallest eigenvalue {lambda_min:.6g} is not negative")
    trace = w.trace().real
    if trace <= 0:
        raise InvalidArgument(f"witness trace needs to be positive, got {trace:.6g}")
    size = w.shape[0]
    p_star = 1.0 / (1.0 - size * lambda_min / trace)
    state = _mixture(w, p_star)

    identity = ComplexMatrix.identity(w.dim_a, w.dim_b)
    q = w - lambda_min * identity
    q_trace = trace - size * lambda_min
    deviation = state.max_abs_diff(q / q_trace)
    if deviation > WITNESSPY_SPA_IDENTITY_TOL:
        raise NumericalInconsistency(
            f"SPA state differs from Q/Tr Q by {deviation:.3e}"
        )

    result = SpaResult(
        gamma=gamma,
        lambda_min=lambda_min,
        p_star=p_star,
        spa_state=state,
        ppt_min_eig=ppt_check(state),
        q_trace=q_trace,
    )
    logger.debug(
        "gamma=%s p_star=%.15g ppt_min_eig=%.3e", gamma, p_star, result.ppt_min_eig
    )
    return result


def spa_line_search(w: ComplexMatrix, tol: float = 1e-12) -> float:
    """Locate :math:`p^*` by bisection on the sign of the smallest eigenvalue of the mixture.

    Args:
        w: Hermitian witness with positive trace.
        tol: Width of the final bracket.

    Returns:
        Midpoint of the final bracket.

    Raises:
        NotAWitness: The undiluted normalized witness is already positive semidefinite.
    """
    if hermitian_eigensystem(w).minimum >= 0:
        raise NotAWitness()
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if hermitian_eigensystem(_mixture(w, mid)).minimum >= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def product_expectation_floor(
    w: ComplexMatrix, samples: int = 10000, seed: int = 0
) -> float:
    """Minimum of :math:`\\langle\\psi\\otimes\\phi|W|\\psi\\otimes\\phi\\rangle` over Haar-random unit product vectors.

    A witness never goes negative here; the sampling is evidence, not proof.

    Args:
        w: Square bipartite operator.
        samples: Number of random product vectors.
        seed: Seed of :func:`numpy.random.default_rng`.

    Returns:
        The smallest sampled expectation value.
    """
    if samples < 1:
        raise InvalidArgument("samples needs to be at least 1")
    rng = np.random.default_rng(seed)

    def haar(dim: int) -> np.ndarray:
        v = rng.standard_normal((samples, dim)) + 1j * rng.standard_normal((samples, dim))
        return v / np.linalg.norm(v, axis=1, keepdims=True)

    psi, phi = haar(w.dim_a), haar(w.dim_b)
    vectors = (psi[:, :, None] * phi[:, None, :]).reshape(samples, -1)
    values = np.einsum("si,ij,sj->s", vectors.conj(), w.data, vectors).real
    return float(values.min())
