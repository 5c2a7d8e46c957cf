"""Module contains exact matrices over the Eisenstein rationals and the exact witness."""
from fractions import Fraction
from typing import List

import numpy as np

from WitnessPy.enum import (
    WITNESSPY_FACTOR_A,
    WITNESSPY_FACTORS,
    WITNESSPY_QUTRIT_DIM,
)
from WitnessPy.exact.eisenstein import EisensteinRational
from WitnessPy.exact.rational import RationalLike, to_rational
from WitnessPy.exceptions import DimensionMismatch, InvalidArgument

__all__ = [
    "ExactMatrix",
    "exact_identity",
    "exact_matmul",
    "exact_trace",
    "exact_dagger",
    "exact_partial_transpose",
    "is_exact_hermitian",
    "exact_to_numpy",
    "exact_bell_projector",
    "exact_witness",
]

ExactMatrix = List[List[EisensteinRational]]

_ZERO = EisensteinRational(0)


def exact_identity(n: int) -> ExactMatrix:
    """Identity of size `n`."""
    return [[EisensteinRational(int(i == j)) for j in range(n)] for i in range(n)]


def exact_matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Matrix product, skipping zero entries of `a`."""
    if not a or len(a[0]) != len(b):
        raise DimensionMismatch("inner dimensions do not agree")
    columns = len(b[0])
    result = []
    for row in a:
        out = [_ZERO] * columns
        for k, value in enumerate(row):
            if value == 0:
                continue
            other = b[k]
            for j in range(columns):
                if other[j] != 0:
                    out[j] = out[j] + value * other[j]
        result.append(out)
    return result


def exact_trace(m: ExactMatrix) -> EisensteinRational:
    """Sum of the diagonal."""
    total = _ZERO
    for i, row in enumerate(m):
        total = total + row[i]
    return total


def exact_dagger(m: ExactMatrix) -> ExactMatrix:
    """Conjugate transpose."""
    return [[m[j][i].conjugate() for j in range(len(m))] for i in range(len(m[0]))]


def is_exact_hermitian(m: ExactMatrix) -> bool:
    """Exact equality with the conjugate transpose."""
    return m == exact_dagger(m)


def exact_partial_transpose(
    m: ExactMatrix,
    dim_a: int = WITNESSPY_QUTRIT_DIM,
    dim_b: int = WITNESSPY_QUTRIT_DIM,
) -> ExactMatrix:
    """Transpose of the right factor, `out[(i,j),(k,l)] = in[(i,l),(k,j)]`."""
    size = dim_a * dim_b
    if len(m) != size or any(len(row) != size for row in m):
        raise DimensionMismatch(f"partial transpose needs a {size}x{size} matrix")
    out = [[_ZERO] * size for _ in range(size)]
    for i in range(dim_a):
        for j in range(dim_b):
            for k in range(dim_a):
                for l in range(dim_b):  # noqa: E741
                    out[i * dim_b + j][k * dim_b + l] = m[i * dim_b + l][k * dim_b + j]
    return out


def exact_to_numpy(m: ExactMatrix) -> np.ndarray:
    """Double precision cast."""
    return np.array([[value.to_complex() for value in row] for row in m])


def _bell_amplitudes(k: int, l: int, d: int, factor: str) -> List[EisensteinRational]:  # noqa: E741
    # sqrt(d) times the Bell vector
    amplitudes = [_ZERO] * (d * d)
    for i in range(d):
        target = (i - l) % d
        phase = EisensteinRational.omega_power(k * target)
        if factor == WITNESSPY_FACTOR_A:
            amplitudes[target * d + i] = phase
        else:
            amplitudes[i * d + target] = phase
    return amplitudes


def exact_bell_projector(
    k: int, l: int, factor: str = WITNESSPY_FACTOR_A  # noqa: E741
) -> ExactMatrix:
    """Exact :math:`P_{kl}` on the two-qutrit space.

    Entries are :math:`u_i \\bar u_j / 3` with :math:`u` a vector of cube roots of unity,
    so they stay in :math:`\\mathbb{Q}[\\omega]`.
    """
    d = WITNESSPY_QUTRIT_DIM
    if factor not in WITNESSPY_FACTORS:
        raise InvalidArgument(f"factor needs to be one of {WITNESSPY_FACTORS}")
    if not (0 <= k < d and 0 <= l < d):
        raise InvalidArgument(f"Weyl index ({k}, {l}) outside 0..{d - 1}")
    u = _bell_amplitudes(k, l, d, factor)
    third = Fraction(1, d)
    return [[u[i] * u[j].conjugate() * third for j in range(d * d)] for i in range(d * d)]


def exact_witness(
    gamma: RationalLike, weyl_factor: str = WITNESSPY_FACTOR_A
) -> ExactMatrix:
    """Exact :math:`W_\\gamma = 3 B_\\gamma^\\Gamma` for rational γ.

    Args:
        gamma: Rational in `(0, 1)`.
        weyl_factor: Weyl factor of the family.

    Returns:
        The 9x9 exact Hermitian matrix.

    Raises:
        InvalidArgument: `gamma` outside `(0, 1)`.

    Examples:
        >>> exact_witness(Fraction(3, 4))[0][7]
        EisensteinRational(a=Fraction(0, 1), b=Fraction(3, 4))
    """
    gamma = to_rational(gamma)
    if not 0 < gamma < 1:
        raise InvalidArgument(f"gamma needs to be in (0, 1), got {gamma}")
    half = (1 - gamma) / 2
    size = WITNESSPY_QUTRIT_DIM ** 2
    b = [[_ZERO] * size for _ in range(size)]
    for (k, l), weight in (((1, 0), half), ((2, 0), half), ((1, 1), gamma)):  # noqa: E741
        projector = exact_bell_projector(k, l, weyl_factor)
        for i in range(size):
            for j in range(size):
                if projector[i][j] != 0:
                    b[i][j] = b[i][j] + projector[i][j] * weight
    return [[value * 3 for value in row] for row in exact_partial_transpose(b)]
