"""Module contains the Weyl operators and the generalized Bell basis they generate."""
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from WitnessPy.core.matrix import ComplexMatrix
from WitnessPy.enum import (
    WITNESSPY_FACTOR_A,
    WITNESSPY_FACTOR_B,
    WITNESSPY_FACTORS,
    WITNESSPY_QUTRIT_DIM,
)
from WitnessPy.exceptions import InvalidArgument

__all__ = [
    "WeylIndex",
    "BellVector",
    "omega_power",
    "weyl_operator",
    "maximally_entangled",
    "bell_vector",
    "bell_projector",
    "bell_basis",
]


@dataclass(frozen=True)
class WeylIndex:
    """Index `(k, l)` of the Weyl operator :math:`W_{kl}` on :math:`\\mathbb{C}^d`.

    Args:
        k: Clock exponent, `0 <= k < d`.
        l: Shift amount, `0 <= l < d`.
        d: Local dimension.

    Raises:
        InvalidArgument: Index or dimension out of range.
    """

    k: int
    l: int  # noqa: E741
    d: int = WITNESSPY_QUTRIT_DIM

    def __post_init__(self) -> None:
        if self.d < 2:
            raise InvalidArgument("Weyl operators need d >= 2")
        if not (0 <= self.k < self.d and 0 <= self.l < self.d):
            raise InvalidArgument(
                f"Weyl index ({self.k}, {self.l}) outside 0..{self.d - 1}"
            )


@dataclass(frozen=True, eq=False)
class BellVector:
    """Generalized Bell vector :math:`|\\Omega_{kl}\\rangle` with its provenance.

    Args:
        index: Weyl index the vector was generated from.
        amplitudes: Unit vector of length `d ** 2`.
        factor: Tensor factor the Weyl operator acted on, `"a"` or `"b"`.
    """

    index: WeylIndex
    amplitudes: np.ndarray
    factor: str = WITNESSPY_FACTOR_B


def omega_power(m: int, d: int = WITNESSPY_QUTRIT_DIM) -> complex:
    """Return :math:`e^{2\\pi i m / d}` evaluated from the reduced exact angle.

    Exponents past the half turn are the conjugates of `d - m`, so `omega_power(2)`
    and `omega_power(1).conjugate()` agree to the last bit.

    Args:
        m: Exponent, any integer.
        d: Order of the root of unity.

    Returns:
        The root of unity as a Python complex.
    """
    m %= d
    if m == 0:
        return 1 + 0j
    if 2 * m == d:
        return -1 + 0j
    if 2 * m > d:
        return omega_power(d - m, d).conjugate()
    angle = 2 * math.pi * m / d
    return complex(math.cos(angle), math.sin(angle))


def weyl_operator(idx: WeylIndex) -> ComplexMatrix:
    """Build :math:`W_{kl}|i\\rangle = \\omega^{k(i-l)}|i-l\\rangle` with `i - l` taken mod `d`.

    Args:
        idx: Weyl index.

    Returns:
        The unitary `d x d` operator, flagged as a single factor (`dim_b = 1`).
    """
    d = idx.d
    data = np.zeros((d, d), dtype=complex)
    for i in range(d):
        target = (i - idx.l) % d
        data[target, i] = omega_power(idx.k * target, d)
    return ComplexMatrix.from_array(data, dim_a=d, dim_b=1)


def maximally_entangled(d: int = WITNESSPY_QUTRIT_DIM) -> np.ndarray:
    """:math:`|\\Omega_{00}\\rangle = d^{-1/2} \\sum_i |ii\\rangle`."""
    vector = np.zeros(d * d, dtype=complex)
    vector[[i * d + i for i in range(d)]] = 1 / math.sqrt(d)
    return vector


def bell_vector(idx: WeylIndex, factor: str = WITNESSPY_FACTOR_B) -> BellVector:
    """Apply :math:`W_{kl}` to one factor of :math:`|\\Omega_{00}\\rangle`.

    `factor="b"` gives :math:`(I \\otimes W_{kl})|\\Omega_{00}\\rangle`, the textbook
    convention, e.g. :math:`\\Omega_{11} = (\\omega^*|02\\rangle + |10\\rangle + \\omega|21\\rangle)/\\sqrt{3}`.
    `factor="a"` gives :math:`(W_{kl} \\otimes I)|\\Omega_{00}\\rangle`, the convention under
    which the witness family has its published matrix form. For `l = 0` both agree.

    Args:
        idx: Weyl index.
        factor: `"a"` or `"b"`.

    Returns:
        The unit :class:`.BellVector`.

    Raises:
        InvalidArgument: Unknown factor label.
    """
    if factor not in WITNESSPY_FACTORS:
        raise InvalidArgument(f"factor needs to be one of {WITNESSPY_FACTORS}, got {factor!r}")
    d = idx.d
    weyl = weyl_operator(idx).data
    identity = np.eye(d)
    operator = np.kron(weyl, identity) if factor == WITNESSPY_FACTOR_A else np.kron(identity, weyl)
    amplitudes = operator @ maximally_entangled(d)
    amplitudes.setflags(write=False)
    return BellVector(index=idx, amplitudes=amplitudes, factor=factor)


def bell_projector(idx: WeylIndex, factor: str = WITNESSPY_FACTOR_B) -> ComplexMatrix:
    """Rank one projector :math:`P_{kl} = |\\Omega_{kl}\\rangle\\langle\\Omega_{kl}|`."""
    vector = bell_vector(idx, factor)
    return ComplexMatrix.from_vector(vector.amplitudes, dim_a=idx.d, dim_b=idx.d)


def bell_basis(
    d: int = WITNESSPY_QUTRIT_DIM, factor: str = WITNESSPY_FACTOR_B
) -> List[BellVector]:
    """All `d ** 2` Bell vectors ordered by `(k, l)`."""
    return [bell_vector(WeylIndex(k, l, d), factor) for k in range(d) for l in range(d)]
