import cmath
import math
from typing import Dict

import numpy as np

OMEGA = cmath.exp(2j * math.pi / 3)
OMEGA_BAR = OMEGA.conjugate()


def get_sample_style(val=None) -> Dict[str, str]:
    """For testing styles."""
    if not val:
        val = {}
    return {
        "label": "#abb2bf",
        "value": "#61afef",
        "path": "#c678dd",
        "entangled": "#98c379",
        "undetected": "#e5c07b",
        "failure": "#e06c75",
        **val,
    }


def published_witness(g: float) -> np.ndarray:
    """W_gamma typed entry by entry from its published 9x9 form."""
    h = -(1 - g) / 2
    m = np.zeros((9, 9), dtype=complex)
    for i in (0, 4, 8):
        m[i, i] = 1 - g
    for i in (1, 5, 6):
        m[i, i] = g
    for i, j in ((1, 3), (2, 6), (5, 7)):
        m[i, j] = m[j, i] = h
    m[0, 7], m[7, 0] = OMEGA * g, OMEGA_BAR * g
    m[2, 4], m[4, 2] = OMEGA_BAR * g, OMEGA * g
    m[3, 8], m[8, 3] = OMEGA_BAR * g, OMEGA * g
    return m


def published_cubic(x: float) -> float:
    return -(x ** 3) + x ** 2 + 25 / 64 * x - 109 / 256


def bisect_negative_root(lo: float = -1.0, hi: float = 0.0) -> float:
    """Negative root of the published cubic, positive at lo and negative at hi."""
    for _ in range(200):
        mid = (lo + hi) / 2
        if published_cubic(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def random_hermitian(rng: np.random.Generator, n: int = 9) -> np.ndarray:
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2
