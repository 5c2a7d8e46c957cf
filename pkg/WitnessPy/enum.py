"""Module contains common constants."""
from fractions import Fraction

WITNESSPY_QUTRIT_DIM: int = 3

WITNESSPY_FACTOR_A: str = "a"
WITNESSPY_FACTOR_B: str = "b"
WITNESSPY_FACTORS = (WITNESSPY_FACTOR_A, WITNESSPY_FACTOR_B)

WITNESSPY_HERMITIAN_TOL: float = 1e-12
WITNESSPY_CLUSTER_TOL: float = 1e-9
WITNESSPY_PROJECTOR_TOL: float = 1e-10
WITNESSPY_RANK_TOL: float = 1e-8
WITNESSPY_DISCRIMINANT_TOL: float = 1e-6
WITNESSPY_RADIUS_RATIO: float = 1.37
WITNESSPY_SPA_IDENTITY_TOL: float = 1e-12
WITNESSPY_MONOTONE_TOL: float = 1e-12

WITNESSPY_MIN_RESTARTS: int = 8
WITNESSPY_MIN_ITERS: int = 200
WITNESSPY_MIN_SAMPLES: int = 12

WITNESSPY_LAMBDA_PRIME: Fraction = Fraction(-64191, 100000)

WITNESSPY_EXIT_OK: int = 0
WITNESSPY_EXIT_FAILURE: int = 1
WITNESSPY_EXIT_INVALID: int = 2
WITNESSPY_EXIT_REJECTED: int = 3

WITNESSPY_SCAN_HEADER = (
    "gamma",
    "lambda_min",
    "p_star",
    "margin",
    "trace_norm_numeric",
    "trace_norm_analytic",
    "lambda0",
)
