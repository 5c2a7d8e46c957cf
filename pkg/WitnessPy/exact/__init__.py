"""Module contains the exact arithmetic used by the γ = 3/4 certificate."""
from WitnessPy.exact.certificate import (
    CertificateReport,
    certify_gamma_three_quarters,
    exact_lambda0_bracket,
)
from WitnessPy.exact.eisenstein import EisensteinRational
from WitnessPy.exact.matrix import exact_witness
from WitnessPy.exact.polynomial import ExactPolynomial, char_poly
from WitnessPy.exact.rational import Rational, sqrt_bracket
