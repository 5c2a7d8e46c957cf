__all__ = [
    "BellFamilyParams",
    "ComplexMatrix",
    "build_witness",
    "spa",
    "entanglement_margin",
    "certify_optimality",
    "certify_gamma_three_quarters",
    "get_style",
]

from WitnessPy.core.matrix import ComplexMatrix
from WitnessPy.exact.certificate import certify_gamma_three_quarters
from WitnessPy.optimality import certify_optimality
from WitnessPy.realignment import entanglement_margin
from WitnessPy.utils import get_style
from WitnessPy.witness import BellFamilyParams, build_witness, spa
