"""Module contains the dense matrix kernel and the Weyl/Bell constructors."""
from WitnessPy.core.matrix import (
    ComplexMatrix,
    Spectrum,
    hermitian_deviation,
    hermitian_eigensystem,
    partial_transpose,
    realign,
    singular_values,
    swap_operator,
    tensor,
    trace_norm,
)
from WitnessPy.core.weyl import (
    BellVector,
    WeylIndex,
    bell_basis,
    bell_projector,
    bell_vector,
    maximally_entangled,
    omega_power,
    weyl_operator,
)
