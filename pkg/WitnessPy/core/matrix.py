"""Module contains the dense complex matrix kernel :class:`.ComplexMatrix`.

Composite indices follow one fixed row-major convention: the basis vector
:math:`|i\\rangle \\otimes |j\\rangle` of a `dim_a x dim_b` bipartite space sits at
position `i * dim_b + j`. Every operation in this module (partial transposition,
realignment, serialization) is written against that convention.
"""
import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

import numpy as np

from WitnessPy.enum import WITNESSPY_HERMITIAN_TOL, WITNESSPY_QUTRIT_DIM
from WitnessPy.exceptions import DimensionMismatch, InvalidArgument, NotHermitian
from WitnessPy.utils import WitnessPyJSON, WitnessPyVector, as_complex_vector

__all__ = [
    "ComplexMatrix",
    "Spectrum",
    "tensor",
    "partial_transpose",
    "realign",
    "hermitian_eigensystem",
    "hermitian_deviation",
    "singular_values",
    "trace_norm",
    "swap_operator",
]

logger = logging.getLogger(__name__)

MatrixLike = Union["ComplexMatrix", np.ndarray]


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Immutable dense complex matrix acting on :math:`\\mathbb{C}^{d_A} \\otimes \\mathbb{C}^{d_B}`.

    Square matrices have shape `(dim_a * dim_b, dim_a * dim_b)`. The only other accepted
    shape is `(dim_a ** 2, dim_b ** 2)`, the layout produced by :func:`.realign`.

    Args:
        data: Two dimensional array of entries, copied and made read-only.
        dim_a: Dimension of the left tensor factor.
        dim_b: Dimension of the right tensor factor.
        hermitian: Flag the matrix as Hermitian. The flag is checked against
            :data:`~WitnessPy.enum.WITNESSPY_HERMITIAN_TOL` on construction.

    Raises:
        DimensionMismatch: The shape of `data` does not match the factor dimensions.
        NotHermitian: `hermitian` is set but the matrix deviates from its adjoint.

    Examples:
        >>> identity = ComplexMatrix(np.eye(9), dim_a=3, dim_b=3, hermitian=True)
    """

    data: np.ndarray
    dim_a: int = WITNESSPY_QUTRIT_DIM
    dim_b: int = WITNESSPY_QUTRIT_DIM
    hermitian: bool = False

    # numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        if self.dim_a < 1 or self.dim_b < 1:
            raise InvalidArgument("factor dimensions need to be positive")
        data = np.array(self.data, dtype=complex)
        size = self.dim_a * self.dim_b
        if data.ndim != 2 or data.shape not in {
            (size, size),
            (self.dim_a ** 2, self.dim_b ** 2),
        }:
            raise DimensionMismatch(
                f"shape {data.shape} does not fit factor dimensions ({self.dim_a}, {self.dim_b})"
            )
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        if self.hermitian:
            deviation = hermitian_deviation(data)
            if deviation > WITNESSPY_HERMITIAN_TOL:
                raise NotHermitian(
                    f"matrix flagged hermitian deviates from its adjoint by {deviation:.3e}"
                )

    @classmethod
    def from_array(
        cls,
        data: Any,
        dim_a: Optional[int] = None,
        dim_b: int = 1,
        hermitian: Optional[bool] = None,
    ) -> "ComplexMatrix":
        """Wrap a square array, detecting the Hermitian flag when it is not given.

        Args:
            data: Square array.
            dim_a: Left factor dimension, defaults to `size // dim_b`.
            dim_b: Right factor dimension. The default treats the matrix as a single system.
            hermitian: Hermitian flag. Detected numerically when None.

        Returns:
            A new :class:`.ComplexMatrix`.
        """
        array = np.asarray(data, dtype=complex)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionMismatch("from_array needs a square matrix")
        if dim_a is None:
            if array.shape[0] % dim_b:
                raise DimensionMismatch(
                    f"size {array.shape[0]} is not divisible by dim_b={dim_b}"
                )
            dim_a = array.shape[0] // dim_b
        if hermitian is None:
            hermitian = hermitian_deviation(array) <= WITNESSPY_HERMITIAN_TOL
        return cls(array, dim_a=dim_a, dim_b=dim_b, hermitian=hermitian)

    @classmethod
    def identity(
        cls, dim_a: int = WITNESSPY_QUTRIT_DIM, dim_b: int = WITNESSPY_QUTRIT_DIM
    ) -> "ComplexMatrix":
        """Identity on the bipartite space."""
        return cls(np.eye(dim_a * dim_b), dim_a=dim_a, dim_b=dim_b, hermitian=True)

    @classmethod
    def from_vector(
        cls,
        vector: WitnessPyVector,
        dim_a: int = WITNESSPY_QUTRIT_DIM,
        dim_b: int = WITNESSPY_QUTRIT_DIM,
    ) -> "ComplexMatrix":
        """Rank one operator :math:`|v\\rangle\\langle v|` (not normalized).

        Args:
            vector: Vector of length `dim_a * dim_b`.
            dim_a: Left factor dimension.
            dim_b: Right factor dimension.

        Returns:
            The outer product as a Hermitian :class:`.ComplexMatrix`.
        """
        v = as_complex_vector(vector, dim_a * dim_b)
        return cls(np.outer(v, v.conj()), dim_a=dim_a, dim_b=dim_b, hermitian=True)

    @property
    def shape(self):
        """Tuple[int, int]: Shape of the underlying array."""
        return self.data.shape

    @property
    def is_square(self) -> bool:
        """bool: True for bipartite operators, False for realigned layouts of unequal factors."""
        size = self.dim_a * self.dim_b
        return self.data.shape == (size, size)

    @property
    def entries(self) -> np.ndarray:
        """np.ndarray: Row-major flat view of the entries."""
        return self.data.ravel()

    def trace(self) -> complex:
        """Sum of the diagonal entries."""
        return complex(np.trace(self.data))

    def dagger(self) -> "ComplexMatrix":
        """Conjugate transpose."""
        return ComplexMatrix(
            self.data.conj().T,
            dim_a=self.dim_a,
            dim_b=self.dim_b,
            hermitian=self.hermitian,
        )

    def max_abs_diff(self, other: MatrixLike) -> float:
        """Largest entry-wise deviation from `other`."""
        return float(np.max(np.abs(self.data - _as_array(other))))

    def _check_operand(self, other: "ComplexMatrix") -> None:
        if (self.dim_a, self.dim_b, self.shape) != (
            other.dim_a,
            other.dim_b,
            other.shape,
        ):
            raise DimensionMismatch("operands act on different spaces")

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self._check_operand(other)
        return ComplexMatrix(
            self.data + other.data,
            dim_a=self.dim_a,
            dim_b=self.dim_b,
            hermitian=self.hermitian and other.hermitian,
        )

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self._check_operand(other)
        return ComplexMatrix(
            self.data - other.data,
            dim_a=self.dim_a,
            dim_b=self.dim_b,
            hermitian=self.hermitian and other.hermitian,
        )

    def __mul__(self, scalar: complex) -> "ComplexMatrix":
        if not np.isscalar(scalar):
            return NotImplemented
        return ComplexMatrix(
            self.data * scalar,
            dim_a=self.dim_a,
            dim_b=self.dim_b,
            hermitian=self.hermitian and np.imag(scalar) == 0,
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "ComplexMatrix":
        if not np.isscalar(scalar):
            return NotImplemented
        return self * (1 / scalar)

    def __neg__(self) -> "ComplexMatrix":
        return self * -1.0

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self._check_operand(other)
        return ComplexMatrix(self.data @ other.data, dim_a=self.dim_a, dim_b=self.dim_b)

    def to_dict(self) -> WitnessPyJSON:
        """Serialize into the `{"dim_a", "dim_b", "re", "im"}` JSON layout."""
        return {
            "dim_a": self.dim_a,
            "dim_b": self.dim_b,
            "re": self.data.real.tolist(),
            "im": self.data.imag.tolist(),
        }

    @classmethod
    def from_dict(
        cls, payload: Dict[str, Any], hermitian: Optional[bool] = None
    ) -> "ComplexMatrix":
        """Inverse of :meth:`.ComplexMatrix.to_dict`.

        Args:
            payload: Decoded JSON object.
            hermitian: Hermitian flag. Detected numerically for square matrices when None.

        Raises:
            InvalidArgument: Keys are missing or the real and imaginary parts disagree in shape.
        """
        try:
            re = np.asarray(payload["re"], dtype=float)
            im = np.asarray(payload["im"], dtype=float)
            dim_a, dim_b = int(payload["dim_a"]), int(payload["dim_b"])
        except (KeyError, TypeError, ValueError) as error:
            raise InvalidArgument(f"malformed matrix payload: {error}")
        if re.shape != im.shape:
            raise InvalidArgument("real and imaginary parts differ in shape")
        data = re + 1j * im
        if hermitian is None:
            hermitian = (
                data.ndim == 2
                and data.shape[0] == data.shape[1]
                and hermitian_deviation(data) <= WITNESSPY_HERMITIAN_TOL
            )
        return cls(data, dim_a=dim_a, dim_b=dim_b, hermitian=hermitian)

    def to_json(self) -> str:
        """JSON text of :meth:`.ComplexMatrix.to_dict`; floats use the shortest round-trip repr."""
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ComplexMatrix":
        """Inverse of :meth:`.ComplexMatrix.to_json`."""
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    Args:
        eigenvalues: Real eigenvalues in ascending order.
        eigenvectors: Unitary matrix whose columns pair with `eigenvalues`.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def minimum(self) -> float:
        """float: Smallest eigenvalue."""
        return float(self.eigenvalues[0])

    def reconstruct(self) -> np.ndarray:
        """Return :math:`U \\Lambda U^\\dagger`."""
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


def _as_array(m: MatrixLike) -> np.ndarray:
    return m.data if isinstance(m, ComplexMatrix) else np.asarray(m, dtype=complex)


def _require_square(m: ComplexMatrix, operation: str) -> None:
    if not m.is_square:
        raise DimensionMismatch(
            f"{operation} needs a square {m.dim_a * m.dim_b}-dimensional matrix, got {m.shape}"
        )


def hermitian_deviation(m: MatrixLike) -> float:
    """Largest entry of :math:`|M - M^\\dagger|`.

    Args:
        m: Square matrix.

    Returns:
        The deviation, 0 for exactly Hermitian input.
    """
    array = _as_array(m)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionMismatch("hermiticity is only defined for square matrices")
    return float(np.max(np.abs(array - array.conj().T)))


def tensor(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product :math:`A \\otimes B`.

    The result is bipartite with `dim_a = A.size` and `dim_b = B.size`, which makes
    row `(i, j)` land at `i * B.size + j` exactly as the :class:`.ComplexMatrix` convention requires.

    Args:
        a: Square left operand.
        b: Square right operand.

    Returns:
        The Kronecker product.

    Examples:
        >>> tensor(ComplexMatrix.identity(3, 1), ComplexMatrix.identity(3, 1)).data.shape
        (9, 9)
    """
    for operand in (a, b):
        if operand.shape[0] != operand.shape[1]:
            raise DimensionMismatch("tensor needs square operands")
    return ComplexMatrix(
        np.kron(a.data, b.data),
        dim_a=a.shape[0],
        dim_b=b.shape[0],
        hermitian=a.hermitian and b.hermitian,
    )


def partial_transpose(m: ComplexMatrix) -> ComplexMatrix:
    """Transpose the right tensor factor: `out[(i,j),(k,l)] = in[(i,l),(k,j)]`.

    Args:
        m: Square bipartite matrix.

    Returns:
        The partial transpose :math:`M^\\Gamma`, Hermitian whenever `m` is.

    Raises:
        DimensionMismatch: `m` is not a square bipartite matrix.
    """
    _require_square(m, "partial_transpose")
    da, db = m.dim_a, m.dim_b
    data = m.data.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(da * db, da * db)
    return ComplexMatrix(data, dim_a=da, dim_b=db, hermitian=m.hermitian)


def realign(m: ComplexMatrix) -> ComplexMatrix:
    """Realignment (reshuffling): `out[(i,k),(j,l)] = in[(i,j),(k,l)]`.

    Args:
        m: Square bipartite matrix.

    Returns:
        A `(dim_a ** 2) x (dim_b ** 2)` matrix carrying the same factor dimensions as `m`.

    Raises:
        DimensionMismatch: `m` is not a square bipartite matrix.
    """
    _require_square(m, "realign")
    da, db = m.dim_a, m.dim_b
    data = m.data.reshape(da, db, da, db).transpose(0, 2, 1, 3).reshape(da * da, db * db)
    return ComplexMatrix(data, dim_a=da, dim_b=db)


def hermitian_eigensystem(m: MatrixLike) -> Spectrum:
    """Full eigendecomposition of a Hermitian matrix through LAPACK `heevd`.

    Eigenvalues of degenerate clusters are reported individually; grouping them
    is left to callers such as :func:`~WitnessPy.witness.witness_spectrum_check`.

    Args:
        m: Hermitian matrix.

    Returns:
        A :class:`.Spectrum` with ascending eigenvalues.

    Raises:
        NotHermitian: The input deviates from its adjoint by more than :data:`~WitnessPy.enum.WITNESSPY_HERMITIAN_TOL`.
    """
    array = _as_array(m)
    deviation = hermitian_deviation(array)
    if deviation > WITNESSPY_HERMITIAN_TOL:
        raise NotHermitian(f"eigensystem needs a hermitian matrix, deviation {deviation:.3e}")
    eigenvalues, eigenvectors = np.linalg.eigh(array)
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def singular_values(m: MatrixLike) -> np.ndarray:
    """Singular values in descending order."""
    return np.linalg.svd(_as_array(m), compute_uv=False)


def trace_norm(m: MatrixLike) -> float:
    """Trace norm :math:`\\|M\\|_1`, the sum of singular values of a rectangular matrix.

    Examples:
        >>> trace_norm(np.diag([-2.0, 3.0]))
        5.0
    """
    return float(np.sum(singular_values(m)))


def swap_operator(dim: int = WITNESSPY_QUTRIT_DIM) -> ComplexMatrix:
    """SWAP on :math:`\\mathbb{C}^d \\otimes \\mathbb{C}^d`, :math:`|ij\\rangle \\mapsto |ji\\rangle`."""
    data = np.zeros((dim * dim, dim * dim))
    for i in range(dim):
        for j in range(dim):
            data[j * dim + i, i * dim + j] = 1.0
    return ComplexMatrix(data, dim_a=dim, dim_b=dim, hermitian=True)
