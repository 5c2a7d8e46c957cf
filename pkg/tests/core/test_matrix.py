import json
import unittest

import numpy as np
from numpy.testing import assert_allclose

from WitnessPy.core.matrix import (
    ComplexMatrix,
    hermitian_eigensystem,
    partial_transpose,
    realign,
    singular_values,
    swap_operator,
    tensor,
    trace_norm,
)
from WitnessPy.core.weyl import (
    WeylIndex,
    bell_vector,
    maximally_entangled,
    weyl_operator,
)
from WitnessPy.exceptions import DimensionMismatch, InvalidArgument, NotHermitian

from ..fixtures import OMEGA, random_hermitian


def single(data) -> ComplexMatrix:
    return ComplexMatrix.from_array(np.asarray(data, dtype=complex))


class TestComplexMatrix(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(7)

    def test_construction(self):
        m = ComplexMatrix(np.eye(9), hermitian=True)
        self.assertEqual(m.shape, (9, 9))
        self.assertTrue(m.is_square)
        self.assertEqual(m.entries.shape, (81,))
        self.assertRaises(ValueError, m.data.__setitem__, (0, 0), 2.0)

        self.assertRaises(DimensionMismatch, ComplexMatrix, np.eye(8))
        self.assertRaises(DimensionMismatch, ComplexMatrix, np.ones(9))
        self.assertRaises(InvalidArgument, ComplexMatrix, np.eye(1), 0, 1)

        rectangular = ComplexMatrix(np.zeros((4, 9)), dim_a=2, dim_b=3)
        self.assertFalse(rectangular.is_square)

    def test_hermitian_flag(self):
        a = np.zeros((9, 9), dtype=complex)
        a[0, 1] = 1j
        self.assertRaises(NotHermitian, ComplexMatrix, a, hermitian=True)
        a[1, 0] = -1j
        self.assertTrue(ComplexMatrix.from_array(a, dim_a=3, dim_b=3).hermitian)
        a[1, 0] = -1j + 1e-10
        self.assertFalse(ComplexMatrix.from_array(a, dim_a=3, dim_b=3).hermitian)

    def test_arithmetic(self):
        a = ComplexMatrix(random_hermitian(self.rng), hermitian=True)
        b = ComplexMatrix(random_hermitian(self.rng), hermitian=True)
        self.assertTrue((a + b).hermitian)
        self.assertTrue((2.0 * a).hermitian)
        self.assertFalse((1j * a).hermitian)
        assert_allclose((a - b).data, a.data - b.data)
        assert_allclose((a @ b).data, a.data @ b.data)
        assert_allclose((a / 2).data, a.data / 2)
        assert_allclose((-a).data, -a.data)
        assert_allclose(np.float64(3.0) * a.data, (np.float64(3.0) * a).data)
        self.assertAlmostEqual(a.trace(), np.trace(a.data))
        self.assertEqual(a.dagger().max_abs_diff(a), 0.0)
        self.assertRaises(
            DimensionMismatch, a.__add__, ComplexMatrix(np.eye(6), dim_a=2, dim_b=3)
        )

    def test_json(self):
        m = ComplexMatrix(self.rng.standard_normal((9, 9)) + 1j * self.rng.standard_normal((9, 9)))
        payload = json.loads(m.to_json())
        self.assertEqual(set(payload), {"dim_a", "dim_b", "re", "im"})
        self.assertEqual(ComplexMatrix.from_json(m.to_json()).max_abs_diff(m), 0.0)

        h = ComplexMatrix(random_hermitian(self.rng), hermitian=True)
        self.assertTrue(ComplexMatrix.from_dict(h.to_dict()).hermitian)
        self.assertRaises(InvalidArgument, ComplexMatrix.from_dict, {"dim_a": 3})
        self.assertRaises(
            InvalidArgument,
            ComplexMatrix.from_dict,
            {"dim_a": 3, "dim_b": 3, "re": [[0.0]], "im": [[0.0, 1.0]]},
        )


class TestTensor(unittest.TestCase):
    def test_tensor(self):
        identity = tensor(single(np.eye(3)), single(np.eye(3)))
        assert_allclose(identity.data, np.eye(9))
        self.assertEqual((identity.dim_a, identity.dim_b), (3, 3))

        diagonal = tensor(single(np.diag([1, 2])), single(np.diag([3, 4])))
        assert_allclose(diagonal.data, np.diag([3, 4, 6, 8]))

    def test_weyl_on_second_factor(self):
        operator = tensor(single(np.eye(3)), weyl_operator(WeylIndex(1, 0)))
        expected = np.zeros(9, dtype=complex)
        expected[[0, 4, 8]] = [1, OMEGA, OMEGA.conjugate()]
        assert_allclose(operator.data @ maximally_entangled(), expected / np.sqrt(3), atol=1e-15)
        assert_allclose(
            bell_vector(WeylIndex(1, 0)).amplitudes, expected / np.sqrt(3), atol=1e-15
        )


class TestPartialTranspose(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_product(self):
        a = self.rng.standard_normal((3, 3)) + 1j * self.rng.standard_normal((3, 3))
        b = self.rng.standard_normal((3, 3)) + 1j * self.rng.standard_normal((3, 3))
        result = partial_transpose(ComplexMatrix(np.kron(a, b)))
        assert_allclose(result.data, np.kron(a, b.T), atol=1e-14)

    def test_involution_and_trace(self):
        for _ in range(20):
            m = ComplexMatrix(random_hermitian(self.rng), hermitian=True)
            pt = partial_transpose(m)
            self.assertTrue(pt.hermitian)
            self.assertLessEqual(partial_transpose(pt).max_abs_diff(m), 1e-13)
            self.assertAlmostEqual(pt.trace(), m.trace(), delta=1e-13)

    def test_maximally_entangled(self):
        projector = ComplexMatrix.from_vector(maximally_entangled())
        assert_allclose(
            partial_transpose(projector).data, swap_operator().data / 3, atol=1e-15
        )

    def test_unequal_factors(self):
        a = self.rng.standard_normal((2, 2))
        b = self.rng.standard_normal((3, 3))
        result = partial_transpose(ComplexMatrix(np.kron(a, b), dim_a=2, dim_b=3))
        assert_allclose(result.data, np.kron(a, b.T), atol=1e-14)

    def test_dimension_mismatch(self):
        self.assertRaises(
            DimensionMismatch,
            partial_transpose,
            ComplexMatrix(np.zeros((4, 9)), dim_a=2, dim_b=3),
        )


class TestRealign(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(13)

    def test_trace_norms(self):
        product = np.zeros(9)
        product[0] = 1.0
        self.assertAlmostEqual(
            trace_norm(realign(ComplexMatrix.from_vector(product))), 1.0, places=12
        )
        self.assertAlmostEqual(
            trace_norm(realign(ComplexMatrix.identity() / 9)), 1 / 3, places=12
        )
        self.assertAlmostEqual(
            trace_norm(realign(ComplexMatrix.from_vector(maximally_entangled()))),
            3.0,
            places=12,
        )

    def test_definition(self):
        m = self.rng.standard_normal((9, 9))
        r = realign(ComplexMatrix(m)).data
        for i, j, k, l in np.ndindex(3, 3, 3, 3):
            self.assertEqual(r[i * 3 + k, j * 3 + l], m[i * 3 + j, k * 3 + l])

    def test_linearity(self):
        a = ComplexMatrix(random_hermitian(self.rng))
        b = ComplexMatrix(random_hermitian(self.rng))
        alpha, beta = 0.3 - 1.2j, -2.5
        left = realign(alpha * a + beta * b)
        right = alpha * realign(a) + beta * realign(b)
        self.assertLessEqual(left.max_abs_diff(right), 1e-13)

    def test_rectangular(self):
        result = realign(ComplexMatrix(np.eye(6), dim_a=2, dim_b=3))
        self.assertEqual(result.shape, (4, 9))
        self.assertAlmostEqual(trace_norm(result), 6 ** 0.5, places=12)


class TestEigensystem(unittest.TestCase):
    def test_simple(self):
        assert_allclose(hermitian_eigensystem(np.eye(9)).eigenvalues, np.ones(9))
        assert_allclose(
            hermitian_eigensystem(single(np.diag([3.0, 1.0, 2.0]))).eigenvalues, [1, 2, 3]
        )

    def test_reconstruction(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            m = random_hermitian(rng)
            spectrum = hermitian_eigensystem(m)
            u = spectrum.eigenvectors
            self.assertLessEqual(np.max(np.abs(spectrum.reconstruct() - m)), 1e-11)
            self.assertLessEqual(np.max(np.abs(u.conj().T @ u - np.eye(9))), 1e-11)
            assert_allclose(
                singular_values(m),
                np.sort(np.abs(spectrum.eigenvalues))[::-1],
                atol=1e-11,
            )

    def test_not_hermitian(self):
        a = np.eye(9, dtype=complex)
        a[0, 1] = 1.0
        self.assertRaises(NotHermitian, hermitian_eigensystem, a)


class TestTraceNorm(unittest.TestCase):
    def test_trace_norm(self):
        self.assertAlmostEqual(trace_norm(np.eye(9)), 9.0)
        self.assertAlmostEqual(trace_norm(np.diag([-2.0, 3.0])), 5.0)
        rng = np.random.default_rng(19)
        m = random_hermitian(rng)
        self.assertAlmostEqual(
            trace_norm(m), np.sum(np.abs(np.linalg.eigvalsh(m))), places=11
        )
