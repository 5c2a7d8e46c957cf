import unittest

import numpy as np
from numpy.testing import assert_allclose

from WitnessPy.core.weyl import (
    WeylIndex,
    bell_basis,
    bell_projector,
    bell_vector,
    maximally_entangled,
    omega_power,
    weyl_operator,
)
from WitnessPy.exceptions import InvalidArgument

from ..fixtures import OMEGA, OMEGA_BAR

SQRT3 = np.sqrt(3)


def ket(*pairs) -> np.ndarray:
    vector = np.zeros(9, dtype=complex)
    for amplitude, (i, j) in pairs:
        vector[i * 3 + j] = amplitude
    return vector / SQRT3


class TestWeylOperator(unittest.TestCase):
    def test_omega(self):
        self.assertEqual(omega_power(0), 1)
        self.assertEqual(omega_power(3), 1)
        self.assertEqual(omega_power(2), omega_power(1).conjugate())
        self.assertEqual(omega_power(-1), omega_power(2))
        self.assertAlmostEqual(omega_power(1), OMEGA, places=15)
        self.assertAlmostEqual(1 + omega_power(1) + omega_power(2), 0, places=15)

    def test_conjugate_pairs(self):
        for d in (2, 3, 4, 5, 6, 9):
            for m in range(d):
                self.assertEqual(omega_power(d - m, d), omega_power(m, d).conjugate())
        self.assertEqual(omega_power(1, 2), -1)
        self.assertEqual(omega_power(3, 6), -1)
        self.assertEqual(omega_power(1, 4), omega_power(-3, 4))

    def test_examples(self):
        assert_allclose(weyl_operator(WeylIndex(0, 0)).data, np.eye(3))
        assert_allclose(weyl_operator(WeylIndex(1, 0)).data, np.diag([1, OMEGA, OMEGA_BAR]), atol=1e-15)
        w11 = weyl_operator(WeylIndex(1, 1)).data
        assert_allclose(w11[:, 0], [0, 0, OMEGA_BAR], atol=1e-15)
        assert_allclose(w11[:, 1], [1, 0, 0], atol=1e-15)
        assert_allclose(w11[:, 2], [0, OMEGA, 0], atol=1e-15)

    def test_unitary(self):
        for d in (2, 3, 4):
            for k in range(d):
                for l in range(d):
                    w = weyl_operator(WeylIndex(k, l, d)).data
                    self.assertLessEqual(np.max(np.abs(w.conj().T @ w - np.eye(d))), 1e-13)

    def test_invalid_index(self):
        self.assertRaises(InvalidArgument, WeylIndex, 3, 0)
        self.assertRaises(InvalidArgument, WeylIndex, 0, -1)
        self.assertRaises(InvalidArgument, WeylIndex, 0, 0, 1)


class TestBellVectors(unittest.TestCase):
    def test_listed_vectors(self):
        assert_allclose(
            bell_vector(WeylIndex(1, 0)).amplitudes,
            ket((1, (0, 0)), (OMEGA, (1, 1)), (OMEGA_BAR, (2, 2))),
            atol=1e-15,
        )
        assert_allclose(
            bell_vector(WeylIndex(2, 0)).amplitudes,
            ket((1, (0, 0)), (OMEGA_BAR, (1, 1)), (OMEGA, (2, 2))),
            atol=1e-15,
        )
        assert_allclose(
            bell_vector(WeylIndex(1, 1)).amplitudes,
            ket((OMEGA_BAR, (0, 2)), (1, (1, 0)), (OMEGA, (2, 1))),
            atol=1e-15,
        )

    def test_first_factor(self):
        assert_allclose(
            bell_vector(WeylIndex(1, 1), factor="a").amplitudes,
            ket((1, (0, 1)), (OMEGA, (1, 2)), (OMEGA_BAR, (2, 0))),
            atol=1e-15,
        )
        for k in range(3):
            assert_allclose(
                bell_vector(WeylIndex(k, 0), factor="a").amplitudes,
                bell_vector(WeylIndex(k, 0), factor="b").amplitudes,
                atol=1e-15,
            )
        self.assertRaises(InvalidArgument, bell_vector, WeylIndex(0, 0), "c")

    def test_maximally_entangled(self):
        assert_allclose(bell_vector(WeylIndex(0, 0)).amplitudes, maximally_entangled())
        self.assertAlmostEqual(np.linalg.norm(maximally_entangled(4)), 1.0, places=15)

    def test_orthonormal_basis(self):
        for factor in ("a", "b"):
            for d in (2, 3):
                vectors = np.array([v.amplitudes for v in bell_basis(d, factor)])
                self.assertLessEqual(
                    np.max(np.abs(vectors.conj() @ vectors.T - np.eye(d * d))), 1e-13
                )

    def test_projectors(self):
        total = np.zeros((9, 9), dtype=complex)
        for k in range(3):
            for l in range(3):
                p = bell_projector(WeylIndex(k, l))
                self.assertTrue(p.hermitian)
                self.assertAlmostEqual(p.trace(), 1.0, places=14)
                self.assertLessEqual(np.max(np.abs(p.data @ p.data - p.data)), 1e-12)
                total += p.data
        self.assertLessEqual(np.max(np.abs(total - np.eye(9))), 1e-13)

        p00 = bell_projector(WeylIndex(0, 0)).data
        assert_allclose(p00 @ maximally_entangled(), maximally_entangled(), atol=1e-15)
        product = bell_projector(WeylIndex(1, 0)).data @ bell_projector(WeylIndex(2, 0)).data
        self.assertAlmostEqual(np.trace(product), 0, places=14)
