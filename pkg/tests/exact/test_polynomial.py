import unittest
from fractions import Fraction

import numpy as np

from WitnessPy.exact.eisenstein import EisensteinRational as E
from WitnessPy.exact.matrix import (
    exact_bell_projector,
    exact_identity,
    exact_matmul,
    exact_partial_transpose,
    exact_to_numpy,
    exact_trace,
    exact_witness,
    is_exact_hermitian,
)
from WitnessPy.exact.polynomial import ExactPolynomial, char_poly
from WitnessPy.exceptions import DimensionMismatch, InvalidArgument
from WitnessPy.witness import BellFamilyParams, build_witness

from ..fixtures import published_cubic


def family_cubic(gamma: Fraction) -> ExactPolynomial:
    """Monic cubic of the 3x3 block of W_gamma on the indices {0, 5, 7}."""
    a, b, h = 1 - gamma, gamma, -(1 - gamma) / 2
    return ExactPolynomial([a * h * h + gamma * gamma * b, a * b - h * h - gamma * gamma, -1, 1])


class TestExactPolynomial(unittest.TestCase):
    def setUp(self):
        self.cubic = ExactPolynomial([Fraction(-109, 256), Fraction(25, 64), 1, -1])

    def test_basic(self):
        self.assertEqual(ExactPolynomial([1, 2, 0, 0]).degree, 1)
        self.assertEqual(ExactPolynomial().degree, -1)
        self.assertEqual(ExactPolynomial([0]).leading, 0)
        self.assertEqual(ExactPolynomial.from_roots([1, 2]), ExactPolynomial([2, -3, 1]))
        self.assertEqual(self.cubic.leading, -1)

    def test_evaluate(self):
        for x in (Fraction(-1), Fraction(-64191, 100000), Fraction(1, 3), Fraction(2)):
            self.assertAlmostEqual(float(self.cubic(x)), published_cubic(float(x)), places=14)
        self.assertEqual(self.cubic.evaluate(0), Fraction(-109, 256))

    def test_arithmetic(self):
        p = ExactPolynomial([1, 1])
        q = ExactPolynomial([-1, 1])
        self.assertEqual(p * q, ExactPolynomial([-1, 0, 1]))
        self.assertEqual(p + q, ExactPolynomial([0, 2]))
        self.assertEqual(p - p, ExactPolynomial())
        self.assertEqual(2 * p, ExactPolynomial([2, 2]))
        self.assertEqual(p ** 3, ExactPolynomial([1, 3, 3, 1]))
        self.assertEqual(p ** 0, ExactPolynomial([1]))
        self.assertRaises(InvalidArgument, p.__pow__, -1)

    def test_descartes(self):
        self.assertEqual((-self.cubic).negative_root_count_bound(), 1)
        self.assertEqual(self.cubic.reflect().reflect(), self.cubic)
        self.assertEqual(ExactPolynomial.from_roots([-1, -2, 3]).negative_root_count_bound(), 2)
        self.assertEqual(ExactPolynomial([1, 0, 0, -1]).sign_changes(), 1)

    def test_float_roots(self):
        roots = ExactPolynomial.from_roots([Fraction(1, 2), -3, 2]).to_float_roots()
        np.testing.assert_allclose(roots, [-3, 0.5, 2], atol=1e-12)
        self.assertEqual(ExactPolynomial([5]).to_float_roots().size, 0)

    def test_format(self):
        self.assertEqual(str(-self.cubic), "x^3 - x^2 - 25/64*x + 109/256")
        self.assertEqual(str(self.cubic), "-x^3 + x^2 + 25/64*x - 109/256")
        self.assertEqual(str(ExactPolynomial()), "0")
        payload = ExactPolynomial([Fraction(1, 2), -1]).to_dict()
        self.assertEqual(payload["degree"], 1)
        self.assertEqual(payload["coefficients"][0], {"num": "1", "den": "2"})


class TestCharPoly(unittest.TestCase):
    def test_small(self):
        self.assertEqual(char_poly(exact_identity(2)), ExactPolynomial([1, -2, 1]))
        diagonal = [[E(0)] * 3 for _ in range(3)]
        for i, value in enumerate((1, 2, 3)):
            diagonal[i][i] = E(value)
        self.assertEqual(char_poly(diagonal), ExactPolynomial.from_roots([1, 2, 3]))
        w = E.omega_power(1)
        self.assertEqual(
            char_poly([[E(0), w], [w.conjugate(), E(0)]]), ExactPolynomial([-1, 0, 1])
        )

    def test_invalid(self):
        self.assertRaises(DimensionMismatch, char_poly, [])
        self.assertRaises(DimensionMismatch, char_poly, [[E(1), E(0)]])
        self.assertRaises(InvalidArgument, char_poly, [[E.omega_power(1)]])

    def test_witness(self):
        for gamma in (Fraction(3, 4), Fraction(1, 2), Fraction(1, 5)):
            self.assertEqual(char_poly(exact_witness(gamma)), family_cubic(gamma) ** 3)
        self.assertEqual(family_cubic(Fraction(3, 4)), -ExactPolynomial(
            [Fraction(-109, 256), Fraction(25, 64), 1, -1]
        ))


class TestExactMatrix(unittest.TestCase):
    def test_witness_entries(self):
        w = exact_witness(Fraction(3, 4))
        self.assertEqual(w[0][0], Fraction(1, 4))
        self.assertEqual(w[1][1], Fraction(3, 4))
        self.assertEqual(w[1][3], Fraction(-1, 8))
        self.assertEqual(w[0][7], E(0, Fraction(3, 4)))
        self.assertEqual(w[2][4], E.omega_power(2) * Fraction(3, 4))
        self.assertEqual(w[2][2], 0)
        self.assertTrue(is_exact_hermitian(w))
        self.assertEqual(exact_trace(w), 3)

    def test_cast(self):
        for gamma in (0.25, 0.75):
            numeric = build_witness(BellFamilyParams(gamma)).data
            self.assertLessEqual(np.max(np.abs(exact_to_numpy(exact_witness(gamma)) - numeric)), 1e-15)
        numeric_b = build_witness(BellFamilyParams(0.75, "b")).data
        exact_b = exact_to_numpy(exact_witness(Fraction(3, 4), "b"))
        self.assertLessEqual(np.max(np.abs(exact_b - numeric_b)), 1e-15)

    def test_projectors(self):
        p = exact_bell_projector(1, 1)
        self.assertEqual(exact_matmul(p, p), p)
        self.assertEqual(exact_trace(p), 1)
        self.assertEqual(exact_partial_transpose(exact_partial_transpose(p)), p)
        self.assertRaises(InvalidArgument, exact_bell_projector, 3, 0)
        self.assertRaises(InvalidArgument, exact_bell_projector, 0, 0, "c")

    def test_invalid_gamma(self):
        for gamma in (0, 1, Fraction(3, 2), "x"):
            self.assertRaises(InvalidArgument, exact_witness, gamma)
