import unittest

import numpy as np
import pytest

from xxz_maba.errors import ConditioningError, ShapeError, SizeError
from xxz_maba.utils.linalg import (
    CPolyU,
    crossing_nodes,
    crossing_representative,
    crossing_variable,
    determinant,
    eigenpairs,
    interpolate_in_U,
    kron,
    lift_from_crossing,
    operator_residual,
    relative_residual,
)

Q = 1.3 * np.exp(0.4j)


class TestKron(unittest.TestCase):
    def test_shape(self):
        result = kron(np.eye(2), np.ones((2, 3)))
        self.assertEqual(result.shape, (4, 6))
        self.assertEqual(result.dtype, np.complex128)

    def test_size_limit(self):
        with pytest.raises(SizeError, match="maximum dimension"):
            kron(np.eye(2**7), np.eye(2**6))

    def test_vector_rejected(self):
        with pytest.raises(ShapeError):
            kron(np.ones(3), np.eye(2))


class TestDeterminant(unittest.TestCase):
    def test_known_value(self):
        self.assertAlmostEqual(determinant([[1, 2j], [3, 4]]), 4 - 6j)

    def test_non_square(self):
        with pytest.raises(ShapeError, match="square"):
            determinant(np.ones((2, 3)))


class TestEigenpairs(unittest.TestCase):
    def test_sorted_and_certified(self):
        rng = np.random.default_rng(3)
        matrix = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        pairs = eigenpairs(matrix)
        values = [value for value, _ in pairs]
        self.assertEqual(values, sorted(values, key=lambda z: (z.real, z.imag)))
        for value, vector in pairs:
            self.assertAlmostEqual(np.linalg.norm(vector), 1.0)
            np.testing.assert_allclose(matrix @ vector, value * vector, atol=1e-10)

    def test_diagonal(self):
        pairs = eigenpairs(np.diag([3.0, -1.0, 2.0]))
        self.assertEqual([v.real for v, _ in pairs], [-1.0, 2.0, 3.0])

    def test_size_limit(self):
        with pytest.raises(SizeError):
            eigenpairs(np.zeros((257, 257)))

    def test_non_square(self):
        with pytest.raises(ShapeError):
            eigenpairs(np.zeros((2, 3)))


class TestResiduals(unittest.TestCase):
    def test_relative_residual(self):
        self.assertEqual(relative_residual(2.0, 2.0), 0.0)
        self.assertAlmostEqual(relative_residual(1.0, 0.0), 0.5)

    def test_operator_residual_zero(self):
        self.assertEqual(operator_residual(np.zeros((2, 2)), np.zeros((2, 2))), 0.0)
        self.assertEqual(
            operator_residual(np.zeros((2, 2)), np.eye(2), scale=0.0), float("inf")
        )

    def test_operator_residual_scale(self):
        value = operator_residual(np.eye(2), 2 * np.eye(2), scale=1.0)
        self.assertAlmostEqual(value, np.sqrt(2))


class TestCrossingVariable(unittest.TestCase):
    def test_invariances(self):
        for u in (0.7 + 0.2j, 1.1 - 0.9j, -0.3 + 1.2j):
            value = crossing_variable(u, Q)
            self.assertAlmostEqual(crossing_variable(-u, Q), value)
            self.assertAlmostEqual(crossing_variable(1 / (Q * u), Q), value)

    def test_special_points(self):
        self.assertAlmostEqual(crossing_variable(1.0, Q), 1.0)
        self.assertAlmostEqual(crossing_variable(1j, Q), -1.0)

    def test_lift(self):
        for value in (0.3 + 0.1j, -2.0 + 1.0j, 5.0):
            u = lift_from_crossing(value, Q)
            self.assertAlmostEqual(crossing_variable(u, Q), value)

    def test_lift_is_canonical(self):
        for value in (0.3 + 0.1j, -2.0 + 1.0j, 5.0):
            u = lift_from_crossing(value, Q)
            self.assertEqual(crossing_representative(u, Q), u)

    def test_representative(self):
        u = 0.5 + 0.2j
        image = 1 / (Q * u)
        for point in (u, -u, image, -image):
            canonical = crossing_representative(point, Q)
            self.assertAlmostEqual(canonical, image if image.real > 0 else -image)
            self.assertGreaterEqual(abs(canonical), 1.0)
            self.assertAlmostEqual(crossing_variable(canonical, Q), crossing_variable(u, Q))

    def test_representative_inside_unit_circle(self):
        u = 0.95 + 0.05j
        self.assertEqual(crossing_representative(u, Q), u)
        self.assertEqual(crossing_representative(-u, Q), u)

    def test_nodes(self):
        nodes = crossing_nodes(5, Q)
        values = np.array([crossing_variable(u, Q) for u in nodes])
        np.testing.assert_allclose(np.abs(values), 1.5)
        self.assertEqual(len(set(np.round(values, 8))), 5)


class TestInterpolation(unittest.TestCase):
    def test_recovers_polynomial(self):
        coeffs = (1.0, -2.0 + 1.0j, 0.5j, 3.0)
        exact = CPolyU(coeffs, Q)
        nodes = crossing_nodes(6, Q)
        fitted = interpolate_in_U([(u, exact(u)) for u in nodes], 3, Q)
        np.testing.assert_allclose(fitted.coeffs, coeffs, atol=1e-12)
        self.assertLess(fitted.residual, 1e-12)
        self.assertLess(fitted.distance(exact), 1e-12)

    def test_too_few_points(self):
        with pytest.raises(ConditioningError, match="at least"):
            interpolate_in_U([(0.9, 1.0), (1.2j, 2.0)], 3, Q)

    def test_coincident_nodes(self):
        u = 0.8 + 0.3j
        with pytest.raises(ConditioningError, match="coincident"):
            interpolate_in_U([(u, 1.0), (-u, 1.0), (1.3, 0.0)], 1, Q)

    def test_trimmed_degree(self):
        poly = CPolyU((1.0, 2.0, 0.0, 0.0), Q)
        self.assertEqual(poly.degree, 1)
        self.assertEqual(poly.trimmed().coeffs, (1.0, 2.0))
