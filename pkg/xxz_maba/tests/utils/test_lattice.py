import unittest

import numpy as np
import pytest

from xxz_maba.errors import SingularityError
from xxz_maba.utils.functions import random_point
from xxz_maba.utils.lattice import (
    analytic_constraints,
    commutator_residual,
    double_row,
    k_minus_reflection,
    k_plus_reflection,
    monodromy_entry,
    operator_form_residual,
    r_matrix,
    sklyanin_product_residual,
    sklyanin_relation,
    transfer_matrix,
    unitarity_residual,
    yang_baxter_residual,
)
from xxz_maba.utils.params import sample_generic


class TestRMatrix(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(0)
        self.q = 1.3 * np.exp(0.5j)

    def test_yang_baxter(self):
        for _ in range(20):
            u, v, w = (random_point(self.rng) for _ in range(3))
            self.assertLess(yang_baxter_residual(u, v, w, self.q), 1e-12)

    def test_unitarity(self):
        for _ in range(5):
            self.assertLess(unitarity_residual(random_point(self.rng), self.q), 1e-12)

    def test_regular_point(self):
        r = r_matrix(1.0, self.q)
        permutation = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        np.testing.assert_allclose(r, permutation, atol=1e-14)

    def test_pole(self):
        with pytest.raises(SingularityError):
            r_matrix(0.0, self.q)


class TestTransferMatrix(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.inst = sample_generic(7, 2)

    def test_shapes(self):
        u = 0.9 + 0.4j
        self.assertEqual(double_row(u, self.inst).shape, (8, 8))
        self.assertEqual(monodromy_entry(u, self.inst, 0, 1).shape, (4, 4))
        self.assertEqual(transfer_matrix(u, self.inst).shape, (4, 4))

    def test_double_row_read_only(self):
        with pytest.raises(ValueError):
            double_row(0.9, self.inst)[0, 0] = 1.0

    def test_reflection(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            u, v = random_point(rng), random_point(rng)
            self.assertLess(k_minus_reflection(u, v, self.inst), 1e-12)
            self.assertLess(k_plus_reflection(u, v, self.inst), 1e-12)

    def test_commuting(self):
        rng = np.random.default_rng(2)
        for _ in range(5):
            u, v = random_point(rng), random_point(rng)
            self.assertLess(commutator_residual(u, v, self.inst), 1e-11)

    def test_analytic_structure(self):
        report = analytic_constraints(self.inst, np.random.default_rng(3), points=5)
        self.assertLess(report.parity, 1e-11)
        self.assertLess(report.crossing, 1e-11)
        self.assertLess(report.t_one, 1e-10)
        self.assertLess(report.t_i, 1e-10)
        self.assertLess(report.asymptotic, 1e-6)
        self.assertLess(report.held_out, 1e-8)
        self.assertLess(report.top_coefficient, 1e-8)
        self.assertIn("held_out", report.as_dict())

    def test_sklyanin(self):
        for i in (1, 2):
            self.assertLess(sklyanin_relation(self.inst, i), 1e-9)
            self.assertLess(sklyanin_product_residual(self.inst, i), 1e-9)

    def test_sklyanin_site(self):
        with pytest.raises(ValueError, match="Site index"):
            sklyanin_relation(self.inst, 3)

    def test_operator_form(self):
        rng = np.random.default_rng(4)
        for _ in range(5):
            self.assertLess(operator_form_residual(random_point(rng), self.inst), 1e-12)
