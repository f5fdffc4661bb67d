#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import unittest

import numpy as np
import pytest

from xxz_maba.errors import (
    DegenerateParametrizationError,
    GaugeDegeneracyError,
    GenericityError,
)
from xxz_maba.utils.functions import chi, eta
from xxz_maba.utils.params import (
    GaugeFrame,
    constrained_instance,
    gauge_dl,
    gauge_dr,
    genericity_violations,
    left_boundary_from_xi,
    make_instance,
    reparametrization_residual,
    right_boundary_from_mu,
    sample_generic,
)

EXPLICIT = {
    "q": 1.2 + 0.4j,
    "v": (0.9 + 0.1j, 1.1 - 0.2j),
    "kappa": 0.7 + 0.2j,
    "kappa_t": 1.3 - 0.1j,
    "xi": 0.8 + 0.5j,
    "xi_t": 1.1 + 0.3j,
    "tau": 0.6 - 0.4j,
    "tau_t": 1.4 + 0.2j,
    "mu": 0.9 - 0.3j,
    "mu_t": 1.2 + 0.6j,
}


class TestBoundaries(unittest.TestCase):
    def test_left_reparametrization(self):
        left = left_boundary_from_xi(1.0, 2.0, 1.0, 1.0)
        self.assertAlmostEqual(left.eps_plus, 4j)
        self.assertAlmostEqual(left.eps_minus, 4j)

    def test_right_reparametrization(self):
        right = right_boundary_from_mu(1.0, 1.0, 2.0, 1.0)
        self.assertAlmostEqual(right.nu_plus, 1j * 2.5)
        self.assertAlmostEqual(right.nu_minus, 1j * 2.5)

    def test_zero_parameter(self):
        with pytest.raises(DegenerateParametrizationError, match="xi_t"):
            left_boundary_from_xi(1.0, 1.0, 1.0, 0.0)


class TestSampling(unittest.TestCase):
    def test_deterministic(self):
        self.assertEqual(sample_generic(7, 2), sample_generic(7, 2))
        self.assertNotEqual(sample_generic(7, 2), sample_generic(8, 2))

    def test_generic(self):
        for n in (1, 2, 3):
            inst = sample_generic(11, n)
            self.assertEqual(inst.n, n)
            self.assertEqual(inst.dim, 2**n)
            self.assertEqual(genericity_violations(inst), [])
            self.assertLessEqual(reparametrization_residual(inst), 1e-15)

    def test_chain_length(self):
        with pytest.raises(GenericityError, match="chain length"):
            sample_generic(7, 7)

    def test_constrained(self):
        for n in (1, 2):
            inst = constrained_instance(5, n)
            left, right = inst.left, inst.right
            scale = abs(left.kappa * right.tau * left.kappa_t * right.tau_t) * 10
            self.assertLess(abs(chi(inst)), 1e-12 * scale)
            self.assertLess(abs(eta(inst)), 1e-10)


class TestMakeInstance(unittest.TestCase):
    def test_explicit(self):
        inst = make_instance(**EXPLICIT)
        self.assertEqual(inst.n, 2)
        self.assertEqual(inst.left.kappa, EXPLICIT["kappa"])

    def test_root_of_unity(self):
        with pytest.raises(GenericityError, match="q\\^1 - 1"):
            make_instance(**{**EXPLICIT, "q": 1.0})

    def test_unvalidated(self):
        inst = make_instance(**{**EXPLICIT, "q": 1.0}, validate=False)
        self.assertEqual(inst.q, 1.0)

    def test_boundary_modulus(self):
        with pytest.raises(GenericityError) as e:
            make_instance(**{**EXPLICIT, "tau": 50.0})
        self.assertIn("|tau|", str(e.value.violations))


class TestGaugeFrame(unittest.TestCase):
    def test_gamma(self):
        frame = GaugeFrame(2.0, 1.0, 1.5, 0, 1, "generic")
        self.assertAlmostEqual(frame.gamma_at(2.0, 1), 2.0 / 1.5 * 2.0 - 1.5 / 2.0)
        self.assertAlmostEqual(frame.gamma(0), 1.0)

    def test_degenerate(self):
        frame = GaugeFrame(1.0, 1.0, 1.5, 0, 1, "generic")
        with pytest.raises(GaugeDegeneracyError, match="gamma_0"):
            frame.gamma(0)

    def test_frames(self):
        inst = sample_generic(7, 2)
        dr, dl = gauge_dr(inst), gauge_dl(inst, M=1)
        self.assertEqual((dr.tag, dr.M), ("dr", 2))
        self.assertEqual((dl.tag, dl.M), ("dl", 1))
        self.assertNotEqual(dl.alpha, gauge_dl(inst).alpha)
        self.assertTrue(np.isfinite(dr.gamma(0)))
