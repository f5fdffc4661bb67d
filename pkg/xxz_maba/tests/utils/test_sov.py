import unittest

import numpy as np
import pytest

from xxz_maba.utils.bethe import SpectralFunction, eigen_branches, solve_bethe, tq_residual
from xxz_maba.utils.functions import bit_strings, random_point
from xxz_maba.utils.linalg import CPolyU
from xxz_maba.utils.params import constrained_instance, sample_generic
from xxz_maba.utils.sov import (
    bethe_sov_agreement,
    biorthogonality,
    chi_identity_residual,
    eigenstate_residual,
    left_basis,
    left_basis_conditioning,
    left_pseudo_eigen_residual,
    projection_check,
    quadratic_system,
    right_pseudo_eigen_residual,
    scalar_product_residuals,
    sov_eigenstate,
    sov_spectrum,
    spectrum_agreement,
    vacuum_overlap,
)


class TestBases(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.inst = sample_generic(7, 2)

    def test_left_basis(self):
        self.assertEqual(left_basis(2, self.inst).shape, (4, 4))
        self.assertGreater(left_basis_conditioning(2, self.inst), 1e-6)

    def test_pseudo_eigen(self):
        rng = np.random.default_rng(0)
        for h in bit_strings(2):
            u = random_point(rng)
            self.assertLess(left_pseudo_eigen_residual(h, u, 2, self.inst), 1e-10, h)
            self.assertLess(right_pseudo_eigen_residual(h, u, 2, self.inst), 1e-10, h)

    def test_right_vacuum_shift(self):
        rng = np.random.default_rng(3)
        for n in (2, 3):
            inst = sample_generic(7, n)
            for m in (0, 2, 4):
                u = random_point(rng)
                residual = right_pseudo_eigen_residual((1,) * n, u, m, inst)
                self.assertLess(residual, 1e-10, (n, m))

    def test_vacuum_overlap(self):
        for m in (-4, -2, 0, 2):
            self.assertLess(vacuum_overlap(m, 0, self.inst).residual, 1e-10, m)

    def test_scalar_products(self):
        for h in bit_strings(2):
            residuals = scalar_product_residuals(h, 2, self.inst)
            self.assertLess(max(residuals.values()), 1e-9, h)

    def test_projections(self):
        rng = np.random.default_rng(1)
        u = random_point(rng)
        us = tuple(random_point(rng) for _ in range(2))
        for h in bit_strings(2):
            long_string, short_string = projection_check(u, us, h, self.inst)
            self.assertLess(long_string, 1e-9, h)
            self.assertLess(short_string, 1e-9, h)

    def test_projection_root_count(self):
        with pytest.raises(ValueError, match="Expected 2 roots"):
            projection_check(0.9, (1.1,), (0, 0), self.inst)

    def test_chi_identity(self):
        self.assertLess(chi_identity_residual(self.inst), 1e-10)

    def test_chi_identity_constrained(self):
        for n in (1, 2):
            inst = constrained_instance(5, n)
            self.assertLess(chi_identity_residual(inst), 1e-10, n)

    def test_biorthogonality(self):
        report = biorthogonality(2, self.inst)
        self.assertLess(report.off_diagonal, 1e-10)
        self.assertEqual(report.diagonal.shape, (4,))


class TestQuadraticSystem(unittest.TestCase):
    def test_start_solutions(self):
        inst = sample_generic(7, 2)
        system = quadratic_system(inst)
        starts = system.start_solutions()
        self.assertEqual(len(starts), 4)
        for start in starts:
            scale = max(1.0, np.abs(system.rhs).max())
            self.assertLess(np.abs(system.residual(start, s=0.0)).max(), 1e-8 * scale)


class TestSovSpectrum(unittest.TestCase):
    def test_single_site(self):
        inst = sample_generic(7, 1)
        result = sov_spectrum(inst)
        self.assertEqual(result.strategy, "quadratic")
        oracle = eigen_branches(inst, np.random.default_rng(0))
        self.assertLessEqual(spectrum_agreement(result.branches, oracle, 0.8 + 0.6j), 1e-8)

    def test_seeded(self):
        inst = sample_generic(7, 2)
        rng = np.random.default_rng(1)
        result = sov_spectrum(inst, rng, strategy="seeded")
        self.assertEqual(result.failures, [])
        oracle = eigen_branches(inst, np.random.default_rng(2))
        self.assertLessEqual(spectrum_agreement(result.branches, oracle, 0.8 + 0.6j), 1e-7)

    def test_homotopy_reports(self):
        result = sov_spectrum(sample_generic(7, 2))
        self.assertEqual(result.strategy, "homotopy")
        self.assertLessEqual(len(result.branches), 4)
        for failure in result.failures:
            self.assertTrue(failure.startswith("path"))

    def test_unknown_strategy(self):
        with pytest.raises(ValueError, match="Unknown SoV strategy"):
            sov_spectrum(sample_generic(7, 2), strategy="newton")

    def test_agreement_length(self):
        lam = SpectralFunction(lam=CPolyU((1.0, 2.0), 1.3))
        self.assertEqual(spectrum_agreement([lam], [lam, lam], 1.0), float("inf"))


class TestSpectrumThreeSites(unittest.TestCase):
    def test_three_way_agreement(self):
        inst = sample_generic(7, 3)
        u = 0.8 + 0.6j
        oracle = eigen_branches(inst, np.random.default_rng(2))
        bethe = solve_bethe(inst)
        sov = sov_spectrum(inst, np.random.default_rng(1), strategy="seeded")
        self.assertEqual(len(oracle), 8)
        self.assertEqual(sov.failures, [])
        self.assertLessEqual(spectrum_agreement(bethe, oracle, u), 1e-7)
        self.assertLessEqual(spectrum_agreement(sov.branches, oracle, u), 1e-7)
        self.assertLessEqual(spectrum_agreement(bethe, sov.branches, u), 1e-7)
        for branch in bethe:
            self.assertLess(tq_residual(branch, inst), 1e-8)


class TestEigenstates(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.inst = sample_generic(7, 2)
        cls.branches = solve_bethe(cls.inst)

    def test_eigenstate(self):
        for branch in self.branches:
            state = sov_eigenstate(branch, self.inst)
            self.assertLessEqual(eigenstate_residual(state, branch, self.inst), 1e-8)

    def test_bethe_agreement(self):
        for branch in self.branches:
            agreement = bethe_sov_agreement(branch, self.inst)
            self.assertLessEqual(agreement["state"], 1e-7)
            self.assertLessEqual(agreement["projection"], 1e-7)

    def test_needs_roots(self):
        branch = SpectralFunction(lam=self.branches[0].lam)
        with pytest.raises(ValueError, match="Bethe roots"):
            bethe_sov_agreement(branch, self.inst)
