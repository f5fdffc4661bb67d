#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import unittest

import numpy as np
import pytest

from xxz_maba.errors import CoincidentRootsError
from xxz_maba.utils.bethe import (
    SpectralFunction,
    bethe_residuals,
    bethe_vector,
    check_full_offshell,
    check_offshell_transfer,
    check_proposition1,
    check_weight_decomposition,
    closed_value_residual,
    creation_string,
    deduplicate,
    eigen_branches,
    highest_weight_actions,
    highest_weight_vector,
    modified_diagonal_residual,
    nilpotency_residual,
    off_diagonal_actions,
    q_polynomial,
    solve_bethe,
    spectral_membership,
    tq_residual,
)
from xxz_maba.utils.functions import random_point
from xxz_maba.utils.lattice import transfer_matrix
from xxz_maba.utils.linalg import CPolyU, crossing_representative
from xxz_maba.utils.params import constrained_instance, gauge_dl, sample_generic


def random_roots(rng, count):
    return tuple(random_point(rng) for _ in range(count))


class TestRepresentation(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.inst = sample_generic(7, 2)

    def test_vacuum(self):
        omega = highest_weight_vector(self.inst)
        self.assertEqual(omega.shape, (4,))
        self.assertGreater(np.linalg.norm(omega), 0.0)

    def test_empty_string(self):
        frame = gauge_dl(self.inst)
        np.testing.assert_array_equal(creation_string((), 0, frame, self.inst), np.eye(4))

    def test_highest_weight_actions(self):
        rng = np.random.default_rng(0)
        for _ in range(5):
            residuals = highest_weight_actions(random_point(rng), self.inst)
            self.assertLess(max(residuals.values()), 1e-10)

    def test_nilpotency(self):
        rng = np.random.default_rng(1)
        residual = nilpotency_residual(random_point(rng), random_roots(rng, 2), self.inst)
        self.assertLess(residual, 1e-9)

    def test_off_diagonal_actions(self):
        residuals = off_diagonal_actions(0.8 + 0.5j, self.inst)
        self.assertLess(max(residuals.values()), 1e-10)

    def test_modified_diagonal(self):
        for size in (1, 2):
            self.assertLess(modified_diagonal_residual(1.1 - 0.3j, self.inst, M=size), 1e-10)

    def test_weight_decomposition(self):
        rng = np.random.default_rng(2)
        deficiencies = check_weight_decomposition(random_roots(rng, 2), self.inst)
        self.assertEqual(deficiencies["total"], 0)
        self.assertEqual(set(deficiencies), {"M=0", "M=1", "M=2", "total"})


class TestOffShell(unittest.TestCase):
    def test_modified_transfer_action(self):
        rng = np.random.default_rng(3)
        for n in (1, 2):
            inst = sample_generic(7, n)
            for size in range(1, n + 1):
                us = random_roots(rng, size)
                residual = check_offshell_transfer(random_point(rng), us, inst)
                self.assertLess(residual, 1e-9, f"N={n}, M={size}")

    def test_proposition1(self):
        rng = np.random.default_rng(4)
        for n in (1, 2, 3):
            inst = sample_generic(13, n)
            for _ in range(3):
                u, us = random_point(rng), random_roots(rng, n)
                self.assertLess(check_proposition1(u, us, inst), 1e-9, f"N={n}")
                self.assertLess(check_full_offshell(u, us, inst), 1e-9, f"N={n}")

    def test_proposition1_constrained(self):
        rng = np.random.default_rng(5)
        inst = constrained_instance(5, 2)
        u, us = random_point(rng), random_roots(rng, 2)
        self.assertLess(check_proposition1(u, us, inst), 1e-9)
        self.assertLess(check_full_offshell(u, us, inst), 1e-9)

    def test_proposition1_needs_full_set(self):
        inst = sample_generic(7, 2)
        with pytest.raises(ValueError, match="Expected 2 roots"):
            check_proposition1(0.9, (1.1,), inst)


class TestBetheEquations(unittest.TestCase):
    def setUp(self):
        self.inst = sample_generic(7, 2)

    def test_coincident(self):
        u = 0.8 + 0.3j
        with pytest.raises(CoincidentRootsError):
            bethe_residuals((u, -u), self.inst)

    def test_permutation(self):
        us = (0.8 + 0.3j, 1.2 - 0.4j)
        forward = bethe_residuals(us, self.inst)
        backward = bethe_residuals(us[::-1], self.inst)
        np.testing.assert_allclose(forward, backward[::-1], rtol=1e-12)

    def test_off_shell_nonzero(self):
        residuals = bethe_residuals((0.8 + 0.3j, 1.2 - 0.4j), self.inst)
        self.assertGreater(np.abs(residuals).max(), 1e-6)


class TestQPolynomial(unittest.TestCase):
    def test_empty(self):
        self.assertEqual(q_polynomial((), 1.3).coeffs, (1.0 + 0.0j,))

    def test_crossing(self):
        q = 1.3 * np.exp(0.3j)
        poly = q_polynomial((0.8 + 0.3j, 1.2 - 0.4j), q)
        u = 0.9 - 0.7j
        self.assertAlmostEqual(poly(u), poly(1 / (q * u)))
        self.assertEqual(poly.degree, 2)


class TestSpectrum(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.inst = sample_generic(7, 1)
        cls.branches = solve_bethe(cls.inst)

    def test_oracle_matches_eigenvalues(self):
        branches = eigen_branches(self.inst, np.random.default_rng(0))
        u = 0.7 + 0.9j
        expected = np.linalg.eigvals(transfer_matrix(u, self.inst))
        found = np.array([b(u) for b in branches])
        scale = np.abs(expected).max()
        for value in expected:
            self.assertLess(np.abs(found - value).min(), 1e-8 * scale)

    def test_branch_count(self):
        self.assertEqual(len(self.branches), 2)
        for branch in self.branches:
            self.assertEqual(len(branch.roots), 1)

    def test_on_shell(self):
        for branch in self.branches:
            self.assertLess(branch.bethe_residual, 1e-8)
            self.assertLess(tq_residual(branch, self.inst), 1e-8)
            self.assertLess(closed_value_residual(branch, self.inst), 1e-8)
            self.assertLess(spectral_membership(branch, 1.2 + 0.1j, self.inst), 1e-8)

    def test_eigenvector(self):
        for branch in self.branches:
            psi = bethe_vector(branch.roots, self.inst)
            u = 0.6 - 1.1j
            lhs = transfer_matrix(u, self.inst) @ psi
            self.assertLess(np.linalg.norm(lhs - branch(u) * psi) / np.linalg.norm(lhs), 1e-7)

    def test_tq_discriminates(self):
        branch = SpectralFunction(lam=self.branches[0].lam, roots=(0.83 + 0.41j,))
        self.assertGreater(tq_residual(branch, self.inst), 1e-3)

    def test_tq_needs_roots(self):
        with pytest.raises(ValueError, match="Bethe roots"):
            tq_residual(SpectralFunction(lam=self.branches[0].lam), self.inst)

    def test_deduplicate(self):
        lam = CPolyU((1.0, 2.0, 3.0), 1.3)
        near = CPolyU((1.0, 2.0, 3.0 + 1e-9), 1.3)
        merged = deduplicate([SpectralFunction(lam=lam), SpectralFunction(lam=near)])
        self.assertEqual(len(merged), 1)

    def test_strategy(self):
        with pytest.raises(ValueError, match="Unknown Bethe strategy"):
            solve_bethe(self.inst, strategy="homotopy")

    def test_chain_length(self):
        with pytest.raises(ValueError, match="N <= 4"):
            solve_bethe(sample_generic(7, 5))


class TestSpectrumTwoSites(unittest.TestCase):
    def test_complete(self):
        inst = sample_generic(11, 2)
        branches = solve_bethe(inst)
        self.assertEqual(len(branches), 4)
        for branch in branches:
            self.assertLess(branch.bethe_residual, 1e-8)
            self.assertLess(tq_residual(branch, inst), 1e-8)

    def test_canonical_roots(self):
        inst = sample_generic(11, 2)
        bound = 1 / np.sqrt(abs(inst.q))
        for branch in solve_bethe(inst):
            for u in branch.roots:
                self.assertEqual(crossing_representative(u, inst.q), u)
                self.assertGreaterEqual(abs(u), bound)
                self.assertGreaterEqual(u.real, 0.0)
