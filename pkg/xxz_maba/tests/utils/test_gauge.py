#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import unittest

import numpy as np
import pytest

from xxz_maba.utils.functions import random_point
from xxz_maba.utils.gauge import (
    GaugeVectorPair,
    check_commutation,
    check_gauge_invariant_combination,
    check_linear_relations,
    dynamical_op,
    gauge_vector_residuals,
    gauged_transfer,
)
from xxz_maba.utils.params import gauge_dl, gauge_dr, gauge_generic, sample_generic


class TestGaugeVectors(unittest.TestCase):
    def setUp(self):
        self.inst = sample_generic(7, 2)
        self.frames = [
            gauge_dr(self.inst),
            gauge_dl(self.inst),
            gauge_generic(self.inst, np.random.default_rng(0)),
        ]

    def test_scalar_products(self):
        rng = np.random.default_rng(1)
        for frame in self.frames:
            for m in (-2, 0, 3):
                residuals = gauge_vector_residuals(random_point(rng), m, frame)
                self.assertLess(max(residuals.values()), 1e-12, frame.tag)

    def test_pair(self):
        pair = GaugeVectorPair(0.9, 0, self.frames[0])
        self.assertEqual(pair.x.shape, (2,))
        self.assertAlmostEqual(pair.x_tilde @ pair.x, 0.0)


class TestGaugedOperators(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.inst = sample_generic(7, 2)
        cls.dr = gauge_dr(cls.inst)
        cls.dl = gauge_dl(cls.inst)

    def test_unknown_operator(self):
        with pytest.raises(ValueError, match="Unknown dynamical operator"):
            dynamical_op("E", 0.9, 0, self.dr, self.inst)

    def test_reassembled_transfer(self):
        rng = np.random.default_rng(2)
        generic = gauge_generic(self.inst, rng)
        for frame in (self.dr, self.dl, generic):
            for m in (0, 2):
                result = gauged_transfer(random_point(rng), m, frame, self.inst)
                self.assertLess(result.residual, 1e-11, frame.tag)

    def test_exchange_relations(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            u, v = random_point(rng), random_point(rng)
            bb, ab, db = check_commutation(u, v, 0, self.dl, self.inst)
            self.assertLess(bb, 1e-11)
            self.assertLess(ab, 1e-11)
            self.assertLess(db, 1e-11)

    def test_linear_relations(self):
        rng = np.random.default_rng(4)
        for p, m in ((0, 0), (2, 0), (0, 2)):
            a, d = check_linear_relations(random_point(rng), p, m, self.dr, self.dl, self.inst)
            self.assertLess(a, 1e-10)
            self.assertLess(d, 1e-10)

    def test_invariant_combination(self):
        u = random_point(np.random.default_rng(5))
        for frame in (self.dr, self.dl):
            self.assertLess(check_gauge_invariant_combination(u, 1, frame, self.inst), 1e-11)
