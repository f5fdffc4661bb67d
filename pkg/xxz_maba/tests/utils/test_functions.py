#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import unittest

import numpy as np
import pytest

from xxz_maba.errors import ResampleRequestedError, SingularityError
from xxz_maba.utils.functions import (
    IDENTITY_NAMES,
    b,
    bit_strings,
    check_identity,
    crossed,
    eval_basic,
    eval_constants,
    eval_dynamical,
    eval_two_point,
    random_point,
    with_resampling,
    without,
)
from xxz_maba.utils.params import gauge_dl, sample_generic


class TestElementary(unittest.TestCase):
    def test_b(self):
        q = 1.4 + 0.3j
        self.assertEqual(b(1.0, q), 0.0)
        u = 0.8 - 0.6j
        self.assertAlmostEqual(b(1 / u, q), -b(u, q))

    def test_pole(self):
        with pytest.raises(SingularityError, match="b\\(u\\) at u = 0"):
            b(0.0, 1.3)

    def test_crossed(self):
        self.assertAlmostEqual(crossed(2.0, 0.5), 1.0)

    def test_bit_strings(self):
        self.assertEqual(bit_strings(2), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(len(bit_strings(4)), 16)

    def test_without(self):
        self.assertEqual(without((1, 2, 3), 1), (1, 3))


class TestEvaluators(unittest.TestCase):
    def setUp(self):
        self.inst = sample_generic(7, 2)

    def test_basic(self):
        self.assertAlmostEqual(eval_basic("U", 1.0, self.inst), 1.0)
        self.assertAlmostEqual(eval_basic("b", 1.0, self.inst), 0.0)

    def test_basic_unknown(self):
        with pytest.raises(ValueError, match="Unknown function"):
            eval_basic("nope", 1.0, self.inst)

    def test_two_point_set(self):
        u, vs = 0.9 + 0.2j, (1.1 - 0.3j, 0.7 + 0.8j)
        product = eval_two_point("f", u, vs[0], self.inst) * eval_two_point(
            "f", u, vs[1], self.inst
        )
        self.assertAlmostEqual(eval_two_point("f", u, vs, self.inst), product)

    def test_dynamical_unknown(self):
        frame = gauge_dl(self.inst)
        with pytest.raises(ValueError, match="Unknown dynamical function"):
            eval_dynamical("x", 1.0, 1.0, 0, frame)

    def test_constants(self):
        record = eval_constants(self.inst, m=2, p=0, h=(1, 0))
        self.assertIsNotNone(record.measure)
        self.assertIsNotNone(record.linear_b)
        self.assertTrue(np.isfinite(abs(record.eta_hat)))


class TestResampling(unittest.TestCase):
    def test_recovers(self):
        calls = []

        def evaluate(rng):
            calls.append(1)
            if len(calls) < 3:
                raise SingularityError("test")
            return 0.5

        self.assertEqual(with_resampling(evaluate, np.random.default_rng(0)), 0.5)
        self.assertEqual(len(calls), 3)

    def test_gives_up(self):
        def evaluate(rng):
            raise SingularityError("always")

        with pytest.raises(ResampleRequestedError):
            with_resampling(evaluate, np.random.default_rng(0))

    def test_random_point(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            self.assertTrue(0.7 <= abs(random_point(rng)) <= 1.4)


class TestIdentities(unittest.TestCase):
    def test_unknown(self):
        with pytest.raises(ValueError, match="Unknown identity"):
            check_identity("FR9", sample_generic(7, 1))

    def test_names(self):
        self.assertEqual(len(IDENTITY_NAMES), 5)

    def test_sum_rules(self):
        inst = sample_generic(7, 2)
        frame = gauge_dl(inst)
        rng = np.random.default_rng(4)
        for size in (1, 2, 3):
            us = tuple(random_point(rng) for _ in range(size))
            u = random_point(rng)
            for name in ("FR1", "FR2", "FR3"):
                residual = check_identity(name, inst, frame, us, u, m=2 * size)
                self.assertLess(residual, 1e-10, f"{name} with M={size}")

    def test_projection_identities(self):
        rng = np.random.default_rng(5)
        for n in (1, 2):
            inst = sample_generic(3, n)
            us = tuple(random_point(rng) for _ in range(n))
            u = random_point(rng)
            for h in bit_strings(n):
                for name in ("offshellBV4", "functionalsystem1"):
                    residual = check_identity(name, inst, us=us, u=u, h=h)
                    self.assertLess(residual, 1e-10, f"{name} with h={h}")
