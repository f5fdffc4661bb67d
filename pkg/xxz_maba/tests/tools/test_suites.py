import re
import unittest

import numpy as np

from xxz_maba.constants import (
    ENUMERATION_MAX_N,
    EXCHANGE_RULE_DRAWS,
    FOUNDATION_DRAWS,
    PROPOSITION1_DRAWS,
    PROPOSITION1_INSTANCES,
    SUITE_NAMES,
)
from xxz_maba.tools.suites import CATALOGUE, CheckContext, checks_for
from xxz_maba.utils.params import sample_generic


def find(name):
    return next(check for check in CATALOGUE if check.name == name)


class TestCatalogue(unittest.TestCase):
    def test_unique_names(self):
        names = [check.name for check in CATALOGUE]
        self.assertEqual(len(names), len(set(names)))

    def test_anchors(self):
        source = re.compile(
            r"^(§\d(\.\d)?|Prop\. \d|App\. [A-Z])(, Eqs?\. \([\w-]+\)(, \([\w-]+\))*)?$"
        )
        for check in CATALOGUE:
            self.assertRegex(check.anchor, source, check.name)
            self.assertIn(check.suite, SUITE_NAMES)

    def test_draws(self):
        for name in ("yang_baxter", "reflection", "dual_reflection"):
            self.assertEqual(find(name).draws, FOUNDATION_DRAWS, name)
        self.assertEqual(find("sum_rules").draws, EXCHANGE_RULE_DRAWS)
        self.assertEqual(find("proposition1").draws, PROPOSITION1_DRAWS)

    def test_every_suite_has_checks(self):
        covered = {check.suite for check in CATALOGUE}
        self.assertEqual(covered, set(SUITE_NAMES))

    def test_only_spectrum_flags(self):
        flagged = [check.name for check in CATALOGUE if check.flag_only]
        self.assertEqual(flagged, ["sov_oracle"])


class TestChecksFor(unittest.TestCase):
    def test_suite_order(self):
        checks = checks_for(("tq", "algebra"), 2)
        suites = [check.suite for check in checks]
        self.assertEqual(suites[0], "algebra")
        self.assertEqual(suites[-1], "tq")

    def test_skips_long_chains(self):
        short = checks_for(("spectrum",), 2)
        long = checks_for(("spectrum",), ENUMERATION_MAX_N + 1)
        self.assertIn("sov_oracle", [check.name for check in short])
        self.assertEqual(long, [])

    def test_sov_oracle_limit(self):
        names = [check.name for check in checks_for(("spectrum",), 4)]
        self.assertNotIn("sov_oracle", names)
        self.assertIn("branch_count", names)


class TestEvaluate(unittest.TestCase):
    def setUp(self):
        self.ctx = CheckContext(sample_generic(7, 1), np.random.default_rng(0))

    def test_yang_baxter(self):
        residual, _ = find("yang_baxter").evaluate(self.ctx)
        self.assertLess(residual, 1e-12)

    def test_branch_count(self):
        residual, _ = find("branch_count").evaluate(self.ctx)
        self.assertEqual(residual, 0.0)

    def test_proposition1_sweep(self):
        check = find("proposition1")
        for n in (1, 2, 3):
            ctx = CheckContext(sample_generic(11, n), np.random.default_rng(n), draws=check.draws)
            residual, details = check.evaluate(ctx)
            self.assertLess(residual, 1e-9, n)
            self.assertEqual(len(details["residuals"]), PROPOSITION1_INSTANCES)
            self.assertEqual(len(set(details["seeds"])), PROPOSITION1_INSTANCES - 1)
