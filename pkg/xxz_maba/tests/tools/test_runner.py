#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import importlib
import json
import logging
import os
import re
import tempfile
import unittest
from unittest.mock import patch

import xxz_maba.tools.runner
from xxz_maba.errors import SingularityError
from xxz_maba.tools.runner import SuiteRunner
from xxz_maba.tools.suites import Check
from xxz_maba.utils.records import RunConfig


def _passing(ctx):
    return 1e-14, {"points": ctx.draws}


def _failing(ctx):
    return 1.0, {}


def _raising(ctx):
    raise SingularityError("b(u) at u = 0")


FAKE_CHECKS = (
    Check("passing", "algebra", "a passing check", _passing, tolerance=1e-12),
    Check("failing", "algebra", "a failing check", _failing, tolerance=1e-12),
    Check("raising", "gauge", "a raising check", _raising),
    Check("flagged", "spectrum", "a flagged check", _failing, tolerance=1e-7, flag_only=True),
    Check("wide", "sov", "a wide sweep", _passing, tolerance=1e-12, draws=20),
)


@patch("xxz_maba.tools.runner.CATALOGUE", FAKE_CHECKS)
@patch("xxz_maba.tools.runner.checks_for", lambda suites, n: list(FAKE_CHECKS))
class TestSuiteRunnerRecords(unittest.TestCase):
    def setUp(self):
        self.config = RunConfig(seed=3, n=1)

    def test_records(self):
        records, summary = SuiteRunner(self.config).run()
        by_name = {record.check: record for record in records}
        self.assertTrue(by_name["passing"].passed)
        self.assertEqual(by_name["passing"].details, {"points": 5})
        self.assertFalse(by_name["failing"].passed)
        self.assertIsNone(by_name["failing"].error)
        self.assertFalse(summary.passed)
        self.assertEqual(summary.suites["algebra"], {"total": 2, "passed": 1, "failed": 1})

    def test_error_record(self):
        record = SuiteRunner(self.config).run_check(FAKE_CHECKS[2])
        self.assertFalse(record.passed)
        self.assertIsNone(record.residual)
        self.assertTrue(record.error.startswith("SingularityError"))

    def test_flag_only(self):
        record = SuiteRunner(self.config).run_check(FAKE_CHECKS[3])
        self.assertTrue(record.passed)
        self.assertTrue(record.details["flagged"])

    def test_check_draws(self):
        record = SuiteRunner(self.config).run_check(FAKE_CHECKS[4])
        self.assertEqual(record.details, {"points": 20})

    def test_draws_override(self):
        config = RunConfig(seed=3, n=1, draws=3)
        record = SuiteRunner(config).run_check(FAKE_CHECKS[4])
        self.assertEqual(record.details, {"points": 3})

    def test_tolerance_override(self):
        config = RunConfig(seed=3, n=1, tolerances={"algebra": 2.0})
        record = SuiteRunner(config).run_check(FAKE_CHECKS[1])
        self.assertTrue(record.passed)
        self.assertEqual(record.tolerance, 2.0)

    def test_order_with_workers(self):
        config = RunConfig(seed=3, n=1, workers=2)
        records, _ = SuiteRunner(config).run()
        self.assertEqual([r.check for r in records], [c.name for c in FAKE_CHECKS])

    def test_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "reports", "run.jsonl")
            config = RunConfig(seed=3, n=1, output=path)
            SuiteRunner(config).run()
            with open(path) as f:
                lines = [json.loads(line) for line in f]
        self.assertEqual(len(lines), len(FAKE_CHECKS) + 1)
        self.assertEqual(lines[0]["check"], "passing")
        self.assertEqual(lines[0]["seed"], 3)
        self.assertFalse(lines[-1]["passed"])
        self.assertIn("algebra", lines[-1]["summary"])


class TestSuiteRunner(unittest.TestCase):
    def test_algebra_run(self):
        config = RunConfig(seed=7, n=1, suites=("algebra",))
        records, summary = SuiteRunner(config).run()
        self.assertTrue(records)
        self.assertTrue(all(r.suite == "algebra" for r in records))
        self.assertTrue(summary.passed, [r.check for r in records if not r.passed])

    def test_deterministic(self):
        config = RunConfig(seed=7, n=1, suites=("gauge",))
        first, _ = SuiteRunner(config).run()
        second, _ = SuiteRunner(config).run()
        self.assertEqual([r.residual for r in first], [r.residual for r in second])

    def test_branch_table(self):
        table = SuiteRunner(RunConfig(seed=7, n=1)).branch_table()
        self.assertEqual(len(table), 2)
        self.assertIn("Lambda(v_1)", table.columns)
        self.assertEqual(table.index.name, "branch")

    def test_record_anchors(self):
        source = re.compile(
            r"^(§\d(\.\d)?|Prop\. \d|App\. [A-Z])(, Eqs?\. \([\w-]+\)(, \([\w-]+\))*)?$"
        )
        config = RunConfig(seed=7, n=1, suites=("algebra", "gauge", "proposition1"))
        records, _ = SuiteRunner(config).run()
        for record in records:
            self.assertRegex(record.anchor, source, record.check)


class TestLogging(unittest.TestCase):
    def test_import_leaves_logging_alone(self):
        with patch("logging.basicConfig") as basic_config:
            importlib.reload(xxz_maba.tools.runner)
        basic_config.assert_not_called()
        self.assertIs(logging.getLogger("xxz_maba.tools.runner"), xxz_maba.tools.runner.logger)
