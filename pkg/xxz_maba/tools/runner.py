#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.
import logging
import posixpath
import time
from concurrent.futures import ThreadPoolExecutor

import fsspec
import jsonpickle
import numpy as np
import pandas as pd

from xxz_maba.tools.suites import (
    CATALOGUE,
    Check,
    CheckContext,
    checks_for,
    solved_branches,
)
from xxz_maba.utils.bethe import tq_residual
from xxz_maba.utils.helper import instance_from_config, resolve_workers, serialize
from xxz_maba.utils.records import CheckRecord, RunConfig, RunSummary

logger = logging.getLogger(__name__)


class SuiteRunner:
    """Runs the selected check suites against one model instance.

    Records keep catalogue order whatever the worker count; each check
    draws from its own generator seeded by the run seed and its catalogue
    position.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.instance = instance_from_config(config)
        self.workers = resolve_workers(config)

    def plan(self) -> list[Check]:
        return checks_for(self.config.suites, self.instance.n)

    def _context(self, check: Check) -> CheckContext:
        index = CATALOGUE.index(check)
        return CheckContext(
            inst=self.instance,
            rng=np.random.default_rng([self.config.seed, index]),
            m0=self.config.m0,
            draws=self.config.draws or check.draws,
        )

    def run_check(self, check: Check) -> CheckRecord:
        """Evaluate one check; errors become failing records."""
        tolerance = self.config.tolerance_for(check.suite, check.tolerance)
        start = time.perf_counter()
        residual, details, error = None, {}, None
        try:
            residual, details = check.evaluate(self._context(check))
            residual = float(residual)
        except Exception as e:
            error = f"{type(e).__name__}: {e}"
            logger.warning(f"Check {check.name} raised {error}")
        elapsed_ms = (time.perf_counter() - start) * 1e3

        passed = error is None and residual <= tolerance
        if check.flag_only and error is None:
            details = {**details, "flagged": not passed}
            if not passed:
                logger.warning(
                    f"Check {check.name} flagged: residual {residual:.3e} "
                    f"above {tolerance:.1e} for seed {self.config.seed}"
                )
            passed = True
        elif error is None:
            status = "ok" if passed else "FAILED"
            logger.info(f"{check.name}: residual {residual:.3e} / {tolerance:.1e} {status}")

        return CheckRecord(
            check=check.name,
            anchor=check.anchor,
            suite=check.suite,
            n=self.instance.n,
            seed=self.config.seed,
            residual=residual,
            tolerance=tolerance,
            passed=passed,
            elapsed_ms=elapsed_ms,
            error=error,
            details=details,
        )

    def run(self) -> tuple[list[CheckRecord], RunSummary]:
        checks = self.plan()
        logger.info(
            f"Running {len(checks)} checks for N={self.instance.n}, "
            f"seed {self.config.seed}, {self.workers} worker(s)"
        )
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                records = list(pool.map(self.run_check, checks))
        else:
            records = [self.run_check(check) for check in checks]

        summary = RunSummary.from_records(records)
        if self.config.output:
            self.write_report(self.config.output, records, summary)
        return records, summary

    @staticmethod
    def write_report(path: str, records: list[CheckRecord], summary: RunSummary):
        """Write a JSON-lines report: one record per line, then the summary.

        Args:
            path: Local path or fsspec URL of the report.
            records: Check records in run order.
            summary: Summary object written as the last line.
        """
        fs, target = fsspec.core.url_to_fs(path)
        parent = posixpath.dirname(target)
        if parent:
            fs.makedirs(parent, exist_ok=True)
        lines = [serialize(record.to_dict()) for record in records]
        lines.append(serialize(summary.to_dict()))
        with fs.open(target, "w") as file:
            for line in lines:
                file.write(jsonpickle.encode(line, unpicklable=False) + "\n")
        logger.info(f"Report written to {path}")

    def branch_table(self) -> pd.DataFrame:
        """One row per solved eigenvalue branch."""
        inst = self.instance
        rng = np.random.default_rng(self.config.seed)
        rows = []
        for index, branch in enumerate(solved_branches(inst, self.config.m0)):
            row = {f"Lambda(v_{j})": branch(v) for j, v in enumerate(inst.v, start=1)}
            row["roots"] = ", ".join(f"{u:.6g}" for u in branch.roots)
            row["bethe_residual"] = branch.bethe_residual
            row["tq_residual"] = tq_residual(branch, inst, rng)
            row["refined"] = branch.refined
            rows.append(pd.Series(row, name=index))
        frame = pd.DataFrame(rows)
        frame.index.name = "branch"
        return frame
