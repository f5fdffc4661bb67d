#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from xxz_maba.constants import (
    DEFAULT_CHAIN_LENGTH,
    DEFAULT_M0,
    DEFAULT_SEED,
    SUITE_NAMES,
    tol,
    tolerance_scale,
)
from xxz_maba.version import version


@dataclass(frozen=True)
class RunConfig:
    """Everything a suite run needs, after config file and CLI flags are merged.

    ``explicit`` holds explicit instance parameters as decoded complex
    numbers; when it is ``None`` the instance is sampled from ``seed`` and
    ``n``. ``draws`` overrides the sweep size of every check when set.
    ``workers`` stays ``None`` until resolved against the environment.
    """

    seed: int = DEFAULT_SEED
    n: int = DEFAULT_CHAIN_LENGTH
    constrained: bool = False
    explicit: dict[str, Any] | None = None
    suites: tuple[str, ...] = SUITE_NAMES
    tolerances: dict[str, float] = field(default_factory=dict)
    m0: int = DEFAULT_M0
    draws: int | None = None
    output: str | None = None
    workers: int | None = None

    def tolerance_for(self, suite: str, base: float | None = None) -> float:
        """Suite override if configured, else ``base`` (or the default) scaled with N."""
        if suite in self.tolerances:
            return self.tolerances[suite]
        if base is None:
            return tol(self.n)
        return base * tolerance_scale(self.n)


@dataclass
class CheckRecord:
    check: str
    anchor: str
    suite: str
    n: int
    seed: int
    residual: float | None
    tolerance: float
    passed: bool
    elapsed_ms: float
    error: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "anchor": self.anchor,
            "suite": self.suite,
            "n": self.n,
            "seed": self.seed,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
            "error": self.error,
            "details": self.details,
        }


@dataclass
class RunSummary:
    suites: dict[str, dict[str, int]]
    passed: bool
    version: str = version

    @classmethod
    def from_records(cls, records: list[CheckRecord]) -> "RunSummary":
        suites: dict[str, dict[str, int]] = {}
        for record in records:
            counts = suites.setdefault(record.suite, {"total": 0, "passed": 0, "failed": 0})
            counts["total"] += 1
            counts["passed" if record.passed else "failed"] += 1
        return cls(suites=suites, passed=all(r.passed for r in records))

    def to_dict(self) -> dict[str, Any]:
        return {"summary": self.suites, "passed": self.passed, "version": self.version}

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame.from_dict(self.suites, orient="index")
        frame.index.name = "suite"
        return frame
