#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Flags shared by the suite commands and their merge with a config file."""

from dataclasses import replace

import click

from xxz_maba.constants import ENUMERATION_MAX_N, MAX_CHAIN_LENGTH, SUITE_NAMES
from xxz_maba.errors import ConfigError, MabaError
from xxz_maba.tools.runner import SuiteRunner
from xxz_maba.utils.helper import load_config
from xxz_maba.utils.records import RunConfig

_RUN_OPTIONS = (
    click.option(
        "--n",
        "n",
        type=click.IntRange(1, MAX_CHAIN_LENGTH),
        default=None,
        help="Chain length of the sampled instance",
    ),
    click.option("--seed", type=int, default=None, help="Seed of the sampled instance"),
    click.option(
        "--constrained",
        is_flag=True,
        default=False,
        help="Sample boundaries with a vanishing inhomogeneous term",
    ),
    click.option(
        "--tol",
        type=click.FloatRange(min=0, min_open=True),
        default=None,
        help="Tolerance override for every selected suite",
    ),
    click.option(
        "--config",
        "config_path",
        type=str,
        default=None,
        help="Run config (YAML or JSON, local path or URL)",
    ),
    click.option("--out", type=str, default=None, help="JSON-lines report path"),
    click.option(
        "--workers",
        type=click.IntRange(min=1),
        default=None,
        help="Worker count (default: $XXZ_MABA_WORKERS or 1)",
    ),
    click.option("--m0", type=int, default=None, help="Base gauge label"),
)


def run_options(command):
    for option in reversed(_RUN_OPTIONS):
        command = option(command)
    return command


def build_config(
    config_path: str | None = None,
    n: int | None = None,
    seed: int | None = None,
    constrained: bool = False,
    tol: float | None = None,
    out: str | None = None,
    workers: int | None = None,
    m0: int | None = None,
    suites=None,
) -> RunConfig:
    """Merge a config file with command-line flags; flags win.

    Raises:
        click.UsageError: If the config is invalid or conflicts with a flag.
    """
    try:
        config = load_config(config_path) if config_path else RunConfig()
    except ConfigError as e:
        raise click.UsageError(str(e))

    overrides = {}
    if n is not None:
        if config.explicit is not None:
            raise click.UsageError("--n cannot be combined with an explicit instance")
        overrides["n"] = n
    if seed is not None:
        overrides["seed"] = seed
    if constrained:
        overrides["constrained"] = True
    if out is not None:
        overrides["output"] = out
    if workers is not None:
        overrides["workers"] = workers
    if m0 is not None:
        overrides["m0"] = m0
    if suites is not None:
        if not suites:
            raise click.UsageError("Suite list is empty")
        overrides["suites"] = tuple(s for s in SUITE_NAMES if s in suites)
    config = replace(config, **overrides)
    if tol is not None:
        config = replace(config, tolerances={suite: tol for suite in config.suites})
    return config


def execute(config: RunConfig, table_columns: list[str] | None = None):
    """Run the suites, print the summary and optional branch table, set the exit code."""
    try:
        runner = SuiteRunner(config)
        records, summary = runner.run()
    except ConfigError as e:
        raise click.UsageError(str(e))
    except MabaError as e:
        raise click.ClickException(str(e))

    click.echo(summary.to_frame().to_string())
    for record in records:
        if not record.passed:
            reason = record.error or f"residual {record.residual:.3e} > {record.tolerance:.1e}"
            click.echo(f"FAILED {record.suite}/{record.check} ({record.anchor}): {reason}")

    if table_columns is not None:
        if runner.instance.n > ENUMERATION_MAX_N:
            raise click.UsageError(f"Branch tables need N <= {ENUMERATION_MAX_N}")
        try:
            table = runner.branch_table()
        except MabaError as e:
            raise click.ClickException(str(e))
        columns = [c for c in table.columns if c in table_columns or c.startswith("Lambda")]
        click.echo(table[columns].to_string())

    if not summary.passed:
        click.get_current_context().exit(1)
