#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import click

from xxz_maba.cli.options import build_config, execute, run_options
from xxz_maba.constants import SUITE_NAMES


@click.command(name="verify")
@click.option(
    "--suite",
    "suites",
    type=click.Choice(SUITE_NAMES),
    multiple=True,
    help="Suite to run; repeat for several (default: all)",
)
@run_options
def verify(suites, **flags):
    """Run residual checks of the selected suites and print a summary.

    Exits with status 1 if any check fails.
    """
    config = build_config(suites=suites or None, **flags)
    execute(config)
