#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import click

from xxz_maba.cli.options import build_config, execute, run_options


@click.command(name="spectrum")
@run_options
def spectrum(**flags):
    """Solve the spectrum three ways and print one row per eigenvalue branch.

    Runs the spectrum suite, then tabulates Lambda at every inhomogeneity
    with the Bethe roots and T-Q residual of each branch.
    """
    config = build_config(suites=("spectrum",), **flags)
    execute(config, table_columns=["roots", "tq_residual"])
