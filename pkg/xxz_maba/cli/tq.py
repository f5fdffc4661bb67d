#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import click

from xxz_maba.cli.options import build_config, execute, run_options


@click.command(name="tq")
@run_options
def tq(**flags):
    """Check the inhomogeneous T-Q relation on every solved branch."""
    config = build_config(suites=("tq",), **flags)
    execute(config, table_columns=["tq_residual"])
