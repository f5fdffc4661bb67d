#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import click

from xxz_maba.cli.options import build_config, execute, run_options


@click.command(name="bethe")
@run_options
def bethe(**flags):
    """Run the Bethe vector checks and print the roots of every branch."""
    config = build_config(suites=("bethe", "proposition1"), **flags)
    execute(config, table_columns=["roots", "bethe_residual", "refined"])
