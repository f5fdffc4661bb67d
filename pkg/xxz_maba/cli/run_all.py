#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import click

from xxz_maba.cli.options import build_config, execute, run_options


@click.command(name="all")
@run_options
def run_all(**flags):
    """Run every suite."""
    execute(build_config(**flags))
