#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

import logging

import click

from xxz_maba.cli.bethe import bethe
from xxz_maba.cli.generate_config import generate_config
from xxz_maba.cli.run_all import run_all
from xxz_maba.cli.spectrum import spectrum
from xxz_maba.cli.tq import tq
from xxz_maba.cli.verify import verify


@click.group()
def main():
    """XXZ MABA CLI."""
    logging.basicConfig(level=logging.INFO)


main.add_command(verify)
main.add_command(spectrum)
main.add_command(bethe)
main.add_command(tq)
main.add_command(run_all)
main.add_command(generate_config)

if __name__ == "__main__":
    main()
