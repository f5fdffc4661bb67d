#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

from typing import Optional

import yaml

from xxz_maba.constants import (
    DEFAULT_CHAIN_LENGTH,
    DEFAULT_M0,
    DEFAULT_SEED,
    SUITE_NAMES,
)

EXPLICIT_INSTANCE_HINT = """\
# To pin the model instead of sampling it, replace `seed`/`n` above with
# explicit parameters, complex numbers written as [re, im]:
#
# instance:
#   q: [1.2, 0.4]
#   inhomogeneities: [[0.9, 0.1], [1.1, -0.2]]
#   left: {kappa: [0.7, 0.2], kappa_t: [1.3, -0.1], xi: [0.8, 0.5], xi_t: [1.1, 0.3]}
#   right: {tau: [0.6, -0.4], tau_t: [1.4, 0.2], mu: [0.9, -0.3], mu_t: [1.2, 0.6]}
"""


class TemplateGenerator:
    @staticmethod
    def generate_run_template(output_path: Optional[str] = None) -> str:
        """Generate a run config with the common keys at their default values.

        Args:
            output_path: File to write the template to; nothing is written
                when omitted.
        Returns:
            The template as YAML text.
        """
        run_template = {
            "instance": {
                "seed": DEFAULT_SEED,
                "n": DEFAULT_CHAIN_LENGTH,
                "constrained": False,
            },
            "suites": list(SUITE_NAMES),
            "tolerances": {},
            "m0": DEFAULT_M0,
            "output": "report.jsonl",
            "workers": 1,
        }
        text = "# Run Configuration Template\n"
        text += "# Remove suites you do not need; tolerances override per-suite defaults\n"
        text += "# Add `draws: <count>` to run every sweep check at the same size\n\n"
        text += yaml.dump(run_template, sort_keys=False, width=1000, default_flow_style=False)
        text += "\n" + EXPLICIT_INSTANCE_HINT

        if output_path:
            with open(output_path, "w") as f:
                f.write(text)
        return text
