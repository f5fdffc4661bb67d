#!/usr/bin/env python3

# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

MAX_DIMENSION = 2**12
MAX_EIGEN_DIMENSION = 2**8
EIGEN_ITERATION_FACTOR = 100
MAX_CHAIN_LENGTH = 6
ENUMERATION_MAX_N = 4
SOV_DIRECT_MAX_N = 3
SAMPLING_CAP = 1000

POLE_MARGIN = 1e-10
GAMMA_THRESHOLD = 1e-8
GENERICITY_MARGIN = 1e-3
BOUNDARY_MODULUS_RANGE = (0.1, 10.0)
COINCIDENCE_MARGIN = 1e-12
ROOT_DISTINCTNESS = 1e-10
DEDUP_DISTANCE = 1e-6
EIGEN_GAP = 1e-6
HOMOTOPY_STEPS = 20
RESAMPLE_RETRIES = 10
REPARAMETRIZATION_TOLERANCE = 1e-12

# Sampling ranges for sample_generic, all moduli with uniform random phase
# unless stated otherwise.
Q_MODULUS_RANGE = (1.1, 1.5)
Q_PHASE_RANGE = (0.2, 1.0)
BOUNDARY_SAMPLE_RANGE = (0.5, 2.0)
INHOMOGENEITY_MODULUS_RANGE = (0.8, 1.25)

DEFAULT_M0 = 0
DEFAULT_SEED = 7
DEFAULT_CHAIN_LENGTH = 2
DEFAULT_DRAWS = 5

# Draw counts of the sweep checks that run more points than DEFAULT_DRAWS.
FOUNDATION_DRAWS = 20
EXCHANGE_RULE_DRAWS = 50
OFFSHELL_DRAWS = 10
PROPOSITION1_DRAWS = 25
PROPOSITION1_INSTANCES = 5

DEFAULT_WORKERS = 1
WORKERS_ENV_VAR = "XXZ_MABA_WORKERS"

SUITE_NAMES = (
    "algebra",
    "gauge",
    "bethe",
    "proposition1",
    "sov",
    "spectrum",
    "tq",
)


def tolerance_scale(n: int) -> float:
    """Relative growth factor of every tolerance with the chain length."""
    return 10.0 ** max(0, n - 3)


def tol(n: int) -> float:
    """Base relative tolerance for a chain of length ``n``."""
    return 1e-9 * tolerance_scale(n)


_COMPLEX_PAIR = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

RUN_CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "instance": {
            "type": "object",
            "properties": {
                "seed": {"type": "integer"},
                "n": {"type": "integer", "minimum": 1, "maximum": MAX_CHAIN_LENGTH},
                "constrained": {"type": "boolean"},
                "q": _COMPLEX_PAIR,
                "inhomogeneities": {"type": "array", "items": _COMPLEX_PAIR},
                "left": {
                    "type": "object",
                    "properties": {
                        key: _COMPLEX_PAIR for key in ("kappa", "kappa_t", "xi", "xi_t")
                    },
                    "required": ["kappa", "kappa_t", "xi", "xi_t"],
                    "additionalProperties": False,
                },
                "right": {
                    "type": "object",
                    "properties": {
                        key: _COMPLEX_PAIR for key in ("tau", "tau_t", "mu", "mu_t")
                    },
                    "required": ["tau", "tau_t", "mu", "mu_t"],
                    "additionalProperties": False,
                },
            },
            "additionalProperties": False,
        },
        "suites": {
            "type": "array",
            "items": {"type": "string", "enum": list(SUITE_NAMES)},
        },
        "tolerances": {
            "type": "object",
            "propertyNames": {"enum": list(SUITE_NAMES)},
            "additionalProperties": {"type": "number", "exclusiveMinimum": 0},
        },
        "m0": {"type": "integer"},
        "draws": {"type": "integer", "minimum": 1},
        "output": {"type": "string"},
        "workers": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}
