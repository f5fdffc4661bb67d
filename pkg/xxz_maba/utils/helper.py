import logging
import os
from typing import Any

import fsspec
import jsonschema
import numpy as np
import yaml

from xxz_maba.constants import (
    DEFAULT_WORKERS,
    RUN_CONFIG_SCHEMA,
    SUITE_NAMES,
    WORKERS_ENV_VAR,
)
from xxz_maba.errors import ConfigError, DegenerateParametrizationError, GenericityError
from xxz_maba.utils.params import (
    ModelInstance,
    constrained_instance,
    make_instance,
    sample_generic,
)
from xxz_maba.utils.records import RunConfig

logger = logging.getLogger(__name__)

EXPLICIT_KEYS = ("q", "inhomogeneities", "left", "right")


def serialize(obj):
    """Convert non-serializable objects to JSON-compatible formats.

    Complex numbers become ``[re, im]`` pairs, numpy scalars and arrays
    become plain Python values, containers are converted recursively.

    Args:
        obj: The object to serialize.
    Returns:
        A JSON-compatible representation of the object.
    Raises:
        TypeError: If the object cannot be serialized.
    """
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, (complex, np.complexfloating)):
        return encode_complex(obj)
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return [serialize(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): serialize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [serialize(x) for x in obj]
    if hasattr(obj, "__dict__"):
        return serialize(obj.__dict__)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def encode_complex(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def decode_complex(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


def read_config(path: str) -> dict[str, Any]:
    """Read and validate a run config from a local path or URL.

    Raises:
        ConfigError: If the file is missing, not valid YAML/JSON, or does
            not match the run-config schema.
    """
    try:
        with fsspec.open(path, "r") as file:
            data = yaml.safe_load(file)
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        where = f" at column {mark.column + 1}" if mark else ""
        raise ConfigError(
            f"Cannot parse {path}: {e.problem}{where}",
            line=mark.line + 1 if mark else None,
        )
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"Run config in {path} must be a mapping at the top level")

    validator = jsonschema.Draft202012Validator(RUN_CONFIG_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        field = "/".join(str(p) for p in first.absolute_path) or "<root>"
        raise ConfigError(first.message, field=field)
    return data


def _decode_boundary(section: dict, keys: tuple[str, ...]) -> dict[str, complex]:
    return {key: decode_complex(section[key]) for key in keys}


def config_from_dict(data: dict[str, Any]) -> RunConfig:
    """Build a :class:`RunConfig` from an already validated mapping."""
    instance = data.get("instance", {})
    given = [key for key in EXPLICIT_KEYS if key in instance]
    explicit = None
    if given:
        missing = [key for key in EXPLICIT_KEYS if key not in instance]
        if missing:
            raise ConfigError(
                f"Explicit instances need all of {', '.join(EXPLICIT_KEYS)}; "
                f"missing {', '.join(missing)}",
                field="instance",
            )
        explicit = {
            "q": decode_complex(instance["q"]),
            "v": tuple(decode_complex(p) for p in instance["inhomogeneities"]),
            **_decode_boundary(instance["left"], ("kappa", "kappa_t", "xi", "xi_t")),
            **_decode_boundary(instance["right"], ("tau", "tau_t", "mu", "mu_t")),
        }

    suites = data.get("suites", list(SUITE_NAMES))
    if not suites:
        raise ConfigError("Suite list is empty", field="suites")

    defaults = RunConfig()
    n = len(explicit["v"]) if explicit else instance.get("n", defaults.n)
    return RunConfig(
        seed=instance.get("seed", defaults.seed),
        n=n,
        constrained=instance.get("constrained", False),
        explicit=explicit,
        suites=tuple(s for s in SUITE_NAMES if s in suites),
        tolerances=dict(data.get("tolerances", {})),
        m0=data.get("m0", defaults.m0),
        draws=data.get("draws", defaults.draws),
        output=data.get("output"),
        workers=data.get("workers"),
    )


def load_config(path: str) -> RunConfig:
    return config_from_dict(read_config(path))


def instance_from_config(config: RunConfig) -> ModelInstance:
    """The model instance a run config describes.

    Raises:
        ConfigError: If explicit parameters are degenerate or not generic.
    """
    if config.explicit is None:
        if config.constrained:
            return constrained_instance(config.seed, config.n, config.m0)
        return sample_generic(config.seed, config.n, config.m0)
    try:
        return make_instance(**config.explicit, m0=config.m0)
    except (GenericityError, DegenerateParametrizationError) as e:
        raise ConfigError(str(e), field="instance")


def resolve_workers(config: RunConfig) -> int:
    """Worker count from the config, then the environment, then the default."""
    if config.workers is not None:
        return config.workers
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw is None:
        return DEFAULT_WORKERS
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigError(f"Expected an integer, got '{raw}'", field=WORKERS_ENV_VAR)
    if workers < 1:
        raise ConfigError(
            f"Expected a positive worker count, got {workers}", field=WORKERS_ENV_VAR
        )
    logger.debug(f"Using {workers} workers from {WORKERS_ENV_VAR}")
    return workers
