#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Exception hierarchy shared by the numerical kernel, the engines and the CLI.

Every error derives from :class:`MabaError` and additionally from
``ValueError`` (bad input or degenerate parameters) or ``RuntimeError``
(a numerical procedure did not succeed).
"""


class MabaError(Exception):
    """Base class of all package errors."""


class SizeError(MabaError, ValueError):
    """Raised when a tensor product would exceed the maximum dimension."""


class ShapeError(MabaError, ValueError):
    """Raised for non-square matrices or mismatched vector sizes."""


class ConvergenceError(MabaError, RuntimeError):
    def __init__(self, message: str, iterations: int):
        super().__init__(f"{message} (iteration cap {iterations})")
        self.iterations = iterations


class ConditioningError(MabaError, ValueError):
    """Raised for coincident interpolation nodes or a near-degenerate spectrum."""


class SingularityError(MabaError, ValueError):
    def __init__(self, factor: str, value: complex | None = None):
        detail = f" (|value| = {abs(value):.3e})" if value is not None else ""
        super().__init__(f"Evaluation too close to a pole of {factor}{detail}")
        self.factor = factor


class ResampleRequestedError(SingularityError):
    """Raised by identity checks when a random point lands near a pole."""


class DegenerateParametrizationError(MabaError, ValueError):
    """Raised when a boundary reparametrization receives a zero input."""


class GenericityError(MabaError, ValueError):
    def __init__(self, violations: list[str]):
        super().__init__(
            "Model instance violates genericity: " + "; ".join(violations)
        )
        self.violations = list(violations)


class GaugeDegeneracyError(MabaError, ValueError):
    """Raised when a gauge constant gamma_m falls below threshold."""


class SamplingError(MabaError, RuntimeError):
    """Raised when rejection sampling exceeds its draw cap."""


class CoincidentRootsError(MabaError, ValueError):
    """Raised when a root set is not pairwise distinct."""


class TQSystemError(MabaError, RuntimeError):
    def __init__(self, message: str, condition: float):
        super().__init__(f"{message} (condition number {condition:.3e})")
        self.condition = condition


class HomotopyError(MabaError, RuntimeError):
    """Raised when a continuation path cannot be tracked to its end."""


class MeasureDegeneracyError(MabaError, ValueError):
    """Raised when an SoV measure is numerically zero."""


class ConfigError(MabaError, ValueError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        location = ""
        if field:
            location += f" [field: {field}]"
        if line is not None:
            location += f" [line: {line}]"
        super().__init__(f"{message}{location}")
        self.field = field
        self.line = line
