#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Dense complex linear algebra kernel.

Matrices are plain ``numpy`` arrays of ``complex128``. The heavy lifting is
delegated to LAPACK through :mod:`scipy.linalg`; this module adds the size and
shape contracts, residual certification and the polynomial representation in
the crossing-invariant variable ``U(u) = (q u^2 + q^-1 u^-2) / (q + q^-1)``.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from numpy.polynomial import polynomial as npoly

from xxz_maba.constants import (
    COINCIDENCE_MARGIN,
    EIGEN_ITERATION_FACTOR,
    MAX_DIMENSION,
    MAX_EIGEN_DIMENSION,
)
from xxz_maba.errors import ConditioningError, ConvergenceError, ShapeError, SizeError

logger = logging.getLogger(__name__)

EIGEN_RESIDUAL = 1e-9


def as_matrix(a) -> np.ndarray:
    matrix = np.asarray(a, dtype=complex)
    if matrix.ndim != 2:
        raise ShapeError(f"Expected a two-dimensional matrix, got shape {matrix.shape}")
    return matrix


def _require_square(matrix: np.ndarray, operation: str):
    rows, cols = matrix.shape
    if rows != cols:
        raise ShapeError(f"{operation} requires a square matrix, got {rows}x{cols}")


def kron(a, b) -> np.ndarray:
    """Tensor product of two matrices, bounded by the maximum dimension."""
    a, b = as_matrix(a), as_matrix(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > MAX_DIMENSION:
        raise SizeError(
            f"Tensor product of {a.shape} and {b.shape} exceeds the maximum "
            f"dimension {MAX_DIMENSION}"
        )
    return np.kron(a, b)


def determinant(a) -> complex:
    """Determinant via pivoted LU."""
    matrix = as_matrix(a)
    _require_square(matrix, "determinant")
    return complex(scipy.linalg.det(matrix))


def eigenpairs(a) -> list[tuple[complex, np.ndarray]]:
    """Eigenvalues and unit-norm right eigenvectors of a general complex matrix.

    LAPACK reduces the matrix to Hessenberg form and runs the shifted QR
    iteration. Pairs are sorted by real then imaginary part, and every pair is
    certified against ``|a v - lambda v| <= 1e-9 |a| |v|``.

    Args:
        a: Square matrix of dimension at most 2^8.

    Returns:
        A list of ``(value, vector)`` tuples.

    Raises:
        ShapeError: If the matrix is not square.
        SizeError: If the dimension exceeds 2^8.
        ConvergenceError: If the QR iteration fails or a pair misses the
            residual bound.
    """
    matrix = as_matrix(a)
    _require_square(matrix, "eigenpairs")
    dim = matrix.shape[0]
    if dim > MAX_EIGEN_DIMENSION:
        raise SizeError(
            f"eigenpairs supports dimensions up to {MAX_EIGEN_DIMENSION}, got {dim}"
        )
    iterations = EIGEN_ITERATION_FACTOR * dim
    try:
        values, vectors = scipy.linalg.eig(matrix)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceError(f"QR iteration did not converge: {e}", iterations)

    norm = np.linalg.norm(matrix)
    pairs = []
    for k in np.lexsort((values.imag, values.real)):
        vector = vectors[:, k] / np.linalg.norm(vectors[:, k])
        value = complex(values[k])
        residual = np.linalg.norm(matrix @ vector - value * vector)
        if residual > EIGEN_RESIDUAL * max(norm, 1.0):
            raise ConvergenceError(
                f"Eigenpair residual {residual:.3e} exceeds bound for eigenvalue "
                f"{value:.6g}",
                iterations,
            )
        pairs.append((value, vector))
    return pairs


def relative_residual(lhs: complex, rhs: complex) -> float:
    """Symmetric relative residual ``|l - r| / (|l| + |r| + 1)`` for scalars."""
    return float(abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1.0))


def operator_residual(lhs, rhs, scale: float | None = None) -> float:
    """Frobenius residual of two arrays normalized by the norms of both sides.

    An explicit ``scale`` replaces the default normalization. Identical zero
    arrays give zero.
    """
    difference = np.linalg.norm(np.asarray(lhs) - np.asarray(rhs))
    if scale is None:
        scale = np.linalg.norm(lhs) + np.linalg.norm(rhs)
    if scale == 0.0:
        return 0.0 if difference == 0.0 else float("inf")
    return float(difference / scale)


def crossing_variable(u, q: complex):
    """``U(u)``, invariant under ``u -> -u`` and ``u -> 1/(q u)``."""
    u = np.asarray(u, dtype=complex)
    value = (q * u**2 + 1.0 / (q * u**2)) / (q + 1.0 / q)
    return complex(value) if value.ndim == 0 else value


def lift_from_crossing(value: complex, q: complex) -> complex:
    """Spectral point ``u`` with ``U(u) = value``.

    The two solutions ``x = u^2`` of ``q x^2 - (q + 1/q) U x + 1/q = 0`` are
    crossing images of each other. The larger-modulus one is taken, and the
    principal square root fixes the sign of ``u``.
    """
    roots = np.roots([q, -(q + 1.0 / q) * value, 1.0 / q])
    x = roots[np.argmax(np.abs(roots))]
    return crossing_representative(complex(np.sqrt(x)), q)


def crossing_representative(u: complex, q: complex) -> complex:
    """Canonical point of the orbit ``{u, -u, 1/(q u), -1/(q u)}``.

    The larger-modulus member of the crossing pair is kept, so ``|u| >= 1``
    whenever the orbit has such a point; the sign gives a positive real part,
    or a positive imaginary part on the imaginary axis.
    """
    u = complex(u)
    image = 1.0 / (q * u)
    if abs(image) > abs(u):
        u = complex(image)
    if u.real < 0 or (u.real == 0 and u.imag < 0):
        u = -u
    return u


def crossing_nodes(count: int, q: complex, radius: float = 1.5, phase: float = 0.3):
    """Spectral points whose ``U`` values are scaled roots of unity.

    Vandermonde matrices on such nodes are perfectly conditioned, which keeps
    interpolation in ``U`` accurate up to the degrees used here.
    """
    angles = phase + 2.0 * np.pi * np.arange(count) / count
    targets = radius * np.exp(1j * angles)
    return [lift_from_crossing(value, q) for value in targets]


def _check_distinct(abscissae: np.ndarray):
    for i in range(len(abscissae)):
        for j in range(i + 1, len(abscissae)):
            if abs(abscissae[i] - abscissae[j]) <= COINCIDENCE_MARGIN:
                raise ConditioningError(
                    f"Interpolation nodes {i} and {j} have coincident U values "
                    f"{abscissae[i]:.6g}"
                )


def fit_in_crossing(us, values, degree: int, q: complex):
    """Least-squares fit of (possibly array-valued) samples as a polynomial in U.

    Returns:
        A tuple ``(coeffs, residual)`` where ``coeffs[k]`` multiplies ``U^k``
        and has the trailing shape of a single sample, and ``residual`` is the
        largest relative misfit at the sample points.
    """
    abscissae = np.array([crossing_variable(u, q) for u in us])
    samples = np.asarray(values, dtype=complex)
    if len(abscissae) < degree + 1:
        raise ConditioningError(
            f"Need at least {degree + 1} points for degree {degree}, got "
            f"{len(abscissae)}"
        )
    _check_distinct(abscissae)
    vander = npoly.polyvander(abscissae, degree)
    flat = samples.reshape(len(abscissae), -1)
    coeffs, _, _, _ = scipy.linalg.lstsq(vander, flat)
    misfit = np.abs(vander @ coeffs - flat).max()
    residual = float(misfit / max(np.abs(flat).max(), 1e-300))
    return coeffs.reshape((degree + 1,) + samples.shape[1:]), residual


@dataclass(frozen=True)
class CPolyU:
    """Polynomial in ``U(u)`` with ``coeffs[k]`` multiplying ``U(u)^k``."""

    coeffs: tuple[complex, ...]
    q: complex
    residual: float = field(default=0.0, compare=False)

    @property
    def degree(self) -> int:
        return len(self.trimmed().coeffs) - 1

    def trimmed(self, atol: float = 0.0) -> "CPolyU":
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and abs(coeffs[-1]) <= atol:
            coeffs.pop()
        return CPolyU(tuple(coeffs), self.q, self.residual)

    def at_crossing(self, value):
        return npoly.polyval(value, np.array(self.coeffs))

    def __call__(self, u):
        return complex(self.at_crossing(crossing_variable(u, self.q)))

    def distance(self, other: "CPolyU") -> float:
        """Relative coefficient distance, used for branch deduplication."""
        a, b = np.array(self.coeffs), np.array(other.coeffs)
        size = max(len(a), len(b))
        a = np.pad(a, (0, size - len(a)))
        b = np.pad(b, (0, size - len(b)))
        return float(np.linalg.norm(a - b) / max(np.linalg.norm(a), 1e-300))


def interpolate_in_U(points, degree: int, q: complex) -> CPolyU:
    """Polynomial of the given degree in ``U(u)`` through ``(u, value)`` samples.

    Raises:
        ConditioningError: If two samples share a U value within 1e-12 or
            there are too few samples.
    """
    us = [u for u, _ in points]
    values = [value for _, value in points]
    coeffs, residual = fit_in_crossing(us, values, degree, q)
    if residual > 1e-8:
        logger.debug(f"Interpolation in U has residual {residual:.3e}")
    return CPolyU(tuple(complex(c) for c in coeffs), q, residual)
