#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Highest-weight vector, modified creation strings, Bethe vectors and roots.

Bethe vectors of ``M`` roots are built in the dl frame of string length
``M``; the one extra creation operator that appears in the off-shell action
uses the same frame.
"""

import logging
from dataclasses import dataclass, field, replace
from functools import reduce
from itertools import combinations
from typing import Sequence

import numpy as np
import scipy.linalg
import scipy.optimize
from numpy.polynomial import polynomial as npoly

from xxz_maba.constants import (
    DEDUP_DISTANCE,
    DEFAULT_M0,
    EIGEN_GAP,
    ENUMERATION_MAX_N,
    RESAMPLE_RETRIES,
    ROOT_DISTINCTNESS,
)
from xxz_maba.errors import (
    CoincidentRootsError,
    ConditioningError,
    ConvergenceError,
    SingularityError,
    TQSystemError,
)
from xxz_maba.utils.functions import (
    a_tilde,
    big_g,
    c,
    chi,
    crossed,
    d_tilde,
    e_d,
    e_g,
    eta,
    eta_hat,
    f_tilde,
    f_uv,
    h_uv,
    inhomogeneous_factor,
    k_minus_tilde,
    k_plus_tilde,
    lambda_d,
    lambda_g,
    phi,
    psi,
    random_point,
    vacuum_lambda,
    without,
)
from xxz_maba.utils.gauge import dynamical_op, x_vector
from xxz_maba.utils.lattice import t_at_i, t_at_one, transfer_matrix
from xxz_maba.utils.linalg import (
    CPolyU,
    crossing_nodes,
    crossing_representative,
    crossing_variable,
    determinant,
    eigenpairs,
    interpolate_in_U,
    lift_from_crossing,
    relative_residual,
)
from xxz_maba.utils.params import GaugeFrame, ModelInstance, gauge_dl, gauge_dr

logger = logging.getLogger(__name__)


def _check_distinct(us: Sequence[complex], q: complex):
    values = [crossing_variable(u, q) for u in us]
    for i, j in combinations(range(len(values)), 2):
        if abs(values[i] - values[j]) <= ROOT_DISTINCTNESS:
            raise CoincidentRootsError(
                f"Roots u_{i + 1} and u_{j + 1} coincide up to crossing"
            )


def _residual(lhs: np.ndarray, terms: list[np.ndarray], extra_scale: float = 0.0) -> float:
    difference = lhs - sum(terms, np.zeros_like(lhs))
    scale = max([np.linalg.norm(lhs), extra_scale] + [np.linalg.norm(t) for t in terms])
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(difference) / scale)


# -- states and strings ------------------------------------------------------


def highest_weight_vector(inst: ModelInstance, m0: int = DEFAULT_M0) -> np.ndarray:
    """``|Omega> = (x)_i |X(v_i, m0 + i)>`` in the dr frame."""
    dr = gauge_dr(inst, m0)
    factors = [x_vector(v, m0 + i, dr) for i, v in enumerate(inst.v, start=1)]
    return reduce(np.kron, factors, np.ones(1, dtype=complex))


def creation_string(
    us: Sequence[complex], m: int, frame: GaugeFrame, inst: ModelInstance
) -> np.ndarray:
    """``B(u_1, m + 2(M-1)) ... B(u_M, m)`` in ``frame``; the identity for ``M = 0``."""
    size = len(us)
    result = np.eye(inst.dim, dtype=complex)
    for k, u in enumerate(us):
        result = result @ dynamical_op("B", u, m + 2 * (size - 1 - k), frame, inst)
    return result


def bethe_vector(
    us: Sequence[complex],
    inst: ModelInstance,
    m0: int = DEFAULT_M0,
    frame: GaugeFrame | None = None,
) -> np.ndarray:
    """Off-shell Bethe vector ``B_dl(u, m0, M) |Omega>``, default frame dl(M)."""
    frame = frame or gauge_dl(inst, m0, len(us))
    return creation_string(us, m0, frame, inst) @ highest_weight_vector(inst, m0)


# -- eigenvalue functions ----------------------------------------------------


@dataclass(frozen=True)
class EigenvalueTerms:
    lambda_d: complex
    e_d: tuple[complex, ...]
    lambda_g: complex
    e_g: tuple[complex, ...]

    @property
    def lam(self) -> complex:
        return self.lambda_d + self.lambda_g

    @property
    def e(self) -> tuple[complex, ...]:
        return tuple(d + g for d, g in zip(self.e_d, self.e_g))


def eigenvalue_terms(u: complex, us: Sequence[complex], inst: ModelInstance) -> EigenvalueTerms:
    us = tuple(us)
    return EigenvalueTerms(
        lambda_d=lambda_d(u, us, inst),
        e_d=tuple(e_d(ui, without(us, i), inst) for i, ui in enumerate(us)),
        lambda_g=lambda_g(u, us, inst),
        e_g=tuple(e_g(ui, without(us, i), inst) for i, ui in enumerate(us)),
    )


def full_eigenvalue(u: complex, us: Sequence[complex], inst: ModelInstance) -> complex:
    """``Lambda^N(u, u_bar) = Lambda_d + Lambda_g``."""
    return lambda_d(u, us, inst) + lambda_g(u, us, inst)


def bethe_residuals(us: Sequence[complex], inst: ModelInstance) -> np.ndarray:
    """Normalized Bethe equations ``E^N(u_i, u_bar_i)``.

    Each entry is scaled by the largest of its direct, crossed and
    inhomogeneous parts.

    Raises:
        CoincidentRootsError: If two roots share a ``U`` value.
    """
    us = tuple(us)
    _check_distinct(us, inst.q)
    q = inst.q
    values = []
    for i, ui in enumerate(us):
        rest = without(us, i)
        x = crossed(ui, q)
        weight = phi(x, q) * phi(ui, q)
        direct = weight * k_plus_tilde(ui, inst) * k_minus_tilde(ui, inst)
        direct *= vacuum_lambda(ui, inst)
        direct *= np.prod([f_uv(ui, r, q) for r in rest])
        cross = weight * k_plus_tilde(x, inst) * k_minus_tilde(x, inst) * vacuum_lambda(x, inst)
        cross *= np.prod([h_uv(ui, r, q) for r in rest])
        inhom = e_g(ui, rest, inst)
        scale = max(abs(direct), abs(cross), abs(inhom))
        values.append((direct - cross + inhom) / scale)
    return np.array(values, dtype=complex)


# -- representation checks ---------------------------------------------------


def highest_weight_actions(
    u: complex, inst: ModelInstance, m0: int = DEFAULT_M0
) -> dict[str, float]:
    """Residuals of the A, D and C actions of the dr operators on ``|Omega>``."""
    q, dr = inst.q, gauge_dr(inst, m0)
    omega = highest_weight_vector(inst, m0)
    x = crossed(u, q)
    a_value = u * k_minus_tilde(u, inst) * vacuum_lambda(u, inst)
    d_value = u * phi(x, q) * k_minus_tilde(x, inst) * vacuum_lambda(x, inst)
    c_omega = dynamical_op("C", u, m0, dr, inst) @ omega
    return {
        "A": _residual(dynamical_op("A", u, m0, dr, inst) @ omega, [a_value * omega]),
        "D": _residual(dynamical_op("D", u, m0, dr, inst) @ omega, [d_value * omega]),
        "C": float(
            np.linalg.norm(c_omega)
            / (np.linalg.norm(dynamical_op("C", u, m0, dr, inst)) * np.linalg.norm(omega))
        ),
    }


def nilpotency_residual(
    u: complex, us: Sequence[complex], inst: ModelInstance, m0: int = DEFAULT_M0
) -> float:
    """Norm of ``B_dr(u, m0+2N) B_dr(u_1, ..) ... B_dr(u_N, m0) |Omega>`` over its factor norms."""
    dr = gauge_dr(inst, m0)
    points = (u,) + tuple(us)
    omega = highest_weight_vector(inst, m0)
    vector, scale = omega, np.linalg.norm(omega)
    for k, x in reversed(list(enumerate(points))):
        op = dynamical_op("B", x, m0 + 2 * (len(points) - 1 - k), dr, inst)
        vector = op @ vector
        scale *= np.linalg.norm(op)
    return float(np.linalg.norm(vector) / scale)


def off_diagonal_actions(
    u: complex, inst: ModelInstance, m0: int = DEFAULT_M0, M: int | None = None
) -> dict[str, float]:
    """Residuals of the dl-frame A and D actions on ``|Omega>``."""
    q = inst.q
    dl = gauge_dl(inst, m0, M)
    omega = highest_weight_vector(inst, m0)
    x = crossed(u, q)
    coefficient = eta(inst, m0, dl.M)
    extra = dynamical_op("B", u, m0 - 2, dl, inst) @ omega
    a_value = u * k_minus_tilde(u, inst) * vacuum_lambda(u, inst)
    d_value = u * phi(x, q) * k_minus_tilde(x, inst) * vacuum_lambda(x, inst)
    return {
        "A": _residual(
            dynamical_op("A", u, m0, dl, inst) @ omega, [a_value * omega, coefficient * extra]
        ),
        "D": _residual(
            dynamical_op("D", u, m0, dl, inst) @ omega,
            [d_value * omega, -phi(u, q) * coefficient * extra],
        ),
    }


def modified_diagonal_residual(
    u: complex, inst: ModelInstance, m0: int = DEFAULT_M0, M: int | None = None
) -> float:
    """``t(u)`` against ``a~(u) A_dl + d~(u) D_dl`` at ``m0 + 2M``."""
    dl = gauge_dl(inst, m0, M)
    m = m0 + 2 * dl.M
    diagonal = a_tilde(u, inst) * dynamical_op("A", u, m, dl, inst) + d_tilde(
        u, inst
    ) * dynamical_op("D", u, m, dl, inst)
    return _residual(transfer_matrix(u, inst), [diagonal])


def check_weight_decomposition(
    us: Sequence[complex], inst: ModelInstance, m0: int = DEFAULT_M0
) -> dict[str, int]:
    """Rank deficiencies of the dr-frame subset strings on ``|Omega>``.

    Returns the deficiency of the full stack under ``"total"`` and per
    string length under ``"M=<k>"``; all zero on a complete decomposition.
    """
    dr = gauge_dr(inst, m0)
    omega = highest_weight_vector(inst, m0)
    deficiencies, stacked = {}, []
    for size in range(inst.n + 1):
        block = [
            creation_string(subset, m0, dr, inst) @ omega for subset in combinations(us, size)
        ]
        rank = _rank(np.array(block))
        deficiencies[f"M={size}"] = len(block) - rank
        stacked.extend(block)
    deficiencies["total"] = inst.dim - _rank(np.array(stacked))
    return deficiencies


def _rank(rows: np.ndarray, rtol: float = 1e-10) -> int:
    normalized = rows / np.linalg.norm(rows, axis=1, keepdims=True)
    singular = scipy.linalg.svdvals(normalized)
    return int(np.sum(singular > rtol * singular[0]))


# -- off-shell actions -------------------------------------------------------


def _swap_in(us: tuple, i: int, u: complex) -> tuple:
    return us[:i] + (u,) + us[i + 1 :]


def check_offshell_transfer(
    u: complex, us: Sequence[complex], inst: ModelInstance, m0: int = DEFAULT_M0
) -> float:
    """Residual of the off-shell action of the modified diagonal transfer matrix.

    ``M = len(us)`` roots, frame dl(M); the extra term carries the
    ``M + 1`` string from ``m0 - 2``.
    """
    us = tuple(us)
    size, q = len(us), inst.q
    dl = gauge_dl(inst, m0, size)
    m = m0 + 2 * size
    omega = highest_weight_vector(inst, m0)
    psi_vector = creation_string(us, m0, dl, inst) @ omega
    diagonal = a_tilde(u, inst, m, dl) * dynamical_op("A", u, m, dl, inst) + d_tilde(
        u, inst, m, dl
    ) * dynamical_op("D", u, m, dl, inst)
    terms = eigenvalue_terms(u, us, inst)
    rhs = [terms.lambda_d * psi_vector]
    for i, ui in enumerate(us):
        swapped = creation_string(_swap_in(us, i, u), m0, dl, inst) @ omega
        rhs.append(f_tilde(u, ui, q) * terms.e_d[i] * swapped)
    string = creation_string((u,) + us, m0 - 2, dl, inst) @ omega
    rhs.append(eta_hat(inst, m0, size) * c(q * u) / u * string)
    return _residual(diagonal @ psi_vector, rhs)


def _require_full(us: Sequence[complex], inst: ModelInstance):
    if len(us) != inst.n:
        raise ValueError(f"Expected {inst.n} roots for a chain of length {inst.n}, got {len(us)}")


def check_proposition1(
    u: complex, us: Sequence[complex], inst: ModelInstance, m0: int = DEFAULT_M0
) -> float:
    """Residual of the off-shell decomposition of the ``N + 1`` creation string.

    The scale includes ``|t(u) Psi|`` so that constrained boundaries, where
    both sides vanish, give a zero residual.
    """
    _require_full(us, inst)
    us = tuple(us)
    q = inst.q
    dl = gauge_dl(inst, m0, inst.n)
    omega = highest_weight_vector(inst, m0)
    psi_vector = creation_string(us, m0, dl, inst) @ omega
    lhs = eta_hat(inst, m0) * c(q * u) / u * (creation_string((u,) + us, m0 - 2, dl, inst) @ omega)
    terms = eigenvalue_terms(u, us, inst)
    rhs = [terms.lambda_g * psi_vector]
    for i, ui in enumerate(us):
        swapped = creation_string(_swap_in(us, i, u), m0, dl, inst) @ omega
        rhs.append(f_tilde(u, ui, q) * terms.e_g[i] * swapped)
    scale = np.linalg.norm(transfer_matrix(u, inst) @ psi_vector)
    return _residual(lhs, rhs, extra_scale=scale)


def check_full_offshell(
    u: complex, us: Sequence[complex], inst: ModelInstance, m0: int = DEFAULT_M0
) -> float:
    """Residual of the off-shell action of ``t(u)`` on ``Psi(u_bar)`` with ``N`` roots."""
    _require_full(us, inst)
    us = tuple(us)
    q = inst.q
    dl = gauge_dl(inst, m0, inst.n)
    omega = highest_weight_vector(inst, m0)
    psi_vector = creation_string(us, m0, dl, inst) @ omega
    terms = eigenvalue_terms(u, us, inst)
    rhs = [terms.lam * psi_vector]
    for i, ui in enumerate(us):
        swapped = creation_string(_swap_in(us, i, u), m0, dl, inst) @ omega
        rhs.append(f_tilde(u, ui, q) * terms.e[i] * swapped)
    return _residual(transfer_matrix(u, inst) @ psi_vector, rhs)


# -- spectrum ----------------------------------------------------------------


@dataclass(frozen=True)
class SpectralFunction:
    """One eigenvalue branch ``Lambda(u)`` as a polynomial in ``U(u)``."""

    lam: CPolyU
    roots: tuple[complex, ...] | None = None
    q_poly: CPolyU | None = None
    state: np.ndarray | None = field(default=None, compare=False, repr=False)
    refined: bool = False
    bethe_residual: float | None = None
    condition: float | None = None

    def __call__(self, u: complex) -> complex:
        return self.lam(u)


def _spectral_gap(values: list[complex]) -> float:
    scale = max(max(abs(v) for v in values), 1.0)
    gaps = [abs(a - b) for a, b in combinations(values, 2)]
    return min(gaps) / scale if gaps else np.inf


def eigen_branches(
    inst: ModelInstance, rng: np.random.Generator | None = None
) -> list[SpectralFunction]:
    """Eigenvalue branches of ``t(u)`` from one diagonalization at a generic point.

    Each eigenvector of ``t(u0)`` is shared by the whole commuting family;
    its Rayleigh quotients at ``N + 3`` nodes fix ``Lambda`` as a
    polynomial of degree ``N + 2`` in ``U``.

    Raises:
        ConditioningError: If no point with a simple spectrum is found.
    """
    rng = rng or np.random.default_rng(0)
    q, n = inst.q, inst.n
    for attempt in range(RESAMPLE_RETRIES + 1):
        u0 = random_point(rng)
        pairs = eigenpairs(transfer_matrix(u0, inst))
        gap = _spectral_gap([value for value, _ in pairs])
        if gap >= EIGEN_GAP:
            break
        logger.debug(f"Resampling u0 after attempt {attempt + 1}: relative gap {gap:.3e}")
    else:
        raise ConditioningError(f"Spectrum of t(u0) stays near-degenerate (gap {gap:.3e})")

    nodes = crossing_nodes(n + 3, q)
    operators = [transfer_matrix(u, inst) for u in nodes]
    branches = []
    for _, vector in pairs:
        norm = np.vdot(vector, vector)
        samples = [(u, np.vdot(vector, t @ vector) / norm) for u, t in zip(nodes, operators)]
        branches.append(SpectralFunction(lam=interpolate_in_U(samples, n + 2, q), state=vector))
    return branches


def q_polynomial_normalization(q: complex, n: int) -> complex:
    return ((q + 1 / q) / (q - 1 / q) ** 2) ** n


def q_polynomial(us: Sequence[complex], q: complex) -> CPolyU:
    """``Q(u) = 1 / G(u, u_bar)`` expanded in ``U``."""
    roots = [crossing_variable(u, q) for u in us]
    if not roots:
        return CPolyU((1.0 + 0.0j,), q)
    coeffs = npoly.polyfromroots(roots) * q_polynomial_normalization(q, len(us))
    return CPolyU(tuple(complex(x) for x in coeffs), q)


def _q_value(coeffs: np.ndarray, u: complex, q: complex) -> complex:
    return npoly.polyval(crossing_variable(u, q), coeffs)


def solve_tq(lam: CPolyU, inst: ModelInstance, rng: np.random.Generator) -> tuple[CPolyU, float]:
    """Q-polynomial of a branch from the inhomogeneous T-Q relation.

    The leading coefficient is fixed, the remaining ``N`` coefficients solve
    a least-squares system sampled at ``2N + 4`` points.

    Raises:
        TQSystemError: If the system is rank deficient.
    """
    q, n = inst.q, inst.n
    lead = q_polynomial_normalization(q, n)
    const = chi(inst)
    rows, rhs = [], []
    while len(rows) < 2 * n + 4:
        u = random_point(rng)
        try:
            x = crossed(u, q)
            basis = np.array(
                [
                    lam(u) * crossing_variable(u, q) ** k
                    - psi(u, inst) * crossing_variable(u / q, q) ** k
                    - psi(x, inst) * crossing_variable(q * u, q) ** k
                    for k in range(n + 1)
                ]
            )
            inhom = const * inhomogeneous_factor(u, inst)
        except SingularityError:
            continue
        scale = max(np.abs(basis).max(), abs(inhom))
        rows.append(basis[:n] / scale)
        rhs.append((inhom - lead * basis[n]) / scale)
    matrix = np.array(rows)
    coeffs, _, rank, singular = scipy.linalg.lstsq(matrix, np.array(rhs))
    condition = float(singular[0] / singular[-1]) if singular[-1] > 0 else np.inf
    if rank < n or condition > 1e12:
        raise TQSystemError(f"T-Q system for N={n} is rank deficient (rank {rank})", condition)
    full = tuple(complex(x) for x in coeffs) + (complex(lead),)
    return CPolyU(full, q), condition


def _as_real(us: np.ndarray) -> np.ndarray:
    return np.concatenate([us.real, us.imag])


def _as_complex(x: np.ndarray) -> np.ndarray:
    half = len(x) // 2
    return x[:half] + 1j * x[half:]


def refine_roots(
    us: Sequence[complex], inst: ModelInstance
) -> tuple[tuple[complex, ...], bool, float]:
    """Newton refinement of a root set against the Bethe equations.

    Returns the root set, a refined flag and the final max residual. A
    failed or non-improving refinement keeps the starting roots; refined
    roots are mapped to their crossing representatives.
    """
    start = np.array(us, dtype=complex)
    initial = float(np.abs(bethe_residuals(start, inst)).max())

    def equations(x):
        return _as_real(bethe_residuals(_as_complex(x), inst))

    try:
        solution = scipy.optimize.root(
            equations, _as_real(start), method="hybr", options={"xtol": 1e-12}
        )
        refined = np.array([crossing_representative(u, inst.q) for u in _as_complex(solution.x)])
        final = float(np.abs(bethe_residuals(refined, inst)).max())
    except (SingularityError, CoincidentRootsError, ValueError) as e:
        logger.warning(f"Newton refinement aborted: {e}")
        return tuple(start), False, initial
    if not np.isfinite(final) or final > initial:
        logger.warning(f"Newton refinement did not improve roots ({initial:.3e} -> {final:.3e})")
        return tuple(start), False, initial
    return tuple(complex(u) for u in refined), bool(solution.success), final


def _solve_branch(branch: SpectralFunction, inst: ModelInstance, rng) -> SpectralFunction:
    q_poly, condition = solve_tq(branch.lam, inst, rng)
    roots = npoly.polyroots(np.array(q_poly.coeffs))
    us = tuple(lift_from_crossing(root, inst.q) for root in roots)
    us, refined, residual = refine_roots(us, inst)
    if not refined:
        logger.warning(f"Root set left unrefined, Bethe residual {residual:.3e}")
    return replace(
        branch,
        roots=us,
        q_poly=q_polynomial(us, inst.q),
        refined=refined,
        bethe_residual=residual,
        condition=condition,
    )


def deduplicate(branches: list[SpectralFunction]) -> list[SpectralFunction]:
    unique = []
    for branch in branches:
        if any(branch.lam.distance(other.lam) < DEDUP_DISTANCE for other in unique):
            logger.info("Merged a duplicate eigenvalue branch")
            continue
        unique.append(branch)
    return unique


def solve_bethe(
    inst: ModelInstance,
    m0: int = DEFAULT_M0,
    rng: np.random.Generator | None = None,
    strategy: str = "enumeration",
) -> list[SpectralFunction]:
    """All eigenvalue branches with their Bethe roots and Q-polynomials.

    The ``"enumeration"`` strategy diagonalizes ``t(u0)`` once and solves
    the T-Q relation for every eigenvalue branch; it supports ``N <= 4``.

    Raises:
        ValueError: If the strategy is unknown or the chain too long for it.
    """
    if strategy != "enumeration":
        raise ValueError(f"Unknown Bethe strategy '{strategy}', expected 'enumeration'")
    if inst.n > ENUMERATION_MAX_N:
        raise ValueError(
            f"Full enumeration supports N <= {ENUMERATION_MAX_N}, got N={inst.n}"
        )
    rng = rng or np.random.default_rng(0)
    branches = deduplicate(eigen_branches(inst, rng))
    solved = [_solve_branch(branch, inst, rng) for branch in branches]
    logger.info(
        f"Solved {len(solved)} branches for N={inst.n}, "
        f"{sum(b.refined for b in solved)} refined"
    )
    return solved


def tq_residual(
    branch: SpectralFunction,
    inst: ModelInstance,
    rng: np.random.Generator | None = None,
    points: int = 20,
) -> float:
    """Largest scaled T-Q misfit of a branch with roots over random points."""
    if branch.roots is None:
        raise ValueError("T-Q residual needs a branch with Bethe roots")
    rng = rng or np.random.default_rng(0)
    q, const = inst.q, chi(inst)

    def q_of(x):
        return np.prod([1.0 / big_g(x, r, q) for r in branch.roots])

    worst, evaluated = 0.0, 0
    while evaluated < points:
        u = random_point(rng)
        try:
            x = crossed(u, q)
            terms = [
                branch(u) * q_of(u),
                -psi(u, inst) * q_of(u / q),
                -psi(x, inst) * q_of(q * u),
                -const * inhomogeneous_factor(u, inst),
            ]
        except SingularityError:
            continue
        scale = max(abs(t) for t in terms)
        worst = max(worst, abs(sum(terms)) / scale)
        evaluated += 1
    return float(worst)


def closed_value_residual(branch: SpectralFunction, inst: ModelInstance) -> float:
    """Misfit of ``Lambda(1)`` and ``Lambda(i)`` against the closed forms."""
    return max(
        relative_residual(branch(1.0), t_at_one(inst)),
        relative_residual(branch(1j), t_at_i(inst)),
    )


def spectral_membership(branch: SpectralFunction, u: complex, inst: ModelInstance) -> float:
    """``|det(t(u) - Lambda(u))|`` over the product of the other eigenvalue gaps."""
    t = transfer_matrix(u, inst)
    value = branch(u)
    try:
        values = [v for v, _ in eigenpairs(t)]
    except ConvergenceError:
        values = list(scipy.linalg.eigvals(t))
    gaps = sorted(abs(v - value) for v in values)
    others = np.prod(gaps[1:]) if len(gaps) > 1 else 1.0
    return float(abs(determinant(t - value * np.eye(inst.dim))) / (others * max(abs(value), 1.0)))
