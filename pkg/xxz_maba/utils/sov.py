#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Left and right SoV bases, projections, measures and the SoV spectrum.

All SoV objects live in the dl frame of string length ``N``. The SoV
eigenstate at label ``m`` is a sum over right states at ``m + 2``, so the
natural label for comparing with Bethe vectors is ``m0 + 2(N - 1)``.
"""

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Literal, Sequence

import numpy as np
import scipy.linalg
import scipy.optimize
from numpy.polynomial import polynomial as npoly

from xxz_maba.constants import DEDUP_DISTANCE, DEFAULT_M0, HOMOTOPY_STEPS
from xxz_maba.errors import HomotopyError, MeasureDegeneracyError
from xxz_maba.utils.bethe import (
    SpectralFunction,
    bethe_vector,
    creation_string,
    eigen_branches,
    highest_weight_vector,
)
from xxz_maba.utils.functions import (
    bit_strings,
    chi,
    eta_hat,
    eta_left,
    eta_right,
    f_uv,
    k_minus_tilde,
    k_plus_tilde,
    lambda_b,
    lambda_b_tilde,
    measure_closed_form,
    phi,
    random_point,
    sov_weight,
    vacuum_lambda,
)
from xxz_maba.utils.gauge import d_hat, dynamical_op, y_covector, y_vector
from xxz_maba.utils.lattice import sklyanin_rhs, t_at_i, t_at_one, top_coefficient, transfer_matrix
from xxz_maba.utils.linalg import CPolyU, crossing_variable, relative_residual
from xxz_maba.utils.params import GaugeFrame, ModelInstance, gauge_dl, gauge_dr

logger = logging.getLogger(__name__)

BitString = tuple[int, ...]


def _scalar_residual(lhs: complex, rhs: complex) -> float:
    scale = max(abs(lhs), abs(rhs))
    return 0.0 if scale == 0.0 else float(abs(lhs - rhs) / scale)


def _vector_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs))
    return 0.0 if scale == 0.0 else float(np.linalg.norm(lhs - rhs) / scale)


def _frame(inst: ModelInstance, m0: int) -> GaugeFrame:
    return gauge_dl(inst, m0, inst.n)


def _f_product(x: complex, points: Sequence[complex], h: BitString, q: complex) -> complex:
    """``prod_i f(points_i, x)^h_i``."""
    return np.prod([f_uv(p, x, q) ** hi for p, hi in zip(points, h)])


# -- bases -------------------------------------------------------------------


@dataclass(frozen=True)
class SovLeftVector:
    covector: np.ndarray = field(repr=False)
    h: BitString
    m: int


@dataclass(frozen=True)
class SovRightVector:
    vector: np.ndarray = field(repr=False)
    h: BitString
    m: int


def left_vacuum(m: int, inst: ModelInstance, frame: GaugeFrame) -> np.ndarray:
    factors = [y_covector(v, m + n, frame) for n, v in enumerate(inst.v, start=1)]
    return reduce(np.kron, factors, np.ones(1, dtype=complex))


def right_vacuum(m: int, inst: ModelInstance, frame: GaugeFrame) -> np.ndarray:
    factors = [y_vector(v, m - n, frame) for n, v in enumerate(inst.v, start=1)]
    return reduce(np.kron, factors, np.ones(1, dtype=complex))


def left_sov_vector(
    h: Sequence[int], m: int, inst: ModelInstance, m0: int = DEFAULT_M0
) -> SovLeftVector:
    """``<Omega_m| A(1/v_1, m+2)^h_1 ... A(1/v_N, m+2)^h_N``."""
    frame = _frame(inst, m0)
    row = left_vacuum(m, inst, frame)
    for v, hi in zip(inst.v, h):
        if hi:
            row = row @ dynamical_op("A", 1 / v, m + 2, frame, inst)
    return SovLeftVector(row, tuple(h), m)


def right_sov_state(
    h: Sequence[int], m: int, inst: ModelInstance, m0: int = DEFAULT_M0
) -> SovRightVector:
    """``D^(v_1, m)^(1-h_1) ... D^(v_N, m)^(1-h_N) |Omega_m>``."""
    frame = _frame(inst, m0)
    vector = right_vacuum(m, inst, frame)
    for v, hi in reversed(list(zip(inst.v, h))):
        if not hi:
            vector = d_hat(v, m, frame, inst) @ vector
    return SovRightVector(vector, tuple(h), m)


def left_basis(m: int, inst: ModelInstance, m0: int = DEFAULT_M0) -> np.ndarray:
    """The ``2^N`` left SoV vectors as rows, in lexicographic bit-string order."""
    return np.array([left_sov_vector(h, m, inst, m0).covector for h in bit_strings(inst.n)])


def left_basis_conditioning(m: int, inst: ModelInstance, m0: int = DEFAULT_M0) -> float:
    """Smallest over largest singular value of the normalized left basis."""
    rows = left_basis(m, inst, m0)
    rows = rows / np.linalg.norm(rows, axis=1, keepdims=True)
    singular = scipy.linalg.svdvals(rows)
    return float(singular[-1] / singular[0])


# -- pseudo-eigen relations --------------------------------------------------


def left_pseudo_eigen_residual(
    h: Sequence[int], u: complex, m: int, inst: ModelInstance, m0: int = DEFAULT_M0
) -> float:
    frame = _frame(inst, m0)
    h = tuple(h)
    lhs = left_sov_vector(h, m, inst, m0).covector @ dynamical_op("B", u, m, frame, inst)
    value = (
        eta_left(m, inst, frame)
        * lambda_b(u, inst)
        * _f_product(u, [1 / v for v in inst.v], h, inst.q)
    )
    return _vector_residual(lhs, value * left_sov_vector(h, m - 2, inst, m0).covector)


def right_pseudo_eigen_residual(
    h: Sequence[int], u: complex, m: int, inst: ModelInstance, m0: int = DEFAULT_M0
) -> float:
    frame = _frame(inst, m0)
    h = tuple(h)
    lhs = dynamical_op("B", u, m, frame, inst) @ right_sov_state(h, m, inst, m0).vector
    flipped = tuple(1 - hi for hi in h)
    value = (
        eta_right(m, inst, frame)
        * lambda_b_tilde(u, inst)
        * _f_product(u, inst.v, flipped, inst.q)
    )
    return _vector_residual(lhs, value * right_sov_state(h, m + 2, inst, m0).vector)


# -- overlaps and projections ------------------------------------------------


@dataclass(frozen=True)
class VacuumOverlap:
    formula: complex
    direct: complex

    @property
    def residual(self) -> float:
        return _scalar_residual(self.formula, self.direct)


def vacuum_overlap(m: int, m0: int, inst: ModelInstance) -> VacuumOverlap:
    """``<Omega_m|_dl |Omega_m0>_dr`` from the product formula and directly.

    Raises:
        GaugeDegeneracyError: If a ``gamma`` in the product vanishes.
    """
    q, dr, dl = inst.q, gauge_dr(inst, m0), _frame(inst, m0)
    formula = 1.0 + 0.0j
    for n in range(1, inst.n + 1):
        formula *= q * (dr.alpha * q ** (-m0 - n) - dl.beta * q ** (m + n)) / dl.gamma(m + n + 1)
    direct = complex(left_vacuum(m, inst, dl) @ highest_weight_vector(inst, m0))
    return VacuumOverlap(complex(formula), direct)


def scalar_product_residuals(
    h: Sequence[int], m: int, inst: ModelInstance, m0: int = DEFAULT_M0
) -> dict[str, float]:
    """Residuals of the overlap of a left SoV vector with ``|Omega>``.

    ``"init"`` compares against ``W(h) <Omega_m|Omega>``; ``"recursion"``
    peels off the last site at the same label ``m``.
    """
    h = tuple(h)
    omega = highest_weight_vector(inst, m0)
    value = left_sov_vector(h, m, inst, m0).covector @ omega
    init = sov_weight(h, inst) * vacuum_overlap(m, m0, inst).direct
    x = 1 / inst.v[-1]
    peeled = left_sov_vector(h[:-1] + (0,), m, inst, m0).covector @ omega
    factor = (x * k_minus_tilde(x, inst) * vacuum_lambda(x, inst)) ** h[-1]
    return {
        "init": _scalar_residual(value, init),
        "recursion": _scalar_residual(value, factor * peeled),
    }


def _string_projection(
    points: Sequence[complex], h: BitString, inst: ModelInstance, m0: int, start: int
) -> tuple[complex, complex]:
    """Left SoV vector at ``m0 + 2(N-1)`` against a creation string on ``|Omega>``."""
    n, q = inst.n, inst.q
    frame = _frame(inst, m0)
    m = m0 + 2 * (n - 1)
    omega = highest_weight_vector(inst, m0)
    lhs = left_sov_vector(h, m, inst, m0).covector @ (
        creation_string(points, start, frame, inst) @ omega
    )
    inverse = [1 / v for v in inst.v]
    rhs = sov_weight(h, inst) * vacuum_overlap(m - 2 * len(points), m0, inst).direct
    for i in range(1, len(points) + 1):
        rhs *= eta_left(m0 + 2 * (n - i), inst, frame)
    for x in points:
        rhs *= lambda_b(x, inst) * _f_product(x, inverse, h, q)
    return complex(lhs), complex(rhs)


def projection_check(
    u: complex,
    us: Sequence[complex],
    h: Sequence[int],
    inst: ModelInstance,
    m0: int = DEFAULT_M0,
) -> tuple[float, float]:
    """Residuals of the projected ``N + 1`` string and of the ``N`` strings.

    The second entry is the worst over the plain root set and every set
    with one root replaced by ``u``.
    """
    us, h = tuple(us), tuple(h)
    if len(us) != inst.n:
        raise ValueError(f"Expected {inst.n} roots, got {len(us)}")
    long_string = _scalar_residual(*_string_projection((u,) + us, h, inst, m0, m0 - 2))
    sets = [us] + [us[:j] + (u,) + us[j + 1 :] for j in range(len(us))]
    short_string = max(_scalar_residual(*_string_projection(s, h, inst, m0, m0)) for s in sets)
    return long_string, short_string


def chi_identity_residual(inst: ModelInstance, m0: int = DEFAULT_M0) -> float:
    """``eta^_m0 eta_{m0-2} <Omega_{m0-4}|Omega> / <Omega_{m0-2}|Omega>`` against ``-chi``."""
    frame = _frame(inst, m0)
    ratio = vacuum_overlap(m0 - 4, m0, inst).direct / vacuum_overlap(m0 - 2, m0, inst).direct
    lhs = eta_hat(inst, m0) * eta_left(m0 - 2, inst, frame) * ratio
    return relative_residual(lhs, -chi(inst))


# -- measure -----------------------------------------------------------------


@dataclass(frozen=True)
class GramReport:
    diagonal: np.ndarray = field(repr=False)
    off_diagonal: float
    measure_mismatch: float


def gram_matrix(m: int, inst: ModelInstance, m0: int = DEFAULT_M0) -> np.ndarray:
    """``<Psi~_m(h)|Psi~_{m+2}(k)>`` over all bit strings."""
    strings = bit_strings(inst.n)
    right = np.array([right_sov_state(k, m + 2, inst, m0).vector for k in strings]).T
    return left_basis(m, inst, m0) @ right


def biorthogonality(m: int, inst: ModelInstance, m0: int = DEFAULT_M0) -> GramReport:
    """Off-diagonal size of the Gram matrix and the closed-form measure misfit.

    The Gram diagonal is the reference value of the measure; a closed-form
    misfit above 1e-8 is logged as a warning.
    """
    gram = gram_matrix(m, inst, m0)
    diagonal = np.diag(gram).copy()
    off = gram - np.diag(diagonal)
    off_diagonal = float(np.abs(off).max() / np.abs(diagonal).max()) if inst.n else 0.0
    frame = _frame(inst, m0)
    mismatch = max(
        _scalar_residual(measure_closed_form(h, m, inst, frame), mu)
        for h, mu in zip(bit_strings(inst.n), diagonal)
    )
    if mismatch > 1e-8:
        logger.warning(
            f"Closed-form SoV measure differs from the Gram diagonal by {mismatch:.3e} "
            f"(N={inst.n}, m={m})"
        )
    return GramReport(diagonal, off_diagonal, mismatch)


# -- spectrum ----------------------------------------------------------------


@dataclass(frozen=True)
class SovInterpolation:
    """``Lambda(u) = sum_j Lambda(v_j) g_j(u) + f(u)`` in ``U`` coefficients."""

    q: complex
    basis: tuple[np.ndarray, ...]
    inhomogeneous: np.ndarray

    def coefficients(self, values: Sequence[complex]) -> np.ndarray:
        return self.inhomogeneous + sum(
            (x * g for x, g in zip(values, self.basis)), np.zeros_like(self.inhomogeneous)
        )

    def branch(self, values: Sequence[complex]) -> CPolyU:
        return CPolyU(tuple(complex(c) for c in self.coefficients(values)), self.q)


def _pad(coeffs: np.ndarray, size: int) -> np.ndarray:
    return np.pad(np.asarray(coeffs, dtype=complex), (0, size - len(coeffs)))


def sov_interpolation(inst: ModelInstance) -> SovInterpolation:
    """Interpolation basis through ``U(v_j)``, ``U = 1`` and ``U = -1``.

    The inhomogeneous part carries ``t(1)``, ``t(i)`` and the top coefficient.
    """
    q, n = inst.q, inst.n
    nodes = np.array([crossing_variable(v, q) for v in inst.v])
    size = n + 3
    edge = np.array([-1.0, 0.0, 1.0])
    basis = []
    for j in range(n):
        others = np.delete(nodes, j)
        numerator = npoly.polymul(edge, npoly.polyfromroots(others))
        denominator = (nodes[j] ** 2 - 1) * np.prod(nodes[j] - others)
        basis.append(_pad(numerator / denominator, size))
    full = npoly.polyfromroots(nodes)
    at_one = npoly.polymul([0.5, 0.5], full / np.prod(1 - nodes))
    at_i = npoly.polymul([0.5, -0.5], (-1) ** n * full / np.prod(1 + nodes))
    top = npoly.polymul(edge, full)
    inhomogeneous = (
        t_at_one(inst) * _pad(at_one, size)
        + t_at_i(inst) * _pad(at_i, size)
        + top_coefficient(inst) * _pad(top, size)
    )
    return SovInterpolation(q, tuple(basis), inhomogeneous)


@dataclass(frozen=True)
class QuadraticSystem:
    """``x_i (sum_j G_ij x_j + f_i) = R_i`` with the off-diagonal couplings scaled by ``s``."""

    coupling: np.ndarray
    linear: np.ndarray
    rhs: np.ndarray

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.coupling)

    @property
    def off_diagonal(self) -> np.ndarray:
        return self.coupling - np.diag(self.diagonal)

    def residual(self, x: np.ndarray, s: complex = 1.0) -> np.ndarray:
        return x * (self.diagonal * x + s * (self.off_diagonal @ x) + self.linear) - self.rhs

    def jacobian(self, x: np.ndarray, s: complex = 1.0) -> np.ndarray:
        inner = 2 * self.diagonal * x + s * (self.off_diagonal @ x) + self.linear
        return np.diag(inner) + s * x[:, None] * self.off_diagonal

    def s_derivative(self, x: np.ndarray) -> np.ndarray:
        return x * (self.off_diagonal @ x)

    def start_solutions(self) -> list[np.ndarray]:
        """All ``2^N`` solutions of the decoupled system at ``s = 0``."""
        per_site = [
            np.roots([g, f, -r]) for g, f, r in zip(self.diagonal, self.linear, self.rhs)
        ]
        if any(len(roots) != 2 for roots in per_site):
            raise HomotopyError("Decoupled start system has a vanishing quadratic term")
        return [
            np.array([per_site[i][bit] for i, bit in enumerate(bits)])
            for bits in bit_strings(len(per_site))
        ]


def quadratic_system(inst: ModelInstance, interpolation: SovInterpolation | None = None):
    """The quadratic constraints ``Lambda(v_i / q) Lambda(v_i) = rhs(v_i)``."""
    interpolation = interpolation or sov_interpolation(inst)
    q = inst.q
    abscissae = [crossing_variable(v / q, q) for v in inst.v]
    coupling = np.array([[npoly.polyval(x, g) for g in interpolation.basis] for x in abscissae])
    linear = np.array([npoly.polyval(x, interpolation.inhomogeneous) for x in abscissae])
    rhs = np.array([sklyanin_rhs(v, inst) for v in inst.v])
    return QuadraticSystem(coupling, linear, rhs)


@dataclass(frozen=True)
class HomotopyOptions:
    steps: int = HOMOTOPY_STEPS
    max_halvings: int = 12
    newton_iterations: int = 8
    tolerance: float = 1e-12
    theta: float = 0.7


def _path(t: float, theta: float) -> complex:
    return t + 1j * theta * t * (1 - t)


def _newton(system: QuadraticSystem, x: np.ndarray, s: complex, iterations: int, tolerance: float):
    for _ in range(iterations):
        try:
            delta = np.linalg.solve(system.jacobian(x, s), -system.residual(x, s))
        except np.linalg.LinAlgError:
            return None
        x = x + delta
        if np.linalg.norm(delta) <= tolerance * (1 + np.linalg.norm(x)):
            return x
    return None


def track_path(system: QuadraticSystem, start: np.ndarray, options: HomotopyOptions) -> np.ndarray:
    """Follow one start solution from ``s = 0`` to ``s = 1``.

    Euler predictor along the complex path ``s(t) = t + i theta t (1 - t)``
    and Newton corrector; the step halves on corrector failure.

    Raises:
        HomotopyError: If the step has to be halved too often.
    """
    nominal = 1.0 / options.steps
    x, t, step, halvings = np.array(start, dtype=complex), 0.0, nominal, 0
    while t < 1.0:
        h = min(step, 1.0 - t)
        s0, s1 = _path(t, options.theta), _path(t + h, options.theta)
        try:
            tangent = np.linalg.solve(system.jacobian(x, s0), -system.s_derivative(x))
        except np.linalg.LinAlgError:
            tangent = np.zeros_like(x)
        corrected = _newton(
            system, x + tangent * (s1 - s0), s1, options.newton_iterations, options.tolerance
        )
        if corrected is None:
            halvings += 1
            if halvings > options.max_halvings:
                raise HomotopyError(f"Path stalled at t={t:.4f} after {halvings} step halvings")
            step /= 2
            logger.debug(f"Halving homotopy step to {step:.3e} at t={t:.4f}")
            continue
        x, t = corrected, t + h
        step = min(2 * step, nominal)
    final = _newton(system, x, 1.0, 20, options.tolerance)
    if final is None:
        raise HomotopyError("Endpoint did not converge under Newton polishing")
    return final


def solve_from_seeds(system: QuadraticSystem, seeds: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Newton refinement of the quadratic system from the given starting values."""
    size = len(system.rhs)

    def equations(y):
        r = system.residual(y[:size] + 1j * y[size:])
        return np.concatenate([r.real, r.imag])

    solutions = []
    for seed in seeds:
        seed = np.asarray(seed, dtype=complex)
        result = scipy.optimize.root(
            equations,
            np.concatenate([seed.real, seed.imag]),
            method="hybr",
            options={"xtol": 1e-12},
        )
        if result.success:
            solutions.append(result.x[:size] + 1j * result.x[size:])
        else:
            logger.warning(f"Seeded SoV solve failed: {result.message}")
    return solutions


@dataclass(frozen=True)
class SovSpectrum:
    branches: list[SpectralFunction]
    failures: list[str]
    strategy: str


Strategy = Literal["homotopy", "seeded"]


def sov_spectrum(
    inst: ModelInstance,
    rng: np.random.Generator | None = None,
    strategy: Strategy = "homotopy",
    seeds: Sequence[np.ndarray] | None = None,
    options: HomotopyOptions | None = None,
) -> SovSpectrum:
    """All eigenvalue branches from the SoV quadratic system.

    ``N = 1`` is solved as a single quadratic. Otherwise ``"homotopy"``
    tracks every start solution of the decoupled system and reports failed
    paths without raising; ``"seeded"`` refines the values ``Lambda(v_j)``
    of the eigen-oracle branches, or the given ``seeds``.
    """
    rng = rng or np.random.default_rng(0)
    options = options or HomotopyOptions()
    interpolation = sov_interpolation(inst)
    system = quadratic_system(inst, interpolation)
    failures = []
    if inst.n == 1:
        strategy_used = "quadratic"
        roots = np.roots([system.coupling[0, 0], system.linear[0], -system.rhs[0]])
        solutions = [np.array([root]) for root in roots]
    elif strategy == "seeded":
        strategy_used = strategy
        if seeds is None:
            seeds = [np.array([branch(v) for v in inst.v]) for branch in eigen_branches(inst, rng)]
        solutions = solve_from_seeds(system, seeds)
    elif strategy == "homotopy":
        strategy_used = strategy
        solutions = []
        for index, start in enumerate(system.start_solutions()):
            try:
                solutions.append(track_path(system, start, options))
            except HomotopyError as e:
                logger.warning(f"Homotopy path {index} failed: {e}")
                failures.append(f"path {index}: {e}")
        logger.info(
            f"Tracked {len(solutions)} of {2 ** inst.n} homotopy paths for N={inst.n}"
        )
    else:
        raise ValueError(f"Unknown SoV strategy '{strategy}', expected 'homotopy' or 'seeded'")

    branches = []
    for values in solutions:
        lam = interpolation.branch(values)
        if any(lam.distance(other.lam) < DEDUP_DISTANCE for other in branches):
            logger.info("Merged a duplicate SoV branch")
            continue
        branches.append(SpectralFunction(lam=lam))
    return SovSpectrum(branches, failures, strategy_used)


def spectrum_agreement(
    first: Sequence[SpectralFunction], second: Sequence[SpectralFunction], u: complex
) -> float:
    """Worst matched relative difference of two branch multisets at ``u``."""
    if len(first) != len(second):
        return float("inf")
    a = np.array([b(u) for b in first])
    c = np.array([b(u) for b in second])
    cost = np.abs(a[:, None] - c[None, :])
    rows, cols = scipy.optimize.linear_sum_assignment(cost)
    scale = max(np.abs(a).max(), np.abs(c).max(), 1.0)
    return float(cost[rows, cols].max() / scale)


# -- eigenstates -------------------------------------------------------------


def sov_eigenstate(
    branch: SpectralFunction, inst: ModelInstance, m: int | None = None, m0: int = DEFAULT_M0
) -> np.ndarray:
    """SoV eigenstate of a branch as a sum over right SoV states at ``m + 2``.

    The measure is the directly computed Gram diagonal; ``m`` defaults to
    ``m0 + 2(N - 1)``.

    Raises:
        MeasureDegeneracyError: If a measure is numerically zero.
    """
    m = m0 + 2 * (inst.n - 1) if m is None else m
    q = inst.q
    factors = []
    for v in inst.v:
        x = 1 / v
        factors.append(branch(x) / (v * k_plus_tilde(x, inst) * phi(x, q)))
    state = np.zeros(inst.dim, dtype=complex)
    for h in bit_strings(inst.n):
        left = left_sov_vector(h, m, inst, m0).covector
        right = right_sov_state(h, m + 2, inst, m0).vector
        mu = left @ right
        if abs(mu) <= 1e-14 * np.linalg.norm(left) * np.linalg.norm(right):
            raise MeasureDegeneracyError(f"SoV measure for h={h} vanishes ({abs(mu):.3e})")
        weight = np.prod([f**hi for f, hi in zip(factors, h)])
        state += weight / mu * right
    return state


def eigenstate_residual(
    state: np.ndarray, branch: SpectralFunction, inst: ModelInstance, rng=None, points: int = 3
) -> float:
    """Largest ``|t(u) state - Lambda(u) state|`` over random points, relative."""
    rng = rng or np.random.default_rng(0)
    worst = 0.0
    for _ in range(points):
        u = random_point(rng)
        worst = max(worst, _vector_residual(transfer_matrix(u, inst) @ state, branch(u) * state))
    return worst


def bethe_sov_agreement(
    branch: SpectralFunction, inst: ModelInstance, m0: int = DEFAULT_M0
) -> dict[str, float]:
    """Proportionality of the on-shell Bethe vector and the SoV eigenstate.

    ``"state"`` is ``|Phi - c Psi| / |Phi|`` with the least-squares ``c``;
    ``"projection"`` is the spread of the component ratios in the left SoV basis.
    """
    if branch.roots is None:
        raise ValueError("Bethe/SoV comparison needs a branch with Bethe roots")
    psi_vector = bethe_vector(branch.roots, inst, m0)
    phi_vector = sov_eigenstate(branch, inst, m0=m0)
    scale = np.vdot(psi_vector, phi_vector) / np.vdot(psi_vector, psi_vector)
    state = float(np.linalg.norm(phi_vector - scale * psi_vector) / np.linalg.norm(phi_vector))
    rows = left_basis(m0 + 2 * (inst.n - 1), inst, m0)
    ratios = (rows @ phi_vector) / (rows @ psi_vector)
    mean = ratios.mean()
    projection = float(np.abs(ratios - mean).max() / abs(mean))
    return {"state": state, "projection": projection}
