#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Scalar functions, structure constants and scalar functional identities.

A set-valued second argument means a product over the set, e.g.
``f_uv(u, us, q) = prod_i f(u, us[i])``.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

import numpy as np

from xxz_maba.constants import DEFAULT_M0, POLE_MARGIN, RESAMPLE_RETRIES
from xxz_maba.errors import (
    GaugeDegeneracyError,
    ResampleRequestedError,
    SingularityError,
)
from xxz_maba.utils.linalg import crossing_variable, relative_residual
from xxz_maba.utils.params import GaugeFrame, ModelInstance, gauge_dl, gauge_dr

logger = logging.getLogger(__name__)


def _div(num: complex, den: complex, factor: str) -> complex:
    if abs(den) <= POLE_MARGIN:
        raise SingularityError(factor, den)
    return num / den


def _nonzero(u: complex, factor: str) -> complex:
    if abs(u) <= POLE_MARGIN:
        raise SingularityError(factor, u)
    return u


def _as_set(v) -> tuple:
    if np.isscalar(v):
        return (v,)
    return tuple(v)


def without(us: Sequence[complex], i: int) -> tuple:
    """The set with element ``i`` removed."""
    return tuple(us[:i]) + tuple(us[i + 1 :])


# -- one-point functions -----------------------------------------------------


def b(u: complex, q: complex) -> complex:
    return (u - 1.0 / _nonzero(u, "b(u) at u = 0")) / (q - 1.0 / q)


def c(u: complex) -> complex:
    return u**2 - 1.0 / _nonzero(u, "c(u) at u = 0") ** 2


def phi(u: complex, q: complex) -> complex:
    return _div(b(q * q * u * u, q), b(q * u * u, q), "phi: b(q u^2)")


def k_minus(u: complex, inst: ModelInstance) -> complex:
    return inst.right.nu_minus * u + inst.right.nu_plus / _nonzero(u, "k-(u) at u = 0")


def k_plus(u: complex, inst: ModelInstance) -> complex:
    return inst.left.eps_plus * u + inst.left.eps_minus / _nonzero(u, "k+(u) at u = 0")


def k_minus_tilde(u: complex, inst: ModelInstance) -> complex:
    r = inst.right
    _nonzero(u, "k~-(u) at u = 0")
    return 1j * r.tau_t * r.tau * (r.mu * u + 1.0 / (r.mu * u)) * (u / r.mu_t + r.mu_t / u)


def k_plus_tilde(u: complex, inst: ModelInstance) -> complex:
    left = inst.left
    _nonzero(u, "k~+(u) at u = 0")
    return (
        1j
        * left.kappa_t
        * left.kappa
        * (left.xi_t * u + 1.0 / (left.xi_t * u))
        * (u / left.xi + left.xi / u)
    )


def vacuum_lambda(u: complex, inst: ModelInstance) -> complex:
    """Vacuum eigenvalue function ``prod_i b(q u / v_i) b(q u v_i)``."""
    q = inst.q
    return complex(np.prod([b(q * u / v, q) * b(q * u * v, q) for v in inst.v]))


def lambda_b(u: complex, inst: ModelInstance) -> complex:
    """Left pseudo-eigenvalue function of the modified creation operator."""
    q = inst.q
    rest = np.prod([b(q * u / v, q) * b(u * v, q) for v in inst.v])
    return complex(u * c(u) * rest)


def lambda_b_tilde(u: complex, inst: ModelInstance) -> complex:
    """Right pseudo-eigenvalue function of the modified creation operator."""
    q = inst.q
    rest = np.prod([b(q * u * v, q) * b(u / v, q) for v in inst.v])
    return complex(u * c(u) * rest)


def psi(u: complex, inst: ModelInstance) -> complex:
    q = inst.q
    return phi(u, q) * k_plus_tilde(u, inst) * k_minus_tilde(u, inst) * vacuum_lambda(u, inst)


def crossed(u: complex, q: complex) -> complex:
    """Crossing image ``1 / (q u)``."""
    return 1.0 / (q * _nonzero(u, "crossing at u = 0"))


BASIC_FUNCTIONS: dict[str, Callable[[complex, ModelInstance], complex]] = {
    "b": lambda u, inst: b(u, inst.q),
    "c": lambda u, inst: c(u),
    "phi": lambda u, inst: phi(u, inst.q),
    "k_minus": k_minus,
    "k_plus": k_plus,
    "k_minus_tilde": k_minus_tilde,
    "k_plus_tilde": k_plus_tilde,
    "U": lambda u, inst: crossing_variable(u, inst.q),
    "Lambda": vacuum_lambda,
    "Lambda_b": lambda_b,
    "Lambda_b_tilde": lambda_b_tilde,
    "psi": psi,
}


def eval_basic(name: str, u: complex, inst: ModelInstance) -> complex:
    """Evaluate a named one-point function.

    Raises:
        ValueError: For an unknown name.
        SingularityError: If ``u`` is within 1e-10 of a pole.
    """
    try:
        function = BASIC_FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"Unknown function '{name}', expected one of {sorted(BASIC_FUNCTIONS)}"
        )
    return complex(function(u, inst))


# -- two-point functions -----------------------------------------------------


def big_g(u: complex, v: complex, q: complex) -> complex:
    return _div(1.0, b(u / v, q) * b(q * u * v, q), "G: b(u/v) b(q u v)")


def f_tilde(u: complex, v: complex, q: complex) -> complex:
    return (v / u) * big_g(u, v, q) * _div(b(q * q * u * u, q), phi(v, q), "phi(v)")


def f_uv(u: complex, v: complex, q: complex) -> complex:
    return _div(b(q * v / u, q) * b(u * v, q), b(v / u, q) * b(q * u * v, q), "f: b(v/u) b(q u v)")


def g_uv(u: complex, v: complex, q: complex) -> complex:
    return _div(phi(crossed(v, q), q), b(u / v, q), "g: b(u/v)")


def w_uv(u: complex, v: complex, q: complex) -> complex:
    return -_div(1.0, b(q * u * v, q), "w: b(q u v)")


def h_uv(u: complex, v: complex, q: complex) -> complex:
    return _div(
        b(q * q * u * v, q) * b(q * u / v, q),
        b(q * u * v, q) * b(u / v, q),
        "h: b(q u v) b(u/v)",
    )


def k_uv(u: complex, v: complex, q: complex) -> complex:
    return _div(phi(u, q), b(v / u, q), "k: b(v/u)")


def n_uv(u: complex, v: complex, q: complex) -> complex:
    return _div(phi(u, q) * phi(crossed(v, q), q), b(q * u * v, q), "n: b(q u v)")


TWO_POINT_FUNCTIONS = {
    "f": f_uv,
    "g": g_uv,
    "w": w_uv,
    "h": h_uv,
    "k": k_uv,
    "n": n_uv,
    "G": big_g,
    "F_tilde": f_tilde,
}


def over_set(function, u: complex, vs, q: complex) -> complex:
    """Product of a two-point function over a set of second arguments."""
    result = 1.0 + 0.0j
    for v in _as_set(vs):
        result *= function(u, v, q)
    return result


def eval_two_point(name: str, u: complex, v, inst: ModelInstance) -> complex:
    """Evaluate a named two-point function; a sequence ``v`` means a product."""
    try:
        function = TWO_POINT_FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"Unknown two-point function '{name}', expected one of "
            f"{sorted(TWO_POINT_FUNCTIONS)}"
        )
    return complex(over_set(function, u, v, inst.q))


# -- dynamical functions -----------------------------------------------------


def g_dyn(u, v, m: int, frame: GaugeFrame) -> complex:
    return frame.gamma_at(u / v, m + 1) / frame.gamma(m + 1) * g_uv(u, v, frame.q)


def w_dyn(u, v, m: int, frame: GaugeFrame) -> complex:
    return frame.gamma_at(u * v, m) / frame.gamma(m + 1) * w_uv(u, v, frame.q)


def k_dyn(u, v, m: int, frame: GaugeFrame) -> complex:
    return frame.gamma_at(v / u, m + 1) / frame.gamma(m + 1) * k_uv(u, v, frame.q)


def n_dyn(u, v, m: int, frame: GaugeFrame) -> complex:
    return frame.gamma_at(1.0 / (u * v), m + 2) / frame.gamma(m + 1) * n_uv(u, v, frame.q)


DYNAMICAL_FUNCTIONS = {"g": g_dyn, "w": w_dyn, "k": k_dyn, "n": n_dyn}


def eval_dynamical(
    name: str, u: complex, v: complex | None, m: int, frame: GaugeFrame
) -> complex:
    """Evaluate ``gamma(u, m)`` or a dynamical structure function in ``frame``."""
    if name == "gamma":
        return complex(frame.gamma_at(u, m))
    try:
        function = DYNAMICAL_FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"Unknown dynamical function '{name}', expected gamma or one of "
            f"{sorted(DYNAMICAL_FUNCTIONS)}"
        )
    return complex(function(u, v, m, frame))


# -- P(u, v, h) --------------------------------------------------------------


def eval_P(u: complex, v: Sequence[complex], h: Sequence[int], q: complex) -> complex:
    result = 1.0 + 0.0j
    for vi, hi in zip(v, h):
        if hi:
            result *= b(u * vi, q) * b(q * u / vi, q)
        else:
            result *= b(q * u * vi, q) * b(u / vi, q)
    return result


def bit_strings(n: int) -> list[tuple[int, ...]]:
    """All ``2^n`` bit strings, in lexicographic order."""
    return list(product((0, 1), repeat=n))


# -- eigenvalue building blocks ----------------------------------------------


def chi(inst: ModelInstance) -> complex:
    left, right, q, n = inst.left, inst.right, inst.q, inst.n
    kt = left.kappa * right.tau
    kt_t = left.kappa_t * right.tau_t
    ratio = left.xi * right.mu_t / (left.xi_t * right.mu)
    return -kt * kt_t * (kt / kt_t + kt_t / kt + ratio * q ** (n + 1) + q ** (-n - 1) / ratio)


def lambda_d(u: complex, us, inst: ModelInstance) -> complex:
    q = inst.q
    return psi(u, inst) * over_set(f_uv, u, us, q) + psi(crossed(u, q), inst) * over_set(
        h_uv, u, us, q
    )


def e_d(ui: complex, rest, inst: ModelInstance) -> complex:
    q = inst.q
    x = crossed(ui, q)
    direct = k_plus_tilde(ui, inst) * k_minus_tilde(ui, inst) * vacuum_lambda(ui, inst)
    cross = k_plus_tilde(x, inst) * k_minus_tilde(x, inst) * vacuum_lambda(x, inst)
    return (
        phi(x, q)
        * phi(ui, q)
        * (direct * over_set(f_uv, ui, rest, q) - cross * over_set(h_uv, ui, rest, q))
    )


def inhomogeneous_factor(u: complex, inst: ModelInstance) -> complex:
    """``c(u) c(1/(q u)) Lambda(u) Lambda(1/(q u))``."""
    x = crossed(u, inst.q)
    return c(u) * c(x) * vacuum_lambda(u, inst) * vacuum_lambda(x, inst)


def lambda_g(u: complex, us, inst: ModelInstance) -> complex:
    return chi(inst) * inhomogeneous_factor(u, inst) * over_set(big_g, u, us, inst.q)


def e_g(ui: complex, rest, inst: ModelInstance) -> complex:
    q = inst.q
    return (
        -chi(inst)
        * _div(inhomogeneous_factor(ui, inst), b(q * ui * ui, q), "E_g: b(q u^2)")
        * over_set(big_g, ui, rest, q)
    )


# -- structure constants -----------------------------------------------------


def _left_boundary_ratios(inst: ModelInstance) -> tuple[complex, complex]:
    left = inst.left
    return (
        1j * left.kappa_t * left.xi / (left.kappa * left.xi_t),
        1j * left.kappa_t * left.xi_t / (left.kappa * left.xi),
    )


def zeta(m: int, frame: GaugeFrame, inst: ModelInstance) -> complex:
    r1, r2 = _left_boundary_ratios(inst)
    a = frame.alpha * frame.q ** (-m - 1)
    return inst.left.kappa**2 / frame.gamma(m) * (a + r1) * (a + r2)


def zeta_tilde(m: int, frame: GaugeFrame, inst: ModelInstance) -> complex:
    r1, r2 = _left_boundary_ratios(inst)
    bq = frame.beta * frame.q ** (m - 1)
    return inst.left.kappa**2 / frame.gamma(m) * (bq + r1) * (bq + r2)


def delta(m: int, frame: GaugeFrame, inst: ModelInstance) -> complex:
    r1, r2 = _left_boundary_ratios(inst)
    q = frame.q
    return (
        inst.left.kappa**2
        / frame.gamma(m + 1)
        * (frame.alpha * q ** (-m - 1) + r1)
        * (frame.beta * q ** (m + 1) + r2)
    )


def a_tilde(u: complex, inst: ModelInstance, m: int | None = None, frame=None) -> complex:
    """``a~(u)``, or its dynamical version ``a~(u, m)`` when a frame is given."""
    q = inst.q
    value = phi(u, q) * k_plus_tilde(u, inst) / u
    if frame is not None:
        value -= delta(m, frame, inst) * phi(crossed(u, q), q) * c(q * u) / u
    return value


def d_tilde(u: complex, inst: ModelInstance, m: int | None = None, frame=None) -> complex:
    q = inst.q
    value = k_plus_tilde(crossed(u, q), inst) / u
    if frame is not None:
        value += delta(m, frame, inst) * c(q * u) / u
    return value


def linear_b(p: int, m: int, dr: GaugeFrame, dl: GaugeFrame) -> complex:
    q = dr.q
    den = dr.alpha - q ** (m + p - 2) * dl.beta
    if abs(den) <= 1e-8:
        raise GaugeDegeneracyError(f"b({p}, {m}) denominator vanishes")
    return (dr.alpha - q ** (m - p) * dl.alpha) / den


def linear_c(p: int, m: int, dr: GaugeFrame, dl: GaugeFrame) -> complex:
    q = dr.q
    den = q ** (2 - m - p) * dr.alpha - dl.beta
    if abs(den) <= 1e-8:
        raise GaugeDegeneracyError(f"c({p}, {m}) denominator vanishes")
    return (q ** (m - p) * dr.beta - dl.beta) / den


def eta(inst: ModelInstance, m0: int = DEFAULT_M0, M: int | None = None) -> complex:
    """Off-diagonal coefficient of the highest-weight actions, ``b(m0, m0)``."""
    return linear_b(m0, m0, gauge_dr(inst, m0), gauge_dl(inst, m0, M))


def eta_hat(inst: ModelInstance, m0: int = DEFAULT_M0, M: int | None = None) -> complex:
    """Coefficient of the extra creation string in the off-shell action."""
    dl = gauge_dl(inst, m0, M)
    return inst.left.kappa**2 * dl.gamma(m0 - 1) * eta(inst, m0, M) / inst.q


def _right_boundary_factor(x: complex, inst: ModelInstance) -> complex:
    r = inst.right
    return (
        -inst.q
        * r.tau_t**2
        * (x - 1j * r.mu_t * r.tau / (r.mu * r.tau_t))
        * (x - 1j * r.mu * r.tau / (r.mu_t * r.tau_t))
    )


def eta_left(m: int, inst: ModelInstance, dl: GaugeFrame) -> complex:
    """Left pseudo-eigenvalue prefactor of the modified creation operator."""
    n, q = inst.n, inst.q
    return (
        _right_boundary_factor(q ** (n + m) * dl.beta, inst)
        * dl.gamma(m)
        / (dl.gamma(m + n) * dl.gamma(m + n + 1))
    )


def eta_right(m: int, inst: ModelInstance, dl: GaugeFrame) -> complex:
    """Right pseudo-eigenvalue prefactor of the modified creation operator."""
    n, q = inst.n, inst.q
    return _right_boundary_factor(q ** (m - n) * dl.beta, inst) / dl.gamma(m + 1)


def eta_bar(m: int, inst: ModelInstance, dl: GaugeFrame) -> complex:
    n = inst.n
    return eta_left(m, inst, dl) * dl.gamma(m + n) * dl.gamma(m + n + 1) / dl.gamma(m)


def sov_weight(h: Sequence[int], inst: ModelInstance) -> complex:
    """``W(h) = prod_i (k~-(1/v_i) Lambda(1/v_i) / v_i)^h_i``."""
    result = 1.0 + 0.0j
    for vi, hi in zip(inst.v, h):
        if hi:
            x = 1.0 / vi
            result *= x * k_minus_tilde(x, inst) * vacuum_lambda(x, inst)
    return result


def measure_closed_form(h: Sequence[int], m: int, inst: ModelInstance, dl: GaugeFrame) -> complex:
    """Closed-form diagonal of the left/right SoV Gram matrix."""
    q, v = inst.q, inst.v
    result = 1.0 + 0.0j
    for i in range(1, inst.n + 1):
        vi, hi = v[i - 1], h[i - 1]
        result *= (
            eta_bar(m - 2 * (i - 1), inst, dl)
            / dl.gamma(m + 1 + i)
            * vi ** (-2 * hi + 1)
            * c(vi)
            * b(q ** (-2 * hi + 1) * vi**2, q)
        )
        for j in range(1, i):
            vj, hj = v[j - 1], h[j - 1]
            result *= (
                b(q ** (-2 * hj + 1) * vj / vi, q)
                * b(q ** (-hj - hi + 1) * vi / vj, q)
                * b(q ** (-2 * hj + 1) * vi * vj, q)
                * b(q ** (hj - hi) * vi * vj, q)
            )
    return result


@dataclass(frozen=True)
class ConstantsRecord:
    zeta: complex
    zeta_tilde: complex
    delta: complex
    eta: complex
    eta_hat: complex
    chi: complex
    linear_b: complex | None
    linear_c: complex | None
    eta_left: complex
    eta_right: complex
    eta_bar: complex
    weight: complex | None
    measure: complex | None


def eval_constants(
    inst: ModelInstance,
    m: int,
    M: int | None = None,
    m0: int = DEFAULT_M0,
    frame: GaugeFrame | None = None,
    p: int | None = None,
    h: Sequence[int] | None = None,
) -> ConstantsRecord:
    """All structure constants at label ``m``.

    ``zeta``, ``zeta_tilde`` and ``delta`` use ``frame`` (default: the dl
    frame of string length ``M``); all other constants use the dr and dl
    frames built from ``m0`` and ``M``.
    """
    dr = gauge_dr(inst, m0)
    dl = gauge_dl(inst, m0, M)
    frame = frame or dl
    return ConstantsRecord(
        zeta=zeta(m, frame, inst),
        zeta_tilde=zeta_tilde(m, frame, inst),
        delta=delta(m, frame, inst),
        eta=eta(inst, m0, M),
        eta_hat=eta_hat(inst, m0, M),
        chi=chi(inst),
        linear_b=linear_b(p, m, dr, dl) if p is not None else None,
        linear_c=linear_c(p, m, dr, dl) if p is not None else None,
        eta_left=eta_left(m, inst, dl),
        eta_right=eta_right(m, inst, dl),
        eta_bar=eta_bar(m, inst, dl),
        weight=sov_weight(h, inst) if h is not None else None,
        measure=measure_closed_form(h, m, inst, dl) if h is not None else None,
    )


# -- scalar identities -------------------------------------------------------


def _fr1(inst, frame, us, u, m):
    q, size = inst.q, len(us)
    lhs = over_set(f_uv, u, us, q)
    for i, ui in enumerate(us):
        rest = without(us, i)
        lhs += g_dyn(u, ui, m - 2, frame) * over_set(f_uv, ui, rest, q)
        lhs -= phi(ui, q) * w_dyn(u, ui, m - 2, frame) * over_set(h_uv, ui, rest, q)
    return lhs, frame.gamma(m - 2 * size - 1) / frame.gamma(m - 1)


def _fr2(inst, frame, us, u, m):
    q, size = inst.q, len(us)
    total = 0.0
    for i, ui in enumerate(us):
        rest = without(us, i)
        total += phi(ui, q) * k_dyn(u, ui, m - 2, frame) * over_set(h_uv, ui, rest, q)
        total -= n_dyn(u, ui, m - 2, frame) * over_set(f_uv, ui, rest, q)
    lhs = over_set(h_uv, u, us, q) + total / phi(u, q)
    return lhs, frame.gamma(m - 2 * size - 1) / frame.gamma(m - 1)


def _fr3(inst, frame, us, u, m):
    q, size = inst.q, len(us)
    lhs = 0.0
    for i, ui in enumerate(us):
        rest = without(us, i)
        lhs += phi(ui, q) * over_set(h_uv, ui, rest, q)
        lhs += phi(crossed(ui, q), q) * over_set(f_uv, ui, rest, q)
    return lhs, (q ** (2 * size) - q ** (-2 * size)) / (q - 1.0 / q)


def _offshell_projection(inst, us, u, h):
    q, v = inst.q, inst.v

    def cross_product(x, skip=None):
        return np.prod(
            [b(q * x * un, q) * b(x / un, q) for k, un in enumerate(us) if k != skip]
        )

    lhs = 0.0
    for i, ui in enumerate(us):
        weight = _div(eval_P(ui, v, h, q), cross_product(ui, skip=i), "P denominator")
        lhs += big_g(u, ui, q) * weight
    rhs = _div(eval_P(u, v, h, q), cross_product(u), "P denominator") - 1.0
    return lhs, rhs


def _sov_denominator(x, inst, h):
    return lambda_b(x, inst) * np.prod(
        [f_uv(1.0 / vj, x, inst.q) ** hj for vj, hj in zip(inst.v, h)]
    )


def _functional_system(inst, us, u, h):
    q = inst.q
    rhs = lambda_g(u, us, inst) / _sov_denominator(u, inst, h)
    for i, ui in enumerate(us):
        rest = without(us, i)
        rhs += f_tilde(u, ui, q) * e_g(ui, rest, inst) / _sov_denominator(ui, inst, h)
    return -chi(inst) * c(q * u) / u, rhs


IDENTITY_NAMES = ("FR1", "FR2", "FR3", "offshellBV4", "functionalsystem1")


def check_identity(
    name: str,
    inst: ModelInstance,
    frame: GaugeFrame | None = None,
    us: Sequence[complex] = (),
    u: complex | None = None,
    h: Sequence[int] | None = None,
    m: int = DEFAULT_M0,
) -> float:
    """Symmetric relative residual of a named scalar functional identity.

    ``FR1`` and ``FR2`` are the exchange sum rules of the dynamical structure
    functions, ``FR3`` their asymptotic constant, ``offshellBV4`` the
    partial-fraction identity behind the SoV projections and
    ``functionalsystem1`` the projected form of the extra creation-string
    action.

    Raises:
        ResampleRequestedError: If a point lies within 1e-10 of a pole.
    """
    us = tuple(us)
    try:
        if name == "FR1":
            lhs, rhs = _fr1(inst, frame, us, u, m)
        elif name == "FR2":
            lhs, rhs = _fr2(inst, frame, us, u, m)
        elif name == "FR3":
            lhs, rhs = _fr3(inst, frame, us, u, m)
        elif name == "offshellBV4":
            lhs, rhs = _offshell_projection(inst, us, u, h)
        elif name == "functionalsystem1":
            lhs, rhs = _functional_system(inst, us, u, h)
        else:
            raise ValueError(f"Unknown identity '{name}', expected one of {IDENTITY_NAMES}")
    except ResampleRequestedError:
        raise
    except SingularityError as e:
        raise ResampleRequestedError(e.factor)
    return relative_residual(complex(lhs), complex(rhs))


def random_point(rng: np.random.Generator, modulus=(0.7, 1.4)) -> complex:
    """Random spectral point with modulus in ``modulus`` and uniform phase."""
    return complex(rng.uniform(*modulus) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))


def with_resampling(evaluate: Callable[[np.random.Generator], float], rng: np.random.Generator):
    """Run ``evaluate(rng)``, redrawing on pole proximity up to 10 times."""
    for attempt in range(RESAMPLE_RETRIES + 1):
        try:
            return evaluate(rng)
        except SingularityError as e:
            logger.debug(f"Resampling after attempt {attempt + 1}: {e}")
            last = e
    raise ResampleRequestedError(last.factor)
