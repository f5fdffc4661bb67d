#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Model parameters, boundary reparametrizations, gauge frames and sampling."""

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from xxz_maba.constants import (
    BOUNDARY_MODULUS_RANGE,
    BOUNDARY_SAMPLE_RANGE,
    DEFAULT_M0,
    GAMMA_THRESHOLD,
    GENERICITY_MARGIN,
    INHOMOGENEITY_MODULUS_RANGE,
    MAX_CHAIN_LENGTH,
    Q_MODULUS_RANGE,
    Q_PHASE_RANGE,
    REPARAMETRIZATION_TOLERANCE,
    SAMPLING_CAP,
)
from xxz_maba.errors import (
    DegenerateParametrizationError,
    GaugeDegeneracyError,
    GenericityError,
    SamplingError,
)
from xxz_maba.utils.linalg import crossing_variable

logger = logging.getLogger(__name__)

FrameTag = Literal["dr", "dl", "generic"]


@dataclass(frozen=True)
class LeftBoundary:
    """Left (K+) boundary in both parametrizations."""

    kappa: complex
    kappa_t: complex
    xi: complex
    xi_t: complex
    eps_plus: complex
    eps_minus: complex


@dataclass(frozen=True)
class RightBoundary:
    """Right (K-) boundary in both parametrizations."""

    tau: complex
    tau_t: complex
    mu: complex
    mu_t: complex
    nu_plus: complex
    nu_minus: complex


@dataclass(frozen=True)
class ModelInstance:
    q: complex
    v: tuple[complex, ...]
    left: LeftBoundary
    right: RightBoundary

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def dim(self) -> int:
        return 2**self.n


def _require_nonzero(names: tuple[str, ...], values: tuple[complex, ...]):
    zero = [name for name, value in zip(names, values) if value == 0]
    if zero:
        raise DegenerateParametrizationError(
            f"Boundary parameters must be nonzero, got zero for {', '.join(zero)}"
        )


def left_boundary_from_xi(
    kappa: complex, kappa_t: complex, xi: complex, xi_t: complex
) -> LeftBoundary:
    """Left boundary record with eps+- computed from (kappa, kappa_t, xi, xi_t)."""
    _require_nonzero(("kappa", "kappa_t", "xi", "xi_t"), (kappa, kappa_t, xi, xi_t))
    prefactor = 1j * kappa_t * kappa
    return LeftBoundary(
        kappa=complex(kappa),
        kappa_t=complex(kappa_t),
        xi=complex(xi),
        xi_t=complex(xi_t),
        eps_plus=complex(prefactor * (xi * xi_t + 1.0 / (xi_t * xi))),
        eps_minus=complex(prefactor * (xi / xi_t + xi_t / xi)),
    )


def right_boundary_from_mu(
    tau: complex, tau_t: complex, mu: complex, mu_t: complex
) -> RightBoundary:
    """Right boundary record with nu+- computed from (tau, tau_t, mu, mu_t)."""
    _require_nonzero(("tau", "tau_t", "mu", "mu_t"), (tau, tau_t, mu, mu_t))
    prefactor = 1j * tau_t * tau
    return RightBoundary(
        tau=complex(tau),
        tau_t=complex(tau_t),
        mu=complex(mu),
        mu_t=complex(mu_t),
        nu_plus=complex(prefactor * (mu * mu_t + 1.0 / (mu * mu_t))),
        nu_minus=complex(prefactor * (mu / mu_t + mu_t / mu)),
    )


def reparametrization_residual(inst: ModelInstance) -> float:
    """Largest relative mismatch between stored eps+-, nu+- and their rebuilt values."""
    left, right = inst.left, inst.right
    rebuilt_left = left_boundary_from_xi(left.kappa, left.kappa_t, left.xi, left.xi_t)
    rebuilt_right = right_boundary_from_mu(right.tau, right.tau_t, right.mu, right.mu_t)
    pairs = [
        (left.eps_plus, rebuilt_left.eps_plus),
        (left.eps_minus, rebuilt_left.eps_minus),
        (right.nu_plus, rebuilt_right.nu_plus),
        (right.nu_minus, rebuilt_right.nu_minus),
    ]
    return max(abs(a - b) / max(abs(a), abs(b), 1e-300) for a, b in pairs)


@dataclass(frozen=True)
class GaugeFrame:
    """Gauge constants (alpha, beta) with reference label m0 and string length M."""

    alpha: complex
    beta: complex
    q: complex
    m0: int
    M: int
    tag: FrameTag

    def gamma_at(self, u: complex, m: int) -> complex:
        """``gamma(u, m) = alpha q^-m u - beta q^m / u``."""
        return self.alpha * self.q ** (-m) * u - self.beta * self.q**m / u

    def gamma(self, m: int) -> complex:
        """``gamma_m``; raises if it is below the degeneracy threshold."""
        value = self.gamma_at(1.0, m)
        if abs(value) <= GAMMA_THRESHOLD:
            raise GaugeDegeneracyError(
                f"gamma_{m} = {value:.3e} vanishes in the {self.tag} frame "
                f"(m0={self.m0}, M={self.M})"
            )
        return value

    def check_window(self, n: int):
        for m in range(self.m0 - 2 * n - 2, self.m0 + 2 * n + 3):
            self.gamma(m)
        return self


def gauge_dr(inst: ModelInstance, m0: int = DEFAULT_M0) -> GaugeFrame:
    """Frame in which the dynamical right K-matrix is diagonal."""
    r, q, n = inst.right, inst.q, inst.n
    alpha = 1j * q ** (m0 + n) * r.tau * r.mu / (r.tau_t * r.mu_t)
    beta = 1j * q ** (-m0 - n) * r.tau * r.mu_t / (r.tau_t * r.mu)
    return GaugeFrame(alpha, beta, q, m0, n, "dr").check_window(n)


def gauge_dl(inst: ModelInstance, m0: int = DEFAULT_M0, M: int | None = None) -> GaugeFrame:
    """Frame in which the transfer matrix is modified diagonal at m0 + 2M."""
    M = inst.n if M is None else M
    left, q = inst.left, inst.q
    alpha = -1j * q ** (1 + m0 + 2 * M) * left.xi * left.kappa_t / (left.xi_t * left.kappa)
    beta = -1j * q ** (1 - m0 - 2 * M) * left.xi_t * left.kappa_t / (left.xi * left.kappa)
    return GaugeFrame(alpha, beta, q, m0, M, "dl").check_window(inst.n)


def gauge_generic(
    inst: ModelInstance, rng: np.random.Generator, m0: int = DEFAULT_M0
) -> GaugeFrame:
    """Random frame used to certify gauge independence."""
    alpha, beta = (_random_complex(rng, BOUNDARY_SAMPLE_RANGE) for _ in range(2))
    return GaugeFrame(alpha, beta, inst.q, m0, inst.n, "generic").check_window(inst.n)


def genericity_violations(inst: ModelInstance, m0: int = DEFAULT_M0) -> list[str]:
    """Every violated genericity inequality, as human readable strings."""
    q, v, n = inst.q, inst.v, inst.n
    margin = GENERICITY_MARGIN
    violations = []

    if not 1 <= n <= MAX_CHAIN_LENGTH:
        violations.append(f"chain length {n} outside 1..{MAX_CHAIN_LENGTH}")
    for k in range(1, 2 * n + 5):
        for sign in (1, -1):
            if abs(q ** (sign * k) - 1) <= margin:
                violations.append(f"|q^{sign * k} - 1| <= {margin}")

    us = [crossing_variable(x, q) for x in v]
    for i in range(n):
        for target in (1.0, -1.0):
            if abs(us[i] - target) <= margin:
                violations.append(f"|U(v_{i + 1}) - ({target:+.0f})| <= {margin}")
        for j in range(i, n):
            if j > i and abs(us[i] - us[j]) <= margin:
                violations.append(f"|U(v_{i + 1}) - U(v_{j + 1})| <= {margin}")
            for k in range(-2, 3):
                for sign in (1, -1):
                    if abs(v[i] * v[j] * q**k + sign) <= margin:
                        violations.append(
                            f"|v_{i + 1} v_{j + 1} q^{k} {sign:+d}| <= {margin}"
                        )
                    if j > i and abs(v[i] / v[j] * q**k + sign) <= margin:
                        violations.append(
                            f"|v_{i + 1} / v_{j + 1} q^{k} {sign:+d}| <= {margin}"
                        )

    low, high = BOUNDARY_MODULUS_RANGE
    boundary = {
        "kappa": inst.left.kappa,
        "kappa_t": inst.left.kappa_t,
        "xi": inst.left.xi,
        "xi_t": inst.left.xi_t,
        "tau": inst.right.tau,
        "tau_t": inst.right.tau_t,
        "mu": inst.right.mu,
        "mu_t": inst.right.mu_t,
    }
    for name, value in boundary.items():
        if not low <= abs(value) <= high:
            violations.append(f"|{name}| = {abs(value):.3g} outside [{low}, {high}]")

    if reparametrization_residual(inst) > REPARAMETRIZATION_TOLERANCE:
        violations.append("boundary reparametrization mismatch")

    if not violations:
        try:
            dr = gauge_dr(inst, m0)
            for M in range(n + 1):
                dl = gauge_dl(inst, m0, M)
                if abs(dr.alpha - dl.beta * q ** (2 * m0 - 2)) <= GAMMA_THRESHOLD:
                    violations.append(f"alpha_dr = beta_dl q^(2 m0 - 2) for M={M}")
        except GaugeDegeneracyError as e:
            violations.append(str(e))
    return violations


def validate_instance(inst: ModelInstance, m0: int = DEFAULT_M0) -> ModelInstance:
    violations = genericity_violations(inst, m0)
    if violations:
        raise GenericityError(violations)
    return inst


def make_instance(
    q: complex,
    v,
    kappa: complex,
    kappa_t: complex,
    xi: complex,
    xi_t: complex,
    tau: complex,
    tau_t: complex,
    mu: complex,
    mu_t: complex,
    validate: bool = True,
    m0: int = DEFAULT_M0,
) -> ModelInstance:
    """Build an instance from the (xi, mu) parametrization, optionally validated."""
    inst = ModelInstance(
        q=complex(q),
        v=tuple(complex(x) for x in v),
        left=left_boundary_from_xi(kappa, kappa_t, xi, xi_t),
        right=right_boundary_from_mu(tau, tau_t, mu, mu_t),
    )
    return validate_instance(inst, m0) if validate else inst


def _random_complex(rng: np.random.Generator, modulus_range) -> complex:
    modulus = rng.uniform(*modulus_range)
    phase = rng.uniform(0.0, 2.0 * np.pi)
    return complex(modulus * np.exp(1j * phase))


def _draw(rng: np.random.Generator, n: int, constrained: bool) -> ModelInstance:
    q = complex(rng.uniform(*Q_MODULUS_RANGE) * np.exp(1j * rng.uniform(*Q_PHASE_RANGE)))
    kappa, kappa_t, xi, xi_t, tau, tau_t, mu, mu_t = (
        _random_complex(rng, BOUNDARY_SAMPLE_RANGE) for _ in range(8)
    )
    v = [_random_complex(rng, INHOMOGENEITY_MODULUS_RANGE) for _ in range(n)]
    if constrained:
        # alpha_dr = alpha_dl(N): the extra creation-string term drops out.
        mu_t = -tau * mu * xi_t * kappa / (tau_t * q ** (1 + n) * xi * kappa_t)
    return make_instance(q, v, kappa, kappa_t, xi, xi_t, tau, tau_t, mu, mu_t, validate=False)


def _sample(seed: int, n: int, m0: int, constrained: bool) -> ModelInstance:
    if not 1 <= n <= MAX_CHAIN_LENGTH:
        raise GenericityError([f"chain length {n} outside 1..{MAX_CHAIN_LENGTH}"])
    rng = np.random.default_rng(seed)
    for attempt in range(SAMPLING_CAP):
        inst = _draw(rng, n, constrained)
        violations = genericity_violations(inst, m0)
        if not violations:
            logger.debug(f"Seed {seed}: accepted draw {attempt + 1} for N={n}")
            return inst
        logger.debug(f"Seed {seed}: rejected draw {attempt + 1}: {violations[0]}")
    raise SamplingError(
        f"No generic instance for seed {seed}, N={n} within {SAMPLING_CAP} draws"
    )


def sample_generic(seed: int, n: int, m0: int = DEFAULT_M0) -> ModelInstance:
    """Deterministic generic instance drawn with numpy's PCG64 generator.

    Args:
        seed: Seed of ``numpy.random.default_rng``.
        n: Chain length, 1..6.
        m0: Reference label used for the gauge-frame certificates.

    Raises:
        SamplingError: If 1000 draws are rejected.
    """
    return _sample(seed, n, m0, constrained=False)


def constrained_instance(seed: int, n: int, m0: int = DEFAULT_M0) -> ModelInstance:
    """Generic instance whose boundaries satisfy the constraint alpha_dr = alpha_dl(N).

    On such instances the extra creation-string coefficient and the
    inhomogeneous T-Q term both vanish.
    """
    return _sample(seed, n, m0, constrained=True)
