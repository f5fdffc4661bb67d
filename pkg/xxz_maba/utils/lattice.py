#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Chain-space operators: R- and K-matrices, double-row monodromy, transfer matrix.

The full space is ``V_a (x) V_1 (x) ... (x) V_N`` with the auxiliary factor
leftmost and site 1 next to it. Chain operators are ``2^N x 2^N`` complex
arrays.
"""

import functools
import logging
from dataclasses import dataclass

import numpy as np

from xxz_maba.constants import POLE_MARGIN
from xxz_maba.errors import SingularityError
from xxz_maba.utils.functions import (
    b,
    c,
    k_minus,
    k_minus_tilde,
    k_plus,
    k_plus_tilde,
    phi,
    psi,
    random_point,
    vacuum_lambda,
)
from xxz_maba.utils.linalg import (
    crossing_nodes,
    crossing_variable,
    fit_in_crossing,
    kron,
    operator_residual,
    relative_residual,
)
from xxz_maba.utils.params import ModelInstance

logger = logging.getLogger(__name__)

PERMUTATION = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

_UNITS = [[np.zeros((2, 2), dtype=complex) for _ in range(2)] for _ in range(2)]
for _i in range(2):
    for _j in range(2):
        _UNITS[_i][_j][_i, _j] = 1.0


def r_matrix(u: complex, q: complex) -> np.ndarray:
    """Trigonometric six-vertex R-matrix on ``V (x) V``."""
    if abs(u) <= POLE_MARGIN:
        raise SingularityError("R(u) at u = 0", u)
    bu, bqu = b(u, q), b(q * u, q)
    return np.array(
        [
            [bqu, 0, 0, 0],
            [0, bu, 1, 0],
            [0, 1, bu, 0],
            [0, 0, 0, bqu],
        ],
        dtype=complex,
    )


def k_minus_matrix(u: complex, inst: ModelInstance) -> np.ndarray:
    r = inst.right
    cu = c(u)
    return np.array(
        [[k_minus(u, inst), r.tau**2 * cu], [r.tau_t**2 * cu, k_minus(1.0 / u, inst)]],
        dtype=complex,
    )


def k_plus_matrix(u: complex, inst: ModelInstance) -> np.ndarray:
    left, q = inst.left, inst.q
    cqu = c(q * u)
    return np.array(
        [
            [k_plus(q * u, inst), left.kappa_t**2 * cqu],
            [left.kappa**2 * cqu, k_plus(1.0 / (q * u), inst)],
        ],
        dtype=complex,
    )


def embed_r(r: np.ndarray, site: int, n: int) -> np.ndarray:
    """``R_{a,site}`` on the full space, with ``site`` counted from 1."""
    left = np.eye(2 ** (site - 1))
    right = np.eye(2 ** (n - site))
    result = np.zeros((2 ** (n + 1),) * 2, dtype=complex)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for m in range(2):
                    entry = r[2 * i + k, 2 * j + m]
                    if entry != 0:
                        result += entry * kron(
                            _UNITS[i][j], kron(left, kron(_UNITS[k][m], right))
                        )
    return result


@functools.lru_cache(maxsize=128)
def _double_row(u: complex, inst: ModelInstance) -> np.ndarray:
    q, n = inst.q, inst.n
    matrix = kron(k_minus_matrix(u, inst), np.eye(inst.dim))
    for site in range(n, 0, -1):
        v = inst.v[site - 1]
        left = embed_r(r_matrix(u / v, q), site, n)
        right = embed_r(r_matrix(u * v, q), site, n)
        matrix = left @ matrix @ right
    matrix.setflags(write=False)
    return matrix


def double_row(u: complex, inst: ModelInstance) -> np.ndarray:
    """Double-row monodromy ``K_a(u)`` on the full space (read-only, cached)."""
    return _double_row(complex(u), inst)


def monodromy_entry(u: complex, inst: ModelInstance, i: int, j: int) -> np.ndarray:
    """Chain operator ``K_ij(u)`` of the auxiliary-space block ``(i, j)``."""
    d = inst.dim
    return double_row(u, inst)[i * d : (i + 1) * d, j * d : (j + 1) * d]


@dataclass(frozen=True)
class MonodromyBlocks:
    u: complex
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    k22: np.ndarray


def double_row_monodromy(u: complex, inst: ModelInstance) -> MonodromyBlocks:
    """Operators A, B, C, D with ``K_22 = D + A / b(q u^2)``.

    Raises:
        SingularityError: If ``b(q u^2)`` is within 1e-10 of zero.
    """
    q = inst.q
    split = b(q * u * u, q)
    if abs(split) <= POLE_MARGIN:
        raise SingularityError("b(q u^2) in the D block split", split)
    a = monodromy_entry(u, inst, 0, 0)
    k22 = monodromy_entry(u, inst, 1, 1)
    return MonodromyBlocks(
        u=complex(u),
        a=a,
        b=monodromy_entry(u, inst, 0, 1),
        c=monodromy_entry(u, inst, 1, 0),
        d=k22 - a / split,
        k22=k22,
    )


def transfer_matrix(u: complex, inst: ModelInstance) -> np.ndarray:
    """``t(u) = tr_a K+_a(u) K_a(u)``."""
    kp = k_plus_matrix(u, inst)
    t = np.zeros((inst.dim, inst.dim), dtype=complex)
    for i in range(2):
        for j in range(2):
            t += kp[i, j] * monodromy_entry(u, inst, j, i)
    return t


def transfer_operator_form(u: complex, inst: ModelInstance) -> np.ndarray:
    """``phi(u) k+(u) A + k+(1/(q u)) D + c(q u) (kappa^2 B + kappa_t^2 C)``."""
    q, left = inst.q, inst.left
    blocks = double_row_monodromy(u, inst)
    return (
        phi(u, q) * k_plus(u, inst) * blocks.a
        + k_plus(1.0 / (q * u), inst) * blocks.d
        + c(q * u) * (left.kappa**2 * blocks.b + left.kappa_t**2 * blocks.c)
    )


def operator_form_residual(u: complex, inst: ModelInstance) -> float:
    return operator_residual(transfer_operator_form(u, inst), transfer_matrix(u, inst))


# -- foundation identities ---------------------------------------------------


def yang_baxter_residual(u: complex, v: complex, w: complex, q: complex) -> float:
    eye = np.eye(2)
    r12 = np.kron(r_matrix(u / v, q), eye)
    r23 = np.kron(eye, r_matrix(v / w, q))
    # R13 = P23 R12 P23
    swap = np.kron(eye, PERMUTATION)
    r13 = swap @ np.kron(r_matrix(u / w, q), eye) @ swap
    return operator_residual(r12 @ r13 @ r23, r23 @ r13 @ r12)


def reflection_residual(u: complex, v: complex, q: complex, k_of) -> float:
    """Residual of ``R(u/v) K1(u) R(uv) K2(v) = K2(v) R(uv) K1(u) R(u/v)``."""
    eye = np.eye(2)
    k1 = np.kron(k_of(u), eye)
    k2 = np.kron(eye, k_of(v))
    r_minus, r_plus = r_matrix(u / v, q), r_matrix(u * v, q)
    return operator_residual(r_minus @ k1 @ r_plus @ k2, k2 @ r_plus @ k1 @ r_minus)


def k_minus_reflection(u: complex, v: complex, inst: ModelInstance) -> float:
    return reflection_residual(u, v, inst.q, lambda x: k_minus_matrix(x, inst))


def k_plus_reflection(u: complex, v: complex, inst: ModelInstance) -> float:
    """Dual reflection, checked as the reflection equation of ``K+(w / q)``."""
    q = inst.q
    return reflection_residual(u, v, q, lambda w: k_plus_matrix(w / q, inst))


def unitarity_residual(u: complex, q: complex) -> float:
    """Residual of ``R(u) R(1/u) = b(q u) b(q/u) I``."""
    lhs = r_matrix(u, q) @ r_matrix(1.0 / u, q)
    return operator_residual(lhs, b(q * u, q) * b(q / u, q) * np.eye(4))


def commutator_residual(u: complex, v: complex, inst: ModelInstance) -> float:
    tu, tv = transfer_matrix(u, inst), transfer_matrix(v, inst)
    scale = np.linalg.norm(tu) * np.linalg.norm(tv)
    return float(np.linalg.norm(tu @ tv - tv @ tu) / scale)


# -- analytic structure of t(u) ----------------------------------------------


def t_at_one(inst: ModelInstance) -> complex:
    q, left, right = inst.q, inst.left, inst.right
    value = (q + 1 / q) * (right.nu_plus + right.nu_minus) * (left.eps_plus + left.eps_minus)
    for v in inst.v:
        value *= b(q * v, q) * b(q / v, q)
    return value


def t_at_i(inst: ModelInstance) -> complex:
    q, left, right = inst.q, inst.left, inst.right
    value = (q + 1 / q) * (right.nu_minus - right.nu_plus) * (left.eps_minus - left.eps_plus)
    for v in inst.v:
        value *= b(1j * q * v, q) * b(1j * q / v, q)
    return value


def leading_constant(inst: ModelInstance) -> complex:
    """``kappa_t^2 tau_t^2 + kappa^2 tau^2``."""
    left, right = inst.left, inst.right
    return left.kappa_t**2 * right.tau_t**2 + left.kappa**2 * right.tau**2


def top_coefficient(inst: ModelInstance) -> complex:
    """Coefficient of ``U^(N+2)`` in the expansion of ``t(u)``."""
    q, n = inst.q, inst.n
    return (q + 1 / q) ** (n + 2) / (q - 1 / q) ** (2 * n) * leading_constant(inst)


def _scaled_transfer(u: float, inst: ModelInstance) -> np.ndarray:
    q, n = inst.q, inst.n
    return transfer_matrix(u, inst) * (q - 1 / q) ** (2 * n) / (u ** (4 + 2 * n) * q ** (2 + n))


def asymptotic_limit(inst: ModelInstance, near: float = 1e3, far: float = 1e4) -> np.ndarray:
    """Leading coefficient of ``t(u)`` by Richardson extrapolation in ``h = u^-2``."""
    h_near, h_far = near**-2, far**-2
    f_near, f_far = _scaled_transfer(near, inst), _scaled_transfer(far, inst)
    return (f_far * h_near - f_near * h_far) / (h_near - h_far)


@dataclass(frozen=True)
class AnalyticReport:
    parity: float
    crossing: float
    t_one: float
    t_i: float
    asymptotic: float
    held_out: float
    top_coefficient: float

    def as_dict(self) -> dict[str, float]:
        return dict(self.__dict__)


def analytic_constraints(
    inst: ModelInstance, rng: np.random.Generator | None = None, points: int = 10
) -> AnalyticReport:
    """Residuals of every analytic property of ``t(u)``.

    Covers parity and crossing at random points, the closed values at
    ``u = 1`` and ``u = i``, the large-``u`` asymptotics and the
    degree-``N+2`` polynomial structure in ``U(u)``.
    """
    rng = rng or np.random.default_rng(0)
    q, n, eye = inst.q, inst.n, np.eye(inst.dim)

    parity, crossing = 0.0, 0.0
    for _ in range(points):
        u = random_point(rng)
        tu = transfer_matrix(u, inst)
        parity = max(parity, operator_residual(transfer_matrix(-u, inst), tu))
        crossing = max(crossing, operator_residual(transfer_matrix(1 / (q * u), inst), tu))

    nodes = crossing_nodes(n + 3, q)
    coeffs, _ = fit_in_crossing(nodes, [transfer_matrix(u, inst) for u in nodes], n + 2, q)
    held_out = 0.0
    for _ in range(5):
        u = random_point(rng)
        powers = crossing_variable(u, q) ** np.arange(n + 3)
        predicted = np.tensordot(powers, coeffs, axes=1)
        held_out = max(held_out, operator_residual(predicted, transfer_matrix(u, inst)))

    report = AnalyticReport(
        parity=parity,
        crossing=crossing,
        t_one=operator_residual(transfer_matrix(1.0, inst), t_at_one(inst) * eye),
        t_i=operator_residual(transfer_matrix(1j, inst), t_at_i(inst) * eye),
        asymptotic=operator_residual(asymptotic_limit(inst), leading_constant(inst) * eye),
        held_out=held_out,
        top_coefficient=operator_residual(coeffs[n + 2], top_coefficient(inst) * eye),
    )
    logger.debug(f"Analytic constraints for N={n}: {report}")
    return report


# -- quantum determinant -----------------------------------------------------


def quantum_determinant(u: complex, inst: ModelInstance) -> complex:
    """Sklyanin determinant of ``K+(u) K(u)``."""
    q = inst.q
    x, y = q * u, 1 / (q * u)
    return (
        b(u * u, q)
        * b(q**-4 / (u * u), q)
        * k_plus_tilde(x, inst)
        * k_minus_tilde(x, inst)
        * k_plus_tilde(y, inst)
        * k_minus_tilde(y, inst)
        * vacuum_lambda(x, inst)
        * vacuum_lambda(y, inst)
    )


def sklyanin_rhs(v: complex, inst: ModelInstance) -> complex:
    """Scalar value of ``t(v/q) t(v)`` at an inhomogeneity ``v``."""
    q = inst.q
    den = b(q * v * v, q) * b(q / (v * v), q)
    if abs(den) <= POLE_MARGIN:
        raise SingularityError("b(q v^2) b(q v^-2)", den)
    return quantum_determinant(v / q, inst) / den


def sklyanin_relation(inst: ModelInstance, i: int) -> float:
    """Residual of ``t(v_i / q) t(v_i) = rhs(v_i) I`` for a site index ``1 <= i <= N``."""
    if not 1 <= i <= inst.n:
        raise ValueError(f"Site index {i} outside 1..{inst.n}")
    v, q = inst.v[i - 1], inst.q
    lhs = transfer_matrix(v / q, inst) @ transfer_matrix(v, inst)
    return operator_residual(lhs, sklyanin_rhs(v, inst) * np.eye(inst.dim))


def sklyanin_product_residual(inst: ModelInstance, i: int) -> float:
    """The quantum-determinant ratio against ``psi(v_i) psi(1/v_i)``."""
    v = inst.v[i - 1]
    return relative_residual(sklyanin_rhs(v, inst), psi(v, inst) * psi(1 / v, inst))
