#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Gauge vectors, dynamical operators and the gauged transfer matrix."""

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from xxz_maba.utils.functions import (
    a_tilde,
    b,
    c,
    d_tilde,
    f_uv,
    g_dyn,
    h_uv,
    k_dyn,
    linear_b,
    linear_c,
    n_dyn,
    phi,
    w_dyn,
    zeta,
    zeta_tilde,
)
from xxz_maba.utils.lattice import double_row, monodromy_entry, transfer_matrix
from xxz_maba.utils.linalg import operator_residual
from xxz_maba.utils.params import GaugeFrame, ModelInstance

logger = logging.getLogger(__name__)

OperatorName = Literal["A", "B", "C", "D"]


def x_vector(u: complex, m: int, frame: GaugeFrame) -> np.ndarray:
    return np.array([frame.alpha * frame.q ** (-m) / u, 1.0], dtype=complex)


def y_vector(u: complex, m: int, frame: GaugeFrame) -> np.ndarray:
    return np.array([frame.beta * frame.q**m / u, 1.0], dtype=complex)


def x_covector(u: complex, m: int, frame: GaugeFrame) -> np.ndarray:
    prefactor = frame.q * u / frame.gamma(m - 1)
    return prefactor * np.array([-1.0, frame.alpha * frame.q ** (-m) / u], dtype=complex)


def y_covector(u: complex, m: int, frame: GaugeFrame) -> np.ndarray:
    prefactor = frame.q * u / frame.gamma(m + 1)
    return prefactor * np.array([1.0, -frame.beta * frame.q**m / u], dtype=complex)


@dataclass(frozen=True)
class GaugeVectorPair:
    """Covariant and contravariant gauge vectors at ``(u, m)``."""

    u: complex
    m: int
    frame: GaugeFrame

    @property
    def x(self) -> np.ndarray:
        return x_vector(self.u, self.m, self.frame)

    @property
    def y(self) -> np.ndarray:
        return y_vector(self.u, self.m, self.frame)

    @property
    def x_tilde(self) -> np.ndarray:
        return x_covector(self.u, self.m, self.frame)

    @property
    def y_tilde(self) -> np.ndarray:
        return y_covector(self.u, self.m, self.frame)


def gauge_vector_residuals(u: complex, m: int, frame: GaugeFrame) -> dict[str, float]:
    """Orthogonality, shifted normalization and shifted closure residuals."""
    here = GaugeVectorPair(u, m, frame)
    above, below = GaugeVectorPair(u, m + 1, frame), GaugeVectorPair(u, m - 1, frame)
    closure = np.outer(below.y, above.x_tilde) + np.outer(above.x, below.y_tilde)
    return {
        "orthogonality": max(abs(here.x_tilde @ here.x), abs(here.y_tilde @ here.y)),
        "normalization": max(
            abs(above.x_tilde @ below.y - 1.0), abs(below.y_tilde @ above.x - 1.0)
        ),
        "closure": float(np.linalg.norm(closure - np.eye(2))),
    }


def sandwich(covector: np.ndarray, u: complex, vector: np.ndarray, inst: ModelInstance):
    """``<covector| K_a(u) |vector>`` as a chain operator."""
    d = inst.dim
    full = double_row(u, inst)
    result = np.zeros((d, d), dtype=complex)
    for i in range(2):
        for j in range(2):
            weight = covector[i] * vector[j]
            if weight != 0:
                result += weight * full[i * d : (i + 1) * d, j * d : (j + 1) * d]
    return result


def d_hat(u: complex, m: int, frame: GaugeFrame, inst: ModelInstance) -> np.ndarray:
    """Unsplit diagonal operator ``(gamma_{m+1}/gamma_m) <X~(u,m+2)|K(u)|Y(1/u,m)>``."""
    weight = frame.gamma(m + 1) / frame.gamma(m)
    return weight * sandwich(x_covector(u, m + 2, frame), u, y_vector(1 / u, m, frame), inst)


def dynamical_op(
    name: OperatorName, u: complex, m: int, frame: GaugeFrame, inst: ModelInstance
) -> np.ndarray:
    """Gauged double-row operator ``A``, ``B``, ``C`` or ``D`` at ``(u, m)``."""
    if name == "A":
        return sandwich(y_covector(u, m - 2, frame), u, x_vector(1 / u, m, frame), inst)
    if name == "B":
        return sandwich(y_covector(u, m, frame), u, y_vector(1 / u, m, frame), inst)
    if name == "C":
        return sandwich(x_covector(u, m, frame), u, x_vector(1 / u, m, frame), inst)
    if name == "D":
        q = inst.q
        split = b(q * u * u, q)
        weight = frame.gamma_at(u**-2, m + 1) / (split * frame.gamma(m))
        return d_hat(u, m, frame, inst) - weight * dynamical_op("A", u, m, frame, inst)
    raise ValueError(f"Unknown dynamical operator '{name}', expected A, B, C or D")


@dataclass(frozen=True)
class GaugedTransfer:
    diagonal: np.ndarray
    off_diagonal: np.ndarray
    residual: float

    @property
    def total(self) -> np.ndarray:
        return self.diagonal + self.off_diagonal


def gauged_transfer(u: complex, m: int, frame: GaugeFrame, inst: ModelInstance) -> GaugedTransfer:
    """Split ``t(u)`` into its diagonal part ``t_d(u, m)`` and the B/C remainder.

    The residual compares the reassembled operator with the trace form.
    """
    q = inst.q
    ops = {name: dynamical_op(name, u, m, frame, inst) for name in "ABCD"}
    diagonal = (
        a_tilde(u, inst, m, frame) * ops["A"] + d_tilde(u, inst, m, frame) * ops["D"]
    )
    off_diagonal = (
        c(q * u)
        / u
        * (zeta(m, frame, inst) * ops["B"] - zeta_tilde(m, frame, inst) * ops["C"])
    )
    residual = operator_residual(diagonal + off_diagonal, transfer_matrix(u, inst))
    return GaugedTransfer(diagonal, off_diagonal, residual)


def check_commutation(
    u: complex, v: complex, m: int, frame: GaugeFrame, inst: ModelInstance
) -> tuple[float, float, float]:
    """Residuals of the BB, AB and DB exchange relations."""
    q = inst.q

    def op(name, x, label):
        return dynamical_op(name, x, label, frame, inst)

    b_u, b_v = op("B", u, m), op("B", v, m)
    bb = operator_residual(op("B", u, m + 2) @ b_v, op("B", v, m + 2) @ b_u)

    a_u, a_v = op("A", u, m), op("A", v, m)
    d_u, d_v = op("D", u, m), op("D", v, m)
    ab = operator_residual(
        op("A", u, m + 2) @ b_v,
        f_uv(u, v, q) * b_v @ a_u
        + g_dyn(u, v, m, frame) * b_u @ a_v
        + w_dyn(u, v, m, frame) * b_u @ d_v,
    )
    db = operator_residual(
        op("D", u, m + 2) @ b_v,
        h_uv(u, v, q) * b_v @ d_u
        + k_dyn(u, v, m, frame) * b_u @ d_v
        + n_dyn(u, v, m, frame) * b_u @ a_v,
    )
    return bb, ab, db


def check_linear_relations(
    u: complex,
    p: int,
    m: int,
    dr: GaugeFrame,
    dl: GaugeFrame,
    inst: ModelInstance,
) -> tuple[float, float]:
    """Residuals of the A and D relations between the dr and dl frames.

    Raises:
        GaugeDegeneracyError: If a denominator of ``b(p, m)`` or ``c(p, m)``
            vanishes.
    """
    bpm, cpm = linear_b(p, m, dr, dl), linear_c(p, m, dr, dl)
    ph = phi(u, inst.q)
    c_dr = dynamical_op("C", u, m, dr, inst)
    b_dl = dynamical_op("B", u, p - 2, dl, inst)
    a_res = operator_residual(
        dynamical_op("A", u, p, dl, inst),
        dynamical_op("A", u, m, dr, inst) + cpm * c_dr + bpm * b_dl,
    )
    d_res = operator_residual(
        dynamical_op("D", u, p, dl, inst),
        dynamical_op("D", u, m, dr, inst) - ph * cpm * c_dr - ph * bpm * b_dl,
    )
    return a_res, d_res


def check_gauge_invariant_combination(
    u: complex, m: int, frame: GaugeFrame, inst: ModelInstance
) -> float:
    """Residual of ``D(u,m) + phi(u) A(u,m) = q u^2 K_11(u) + K_22(u) / q``."""
    q = inst.q
    lhs = dynamical_op("D", u, m, frame, inst) + phi(u, q) * dynamical_op("A", u, m, frame, inst)
    rhs = q * u * u * monodromy_entry(u, inst, 0, 0) + monodromy_entry(u, inst, 1, 1) / q
    return operator_residual(lhs, rhs)
