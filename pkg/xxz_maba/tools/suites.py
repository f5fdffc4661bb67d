#!/usr/bin/env python3
# Copyright (c) 2025 by Brockmann Consult GmbH
# Permissions are hereby granted under the terms of the MIT License:
# https://opensource.org/licenses/MIT.

"""Catalogue of residual checks, grouped by suite.

Every check evaluates to ``(residual, details)``. Sweep checks draw
``draws`` random points from the check's own generator and report the
worst residual; points near a pole are redrawn.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from xxz_maba.constants import (
    DEFAULT_DRAWS,
    DEFAULT_M0,
    ENUMERATION_MAX_N,
    EXCHANGE_RULE_DRAWS,
    FOUNDATION_DRAWS,
    OFFSHELL_DRAWS,
    PROPOSITION1_DRAWS,
    PROPOSITION1_INSTANCES,
    SOV_DIRECT_MAX_N,
    SUITE_NAMES,
)
from xxz_maba.utils.bethe import (
    SpectralFunction,
    bethe_vector,
    check_full_offshell,
    check_offshell_transfer,
    check_proposition1,
    check_weight_decomposition,
    closed_value_residual,
    creation_string,
    eigen_branches,
    full_eigenvalue,
    highest_weight_actions,
    modified_diagonal_residual,
    nilpotency_residual,
    off_diagonal_actions,
    solve_bethe,
    spectral_membership,
    tq_residual,
)
from xxz_maba.utils.functions import (
    bit_strings,
    check_identity,
    crossed,
    random_point,
    with_resampling,
)
from xxz_maba.utils.gauge import (
    check_commutation,
    check_gauge_invariant_combination,
    check_linear_relations,
    gauge_vector_residuals,
    gauged_transfer,
)
from xxz_maba.utils.lattice import (
    analytic_constraints,
    commutator_residual,
    k_minus_reflection,
    k_plus_reflection,
    operator_form_residual,
    sklyanin_product_residual,
    sklyanin_relation,
    unitarity_residual,
    yang_baxter_residual,
)
from xxz_maba.utils.linalg import operator_residual, relative_residual
from xxz_maba.utils.params import (
    ModelInstance,
    gauge_dl,
    gauge_dr,
    gauge_generic,
    reparametrization_residual,
    sample_generic,
)
from xxz_maba.utils.sov import (
    bethe_sov_agreement,
    biorthogonality,
    chi_identity_residual,
    eigenstate_residual,
    left_basis_conditioning,
    left_pseudo_eigen_residual,
    projection_check,
    right_pseudo_eigen_residual,
    scalar_product_residuals,
    sov_eigenstate,
    sov_spectrum,
    spectrum_agreement,
    vacuum_overlap,
)

logger = logging.getLogger(__name__)

Evaluation = tuple[float, dict[str, Any]]


@dataclass(frozen=True)
class CheckContext:
    inst: ModelInstance
    rng: np.random.Generator
    m0: int = DEFAULT_M0
    draws: int = DEFAULT_DRAWS


@dataclass(frozen=True)
class Check:
    """A named residual check.

    ``tolerance`` is a base value scaled with the chain length; ``None``
    selects the default tolerance. ``flag_only`` checks always pass and
    mark a residual above tolerance in their details.
    ``draws`` is the sweep size unless the run config overrides it.
    """

    name: str
    suite: str
    anchor: str
    evaluate: Callable[[CheckContext], Evaluation]
    tolerance: float | None = None
    flag_only: bool = False
    max_n: int | None = None
    draws: int = DEFAULT_DRAWS


def _sweep(ctx: CheckContext, evaluate: Callable[[np.random.Generator], float]) -> float:
    return max(with_resampling(evaluate, ctx.rng) for _ in range(ctx.draws))


def _roots(rng: np.random.Generator, count: int) -> tuple[complex, ...]:
    return tuple(random_point(rng) for _ in range(count))


def _frames(ctx: CheckContext):
    inst, m0 = ctx.inst, ctx.m0
    return {
        "dr": gauge_dr(inst, m0),
        "dl": gauge_dl(inst, m0),
        "generic": gauge_generic(inst, ctx.rng, m0),
    }


@functools.lru_cache(maxsize=8)
def solved_branches(inst: ModelInstance, m0: int) -> tuple[SpectralFunction, ...]:
    return tuple(solve_bethe(inst, m0, rng=np.random.default_rng(0)))


@functools.lru_cache(maxsize=8)
def oracle_branches(inst: ModelInstance) -> tuple[SpectralFunction, ...]:
    return tuple(eigen_branches(inst, np.random.default_rng(1)))


# -- algebra -----------------------------------------------------------------


def _yang_baxter(ctx: CheckContext) -> Evaluation:
    q = ctx.inst.q
    return _sweep(ctx, lambda rng: yang_baxter_residual(*_roots(rng, 3), q)), {}


def _unitarity(ctx: CheckContext) -> Evaluation:
    q = ctx.inst.q
    return _sweep(ctx, lambda rng: unitarity_residual(random_point(rng), q)), {}


def _reflection(ctx: CheckContext) -> Evaluation:
    return _sweep(ctx, lambda rng: k_minus_reflection(*_roots(rng, 2), ctx.inst)), {}


def _dual_reflection(ctx: CheckContext) -> Evaluation:
    return _sweep(ctx, lambda rng: k_plus_reflection(*_roots(rng, 2), ctx.inst)), {}


def _reparametrization(ctx: CheckContext) -> Evaluation:
    return reparametrization_residual(ctx.inst), {}


def _commuting_family(ctx: CheckContext) -> Evaluation:
    return _sweep(ctx, lambda rng: commutator_residual(*_roots(rng, 2), ctx.inst)), {}


def _operator_form(ctx: CheckContext) -> Evaluation:
    return _sweep(ctx, lambda rng: operator_form_residual(random_point(rng), ctx.inst)), {}


def _analytic(keys: tuple[str, ...]) -> Callable[[CheckContext], Evaluation]:
    def evaluate(ctx: CheckContext) -> Evaluation:
        report = analytic_constraints(ctx.inst, ctx.rng, points=ctx.draws).as_dict()
        details = {key: report[key] for key in keys}
        return max(details.values()), details

    return evaluate


def _sklyanin(ctx: CheckContext) -> Evaluation:
    details = {f"site_{i}": sklyanin_relation(ctx.inst, i) for i in range(1, ctx.inst.n + 1)}
    return max(details.values()), details


def _sklyanin_product(ctx: CheckContext) -> Evaluation:
    n = ctx.inst.n
    return max(sklyanin_product_residual(ctx.inst, i) for i in range(1, n + 1)), {}


# -- gauge and representation ------------------------------------------------


def _gauge_vectors(ctx: CheckContext) -> Evaluation:
    frames = _frames(ctx)

    def point(rng):
        u, m = random_point(rng), ctx.m0 + int(rng.integers(-2, 3))
        return max(max(gauge_vector_residuals(u, m, f).values()) for f in frames.values())

    return _sweep(ctx, point), {}


def _gauge_independence(ctx: CheckContext) -> Evaluation:
    frames = _frames(ctx)
    details = {}
    for tag, frame in frames.items():

        def point(rng, frame=frame):
            m = ctx.m0 + int(rng.integers(-2, 3))
            return gauged_transfer(random_point(rng), m, frame, ctx.inst).residual

        details[tag] = _sweep(ctx, point)
    return max(details.values()), details


def _commutation(ctx: CheckContext) -> Evaluation:
    frame = gauge_dl(ctx.inst, ctx.m0)

    def point(rng):
        u, v = _roots(rng, 2)
        return max(check_commutation(u, v, ctx.m0, frame, ctx.inst))

    return _sweep(ctx, point), {}


def _linear_relations(ctx: CheckContext) -> Evaluation:
    m0 = ctx.m0
    dr, dl = gauge_dr(ctx.inst, m0), gauge_dl(ctx.inst, m0)
    labels = [(m0, m0), (m0 + 2, m0), (m0, m0 + 2)]

    def point(rng):
        u = random_point(rng)
        return max(max(check_linear_relations(u, p, m, dr, dl, ctx.inst)) for p, m in labels)

    return _sweep(ctx, point), {}


def _gauge_invariant(ctx: CheckContext) -> Evaluation:
    frames = _frames(ctx)

    def point(rng):
        u, m = random_point(rng), ctx.m0 + int(rng.integers(-2, 3))
        return max(
            check_gauge_invariant_combination(u, m, f, ctx.inst) for f in frames.values()
        )

    return _sweep(ctx, point), {}


def _sum_rules(ctx: CheckContext) -> Evaluation:
    frame = gauge_dl(ctx.inst, ctx.m0)
    details = {}
    for size in range(1, 5):

        def point(rng, size=size):
            us, u = _roots(rng, size), random_point(rng)
            m = ctx.m0 + 2 * size
            return max(
                check_identity(name, ctx.inst, frame, us, u, m=m)
                for name in ("FR1", "FR2", "FR3")
            )

        details[f"M={size}"] = _sweep(ctx, point)
    return max(details.values()), details


def _highest_weight(ctx: CheckContext) -> Evaluation:
    return _sweep(
        ctx, lambda rng: max(highest_weight_actions(random_point(rng), ctx.inst, ctx.m0).values())
    ), {}


def _nilpotency(ctx: CheckContext) -> Evaluation:
    n = ctx.inst.n
    return _sweep(
        ctx,
        lambda rng: nilpotency_residual(random_point(rng), _roots(rng, n), ctx.inst, ctx.m0),
    ), {}


def _off_diagonal(ctx: CheckContext) -> Evaluation:
    return _sweep(
        ctx, lambda rng: max(off_diagonal_actions(random_point(rng), ctx.inst, ctx.m0).values())
    ), {}


def _modified_diagonal(ctx: CheckContext) -> Evaluation:
    details = {}
    for size in range(1, ctx.inst.n + 1):

        def point(rng, size=size):
            return modified_diagonal_residual(random_point(rng), ctx.inst, ctx.m0, size)

        details[f"M={size}"] = _sweep(ctx, point)
    return max(details.values()), details


def _weight_decomposition(ctx: CheckContext) -> Evaluation:
    details = check_weight_decomposition(_roots(ctx.rng, ctx.inst.n), ctx.inst, ctx.m0)
    return float(sum(details.values())), details


# -- bethe -------------------------------------------------------------------


def _offshell_transfer(ctx: CheckContext) -> Evaluation:
    details = {}
    for size in range(1, ctx.inst.n + 1):

        def point(rng, size=size):
            return check_offshell_transfer(random_point(rng), _roots(rng, size), ctx.inst, ctx.m0)

        details[f"M={size}"] = _sweep(ctx, point)
    return max(details.values()), details


def _full_offshell(ctx: CheckContext) -> Evaluation:
    n = ctx.inst.n
    return _sweep(
        ctx,
        lambda rng: check_full_offshell(random_point(rng), _roots(rng, n), ctx.inst, ctx.m0),
    ), {}


def _eigenvalue_crossing(ctx: CheckContext) -> Evaluation:
    inst = ctx.inst

    def point(rng):
        u, us = random_point(rng), _roots(rng, inst.n)
        return relative_residual(
            full_eigenvalue(u, us, inst), full_eigenvalue(crossed(u, inst.q), us, inst)
        )

    return _sweep(ctx, point), {}


def _string_symmetry(ctx: CheckContext) -> Evaluation:
    frame = gauge_dl(ctx.inst, ctx.m0)

    def point(rng):
        u1, u2 = _roots(rng, 2)
        return operator_residual(
            creation_string((u1, u2), ctx.m0, frame, ctx.inst),
            creation_string((u2, u1), ctx.m0, frame, ctx.inst),
        )

    return _sweep(ctx, point), {}


def _bethe_roots(ctx: CheckContext) -> Evaluation:
    branches = solved_branches(ctx.inst, ctx.m0)
    details = {
        "branches": len(branches),
        "unrefined": sum(not b.refined for b in branches),
        "roots": [list(b.roots) for b in branches],
    }
    return max(b.bethe_residual for b in branches), details


def _onshell_eigenvector(ctx: CheckContext) -> Evaluation:
    worst = 0.0
    for branch in solved_branches(ctx.inst, ctx.m0):
        psi = bethe_vector(branch.roots, ctx.inst, ctx.m0)
        worst = max(worst, eigenstate_residual(psi, branch, ctx.inst, ctx.rng))
    return worst, {}


def _closed_values(ctx: CheckContext) -> Evaluation:
    branches = solved_branches(ctx.inst, ctx.m0)
    return max(closed_value_residual(b, ctx.inst) for b in branches), {}


def _membership(ctx: CheckContext) -> Evaluation:
    worst = 0.0
    for branch in solved_branches(ctx.inst, ctx.m0):
        for _ in range(3):
            worst = max(worst, spectral_membership(branch, random_point(ctx.rng), ctx.inst))
    return worst, {}


# -- proposition 1 -----------------------------------------------------------


def _proposition1(ctx: CheckContext) -> Evaluation:
    """Sweep on the run instance and on further generic instances of the same length."""
    n = ctx.inst.n
    seeds = [int(s) for s in ctx.rng.integers(0, 2**31, PROPOSITION1_INSTANCES - 1)]
    instances = [ctx.inst] + [sample_generic(seed, n, ctx.m0) for seed in seeds]
    residuals = []
    for inst in instances:

        def point(rng, inst=inst):
            u, us = random_point(rng), _roots(rng, n)
            return max(
                check_proposition1(u, us, inst, ctx.m0),
                check_proposition1(crossed(u, inst.q), us, inst, ctx.m0),
            )

        residuals.append(_sweep(ctx, point))
    return max(residuals), {"seeds": seeds, "residuals": residuals}


def _bitwise_identity(name: str) -> Callable[[CheckContext], Evaluation]:
    def evaluate(ctx: CheckContext) -> Evaluation:
        inst = ctx.inst

        def point(rng):
            us, u = _roots(rng, inst.n), random_point(rng)
            return max(
                check_identity(name, inst, us=us, u=u, h=h) for h in bit_strings(inst.n)
            )

        return _sweep(ctx, point), {}

    return evaluate


def _chi_identity(ctx: CheckContext) -> Evaluation:
    return chi_identity_residual(ctx.inst, ctx.m0), {}


# -- sov ---------------------------------------------------------------------


def _left_label(ctx: CheckContext) -> int:
    return ctx.m0 + 2 * (ctx.inst.n - 1)


def _left_pseudo_eigen(ctx: CheckContext) -> Evaluation:
    m, inst = _left_label(ctx), ctx.inst
    return _sweep(
        ctx,
        lambda rng: max(
            left_pseudo_eigen_residual(h, random_point(rng), m, inst, ctx.m0)
            for h in bit_strings(inst.n)
        ),
    ), {}


def _right_pseudo_eigen(ctx: CheckContext) -> Evaluation:
    m, inst = _left_label(ctx) + 2, ctx.inst
    return _sweep(
        ctx,
        lambda rng: max(
            right_pseudo_eigen_residual(h, random_point(rng), m, inst, ctx.m0)
            for h in bit_strings(inst.n)
        ),
    ), {}


def _left_basis(ctx: CheckContext) -> Evaluation:
    conditioning = left_basis_conditioning(_left_label(ctx), ctx.inst, ctx.m0)
    return 1e-6 / conditioning, {"conditioning": conditioning}


def _vacuum_overlap(ctx: CheckContext) -> Evaluation:
    m0 = ctx.m0
    labels = (m0 - 4, m0 - 2, m0, _left_label(ctx))
    details = {f"m={m}": vacuum_overlap(m, m0, ctx.inst).residual for m in labels}
    return max(details.values()), details


def _scalar_products(ctx: CheckContext) -> Evaluation:
    m = _left_label(ctx)
    worst = max(
        max(scalar_product_residuals(h, m, ctx.inst, ctx.m0).values())
        for h in bit_strings(ctx.inst.n)
    )
    return worst, {}


def _projections(ctx: CheckContext) -> Evaluation:
    inst = ctx.inst

    def point(rng):
        u, us = random_point(rng), _roots(rng, inst.n)
        return max(max(projection_check(u, us, h, inst, ctx.m0)) for h in bit_strings(inst.n))

    return _sweep(ctx, point), {}


def _biorthogonality(ctx: CheckContext) -> Evaluation:
    report = biorthogonality(_left_label(ctx), ctx.inst, ctx.m0)
    return report.off_diagonal, {"measure_mismatch": report.measure_mismatch}


# -- spectrum and tq ---------------------------------------------------------


def _branch_count(ctx: CheckContext) -> Evaluation:
    count = len(solved_branches(ctx.inst, ctx.m0))
    return float(abs(count - ctx.inst.dim)), {"branches": count}


def _oracle_bethe(ctx: CheckContext) -> Evaluation:
    u = random_point(ctx.rng)
    oracle = oracle_branches(ctx.inst)
    return spectrum_agreement(oracle, solved_branches(ctx.inst, ctx.m0), u), {}


def _sov_oracle(ctx: CheckContext) -> Evaluation:
    result = sov_spectrum(ctx.inst, np.random.default_rng(2))
    u = random_point(ctx.rng)
    residual = spectrum_agreement(result.branches, oracle_branches(ctx.inst), u)
    details = {
        "strategy": result.strategy,
        "branches": len(result.branches),
        "failures": result.failures,
        "q": ctx.inst.q,
        "v": list(ctx.inst.v),
    }
    return residual, details


def _sov_eigenstates(ctx: CheckContext) -> Evaluation:
    worst = 0.0
    for branch in solved_branches(ctx.inst, ctx.m0):
        state = sov_eigenstate(branch, ctx.inst, m0=ctx.m0)
        worst = max(worst, eigenstate_residual(state, branch, ctx.inst, ctx.rng))
    return worst, {}


def _bethe_sov(ctx: CheckContext) -> Evaluation:
    details = {"state": 0.0, "projection": 0.0}
    for branch in solved_branches(ctx.inst, ctx.m0):
        for key, value in bethe_sov_agreement(branch, ctx.inst, ctx.m0).items():
            details[key] = max(details[key], value)
    return max(details.values()), details


def _tq(ctx: CheckContext) -> Evaluation:
    branches = solved_branches(ctx.inst, ctx.m0)
    residuals = [tq_residual(b, ctx.inst, ctx.rng) for b in branches]
    return max(residuals), {"branches": residuals}


_ENUM = ENUMERATION_MAX_N

CATALOGUE: tuple[Check, ...] = (
    # algebra
    Check(
        "yang_baxter", "algebra", "§2, Eq. (R)", _yang_baxter, 1e-12, draws=FOUNDATION_DRAWS
    ),
    Check("unitarity", "algebra", "§2, Eq. (R)", _unitarity, 1e-12),
    Check(
        "reflection", "algebra", "§2, Eq. (Km)", _reflection, 1e-12, draws=FOUNDATION_DRAWS
    ),
    Check(
        "dual_reflection",
        "algebra",
        "§2, Eq. (Kp)",
        _dual_reflection,
        1e-12,
        draws=FOUNDATION_DRAWS,
    ),
    Check("reparametrization", "algebra", "§2, Eq. (NpKm)", _reparametrization, 1e-12),
    Check("commuting_family", "algebra", "§2, Eq. (tr)", _commuting_family),
    Check("operator_form", "algebra", "§2, Eq. (KO)", _operator_form, 1e-12),
    Check(
        "parity_crossing", "algebra", "§6, Eq. (parityt)", _analytic(("parity", "crossing"))
    ),
    Check("closed_values", "algebra", "§6, Eqs. (t1), (ti)", _analytic(("t_one", "t_i"))),
    Check("asymptotics", "algebra", "§6, Eq. (tinf)", _analytic(("asymptotic",)), 1e-6),
    Check(
        "polynomiality",
        "algebra",
        "§6.2, Eq. (inter)",
        _analytic(("held_out", "top_coefficient")),
        1e-8,
    ),
    Check("sklyanin", "algebra", "§6, Eq. (qdetKK)", _sklyanin),
    Check("sklyanin_product", "algebra", "§6.1, Eq. (mTQ)", _sklyanin_product),
    # gauge
    Check("gauge_vectors", "gauge", "§2, Eq. (Scal-prod)", _gauge_vectors, 1e-12),
    Check("gauge_independence", "gauge", "§2, Eq. (t)", _gauge_independence),
    Check("commutation", "gauge", "§3, Eqs. (comAdBd), (comDdBd)", _commutation),
    Check("linear_relations", "gauge", "§3", _linear_relations),
    Check("gauge_invariant_combination", "gauge", "§2, Eq. (td)", _gauge_invariant),
    Check(
        "sum_rules",
        "gauge",
        "App. A, Eqs. (FR1), (FR2), (FR3)",
        _sum_rules,
        draws=EXCHANGE_RULE_DRAWS,
    ),
    Check("highest_weight", "gauge", "§3, Eq. (actDhwv)", _highest_weight),
    Check("nilpotency", "gauge", "§3", _nilpotency),
    Check("off_diagonal_actions", "gauge", "§3, Eqs. (ODactA), (ODactD)", _off_diagonal),
    Check("modified_diagonal", "gauge", "§3, Eq. (tm)", _modified_diagonal),
    Check(
        "weight_decomposition", "gauge", "§3, Eq. (vecBase)", _weight_decomposition, 0.0
    ),
    # bethe
    Check("offshell_transfer", "bethe", "§4, Eq. (tdPsi)", _offshell_transfer),
    Check(
        "full_offshell", "bethe", "§4, Eq. (tronBV)", _full_offshell, draws=OFFSHELL_DRAWS
    ),
    Check("eigenvalue_crossing", "bethe", "§6, Eq. (parityt)", _eigenvalue_crossing),
    Check("string_symmetry", "bethe", "§3, Eq. (comBdBd)", _string_symmetry),
    Check("bethe_roots", "bethe", "§4, Eq. (VP-BE)", _bethe_roots, 1e-8, max_n=_ENUM),
    Check(
        "onshell_eigenvector",
        "bethe",
        "§4, Eq. (Psi)",
        _onshell_eigenvector,
        1e-7,
        max_n=_ENUM,
    ),
    Check(
        "branch_closed_values",
        "bethe",
        "§6, Eqs. (t1), (ti)",
        _closed_values,
        1e-8,
        max_n=_ENUM,
    ),
    Check(
        "spectral_membership", "bethe", "§4, Eq. (LamE)", _membership, 1e-8, max_n=_ENUM
    ),
    # proposition1
    Check(
        "proposition1",
        "proposition1",
        "Prop. 1, Eq. (offshellB)",
        _proposition1,
        draws=PROPOSITION1_DRAWS,
    ),
    Check(
        "functional_system",
        "proposition1",
        "§5, Eq. (functionalsystem1)",
        _bitwise_identity("functionalsystem1"),
    ),
    Check(
        "offshell_projection_identity",
        "proposition1",
        "§5, Eq. (offshellBV4)",
        _bitwise_identity("offshellBV4"),
    ),
    Check("chi_identity", "proposition1", "§5, Eq. (scalarfinal)", _chi_identity),
    # sov
    Check("left_pseudo_eigen", "sov", "§5, Eq. (leftSoV)", _left_pseudo_eigen),
    Check("right_pseudo_eigen", "sov", "§6.3", _right_pseudo_eigen),
    Check("left_basis", "sov", "§5, Eq. (leftSoV)", _left_basis, 1.0),
    Check("vacuum_overlap", "sov", "§5, Eq. (scalarfinal)", _vacuum_overlap),
    Check("scalar_products", "sov", "§5, Eq. (scalarinit)", _scalar_products),
    Check("projections", "sov", "§5, Eqs. (proj1), (proj2)", _projections),
    Check("biorthogonality", "sov", "§6.3, Eq. (ortho)", _biorthogonality),
    # spectrum
    Check("branch_count", "spectrum", "§6.2", _branch_count, 0.0, max_n=_ENUM),
    Check("oracle_bethe", "spectrum", "§4, Eq. (VP-BE)", _oracle_bethe, 1e-7, max_n=_ENUM),
    Check(
        "sov_oracle",
        "spectrum",
        "§6.2, Eq. (inter)",
        _sov_oracle,
        1e-7,
        flag_only=True,
        max_n=SOV_DIRECT_MAX_N,
    ),
    Check("sov_eigenstates", "spectrum", "§6.3", _sov_eigenstates, 1e-8, max_n=_ENUM),
    Check("bethe_sov", "spectrum", "§6.3, Eq. (ortho)", _bethe_sov, 1e-7, max_n=_ENUM),
    # tq
    Check("tq", "tq", "§6.1, Eq. (mTQ)", _tq, 1e-8, max_n=_ENUM),
)


def checks_for(suites, n: int) -> list[Check]:
    """Checks of the given suites in suite order, skipping those beyond their chain length."""
    selected = []
    for suite in SUITE_NAMES:
        if suite not in suites:
            continue
        for check in CATALOGUE:
            if check.suite != suite:
                continue
            if check.max_n is not None and n > check.max_n:
                logger.info(f"Skipping {check.name} for N={n} (supported up to {check.max_n})")
                continue
            selected.append(check)
    return selected
