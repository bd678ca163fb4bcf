"""Cross-module verification battery.

Each check recomputes a quantity two independent ways, or compares a bound with exhaustive
truth, and records the outcome in a :class:`VerificationReport`.
"""

import logging
from collections.abc import Callable
from typing import Optional

from ..algebra.semigroup import lgm_bound
from ..codes.bounds import (
    BoundTable,
    goppa_dominance_report,
    lambda_star_size_castle,
)
from ..codes.chain import bound_table_for, build_chain, exact_distance_castle
from ..config import get_settings
from ..curves.base_curve import BaseCurve
from ..decoding.feng_rao import dual_basis
from ..errors import CastleCodesError
from ..models.oracle_models import VerificationReport
from .brute_force import brute_min_distance
from .generic_basis import analyze

logger = logging.getLogger(__name__)

Check = Callable[[], tuple[bool, str]]


def _run(report: VerificationReport, name: str, check: Check) -> None:
    try:
        passed, detail = check()
    except CastleCodesError as exc:
        passed, detail = False, str(exc)
    logger.info(f"{report.model}: {name} {'passed' if passed else 'FAILED'} {detail}")
    report.add(name, passed, detail)


def _first_mismatch(left: list[int], right: list[int]) -> str:
    for index, (a, b) in enumerate(zip(left, right), start=1):
        if a != b:
            return f"first mismatch at {index}: {a} != {b}"
    return f"{len(left)} values agree" if len(left) == len(right) else "lengths differ"


def _semigroup_checks(report: VerificationReport, curve: BaseCurve, table: BoundTable) -> None:
    H, n, g = curve.semigroup, curve.n, curve.genus
    M = list(table.dimension_set)

    _run(report, "castle", lambda: (curve.is_castle(), f"H={list(H.generators)}, n={n}"))

    def lgm() -> tuple[bool, str]:
        bound = lgm_bound(H, curve.field.q)
        return bound.lgm == n + 1 == bound.lewittes, f"lgm={bound.lgm}, n+1={n + 1}"

    _run(report, "lgm_bound", lgm)

    def symmetry() -> tuple[bool, str]:
        mirrored = [n + 2 * g - 1 - M[r] for r in range(n)]
        return mirrored == M[::-1], _first_mismatch(mirrored, M[::-1])

    _run(report, "dimension_set_symmetry", symmetry)

    def castle_formula() -> tuple[bool, str]:
        formula = [lambda_star_size_castle(H, M, i) for i in range(1, n + 1)]
        direct = list(table.lambda_sizes)
        return formula == direct, _first_mismatch(formula, direct)

    _run(report, "lambda_castle_formula", castle_formula)

    def nstar_duality() -> tuple[bool, str]:
        mirrored = [table.nstar_sizes[n - r] for r in range(1, n + 1)]
        direct = list(table.lambda_sizes)
        return mirrored == direct, _first_mismatch(mirrored, direct)

    _run(report, "nstar_duality", nstar_duality)

    def dominance() -> tuple[bool, str]:
        entries = goppa_dominance_report(table)
        improved = [e.m for e in entries if e.improves]
        sound = all(e.order_bound >= e.goppa_bound for e in entries)
        return sound, f"improvements at m={improved}"

    _run(report, "goppa_dominance", dominance)


def _concrete_checks(
    report: VerificationReport, curve: BaseCurve, table: BoundTable, brute_cap: int
) -> None:
    points = curve.enumerate_points()
    n = curve.n
    v2 = curve.semigroup.multiplicity

    _run(
        report,
        "points_on_curve",
        lambda: (all(curve.satisfies(P) for P in points), f"{len(points)} points"),
    )

    def fibers() -> tuple[bool, str]:
        sizes = {len(indices) for indices in curve.x_fibers().values()}
        count = len(curve.x_fibers())
        return sizes == {v2} and count == curve.field.q, f"{count} fibers of sizes {sorted(sizes)}"

    _run(report, "x_fibers", fibers)

    chain = build_chain(curve)

    def rank_scan() -> tuple[bool, str]:
        scanned = chain.rank_dimension_set()
        return tuple(scanned) == chain.dimension_set, f"|M|={len(scanned)}"

    _run(report, "dimension_set_rank_scan", rank_scan)

    def pattern() -> tuple[bool, str]:
        h, x = dual_basis(chain)
        zeros = all(
            not chain.basis[i].dot(h[j]) for i in range(n) for j in range(n) if i + j + 2 <= n
        )
        return zeros, f"x={list(x)}"

    _run(report, "dual_basis_pattern", pattern)

    analysis = analyze(chain.basis_matrix)

    def generic_sets() -> tuple[bool, str]:
        lam = analysis.lambda_sizes()
        ns = analysis.n_sizes()
        same = lam == list(table.lambda_sizes) and ns == list(table.nstar_sizes)
        return same, _first_mismatch(lam, list(table.lambda_sizes))

    _run(report, "generic_basis_sizes", generic_sets)

    def soundness() -> tuple[bool, str]:
        checked, exact = 0, 0
        for k in range(1, n + 1):
            if curve.field.q**k > brute_cap:
                break
            code = chain.code_of_dimension(k)
            d = brute_min_distance(code.generator, cap=brute_cap)
            m_k = chain.dimension_set[k - 1]
            if not n - m_k <= table.d_ord(k) <= d:
                return False, f"k={k}: n-m={n - m_k}, d_ORD={table.d_ord(k)}, d={d}"
            closed = exact_distance_castle(code)
            if closed is not None:
                if closed != d:
                    return False, f"k={k}: closed form {closed} but d={d}"
                exact += 1
            checked += 1
        return True, f"{checked} codes swept, {exact} closed forms confirmed"

    _run(report, "bound_soundness", soundness)


def verify_model(curve: BaseCurve, brute_cap: Optional[int] = None) -> VerificationReport:
    """Run every applicable check against ``curve``."""
    report = VerificationReport(model=curve.label)
    cap = get_settings().brute_force_cap if brute_cap is None else brute_cap
    try:
        table = bound_table_for(curve)
    except CastleCodesError as exc:
        report.add("dimension_set", False, str(exc))
        return report
    report.add("dimension_set", True, f"|M|={table.n}")
    _semigroup_checks(report, curve, table)
    if curve.is_concrete:
        _concrete_checks(report, curve, table, cap)
    logger.info(f"Verification of {curve.label}: {'passed' if report.passed else 'failed'}")
    return report


__all__ = ["verify_model"]
