"""Cross-checks of the closed forms against the oracle over a range of B2
multiplicities."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Iterator

from . import closedform as cf
from .arrangement import B2, is_balanced, is_member, non_balanced_basis, saito_check
from .errors import CaseNotCovered
from .oracle import exponents


def b2_multiplicities(max_sum: int) -> Iterator[tuple[int, int, int, int]]:
    """All 4-tuples of naturals with sum at most ``max_sum``, sorted."""
    for m in product(range(max_sum + 1), repeat=4):
        if sum(m) <= max_sum:
            yield m


def _basis_ok(t1, t2, m, exps) -> bool:
    return (
        saito_check(t1, t2, B2, m)
        and sorted((t1.degree, t2.degree)) == list(exps)
    )


def check_multiplicity(m: tuple[int, ...]) -> dict[str, bool]:
    """Run every check whose hypotheses hold at ``m``; map check name to outcome."""
    res: dict[str, bool] = {}
    total = sum(m)
    exps = exponents(B2, m)
    res["exponent_sum"] = exps.e1 + exps.e2 == total
    bm = cf.B2Multiplicity.of(m)

    if not is_balanced(m):
        k = max(m)
        res["non_balanced_exponents"] = tuple(exps) == (total - k, k)
        t1, t2, _ = non_balanced_basis(B2, m)
        res["non_balanced_basis"] = _basis_ok(t1, t2, m, exps)

    if bm.admissible and all(2 * v <= total + 2 for v in m):
        res["theta_membership"] = is_member(cf.theta_m(m), B2, m)
        if bm.m2 == bm.m1 + 2 * bm.m3 + 2:
            res["lemma_F"] = cf.check_lemma_F(m)

    if bm.admissible and bm.balanced:
        t1, t2, pair = cf.main_basis(m)
        res["main_basis"] = _basis_ok(t1, t2, m, exps) and pair == exps
        res["cor_P"] = cf.check_cor_P(m)
        res["lemma_D"] = cf.check_lemma_D(m)
        if bm.m1 == 1:
            res["lemma_B"] = cf.check_lemma_B(m)

    if bm.balanced:
        try:
            diff = cf.exponent_difference(m)
        except CaseNotCovered:
            pass
        else:
            res["exponent_difference"] = diff == exps.e2 - exps.e1
        try:
            t1, t2 = cf.cor_Q_basis(m)
        except CaseNotCovered:
            pass
        else:
            res["cor_Q_basis"] = _basis_ok(t1, t2, m, exps)
    return res


def sweep(max_sum: int, jobs: int = 1) -> list[tuple[tuple[int, ...], dict[str, bool]]]:
    ms = list(b2_multiplicities(max_sum))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_multiplicity, ms, chunksize=32))
    else:
        results = [check_multiplicity(m) for m in ms]
    return sorted(zip(ms, results))
