"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed at the end
of the pytest run (see ``conftest.py``) and also when this file is executed
directly with ``python3 -m tests.test_acceptance``.  All comparisons are exact.
"""

import json
import random
from fractions import Fraction

from multiarr import closedform as cf
from multiarr.a2 import scalar_ratio, theta_prime, wakamiko_fixtures
from multiarr.arrangement import B2, apply, determinant_ratio, is_balanced, is_member, saito_check
from multiarr.cli import main
from multiarr.errors import CaseNotCovered
from multiarr.oracle import exponents, free_dimension, graded_dimension_profile
from multiarr.poly import linpow
from multiarr.render import derivation_from_json, derivation_to_json, parse_derivation
from multiarr.verify import b2_multiplicities

from .fixtures import THETA_EXAMPLES, THETA_PRIME_EXAMPLES

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    RESULTS[number] = line
    print(line)
    assert ok, line


def admissible(max_sum):
    for m in b2_multiplicities(max_sum):
        if cf.B2Multiplicity.of(m).admissible:
            yield m


def test_criterion_01_b2_examples():
    bad = [m for m, f, g in THETA_EXAMPLES if cf.theta_m(m) != parse_derivation(f, g)]
    record(1, "B2 printed derivations reproduced", len(THETA_EXAMPLES) == 19 and not bad,
           f"{len(THETA_EXAMPLES) - len(bad)}/19 equal")


def test_criterion_02_a2_examples():
    bad = [m for m, f, g in THETA_PRIME_EXAMPLES if theta_prime(m) != parse_derivation(f, g)]
    ratios = [scalar_ratio(t, theta_prime(m)) for m, t, _ in wakamiko_fixtures()]
    expected = [Fraction(r) for r in
                ("-3/2", "15/2", "15", "-105/2", "-2625/4", "945/2", "-315/4", "46305", "-10395/2", "15435")]
    ok = len(THETA_PRIME_EXAMPLES) == 10 and not bad and ratios == expected
    record(2, "A2 printed derivations and scalar ratios reproduced", ok,
           f"{10 - len(bad)}/10 derivations, ratios {'match' if ratios == expected else ratios}")


def test_criterion_03_membership_sweep():
    checked, failed = 0, []
    for m in admissible(32):
        if all(2 * v <= sum(m) + 2 for v in m):
            checked += 1
            if not is_member(cf.theta_m(m), B2, m):
                failed.append(m)
    record(3, "theta_m in D(B2, m) for |m| <= 32", checked > 0 and not failed,
           f"{checked} multiplicities, {len(failed)} failures")


def test_criterion_04_oracle_concordance():
    n = n_diff = n_nb = 0
    failed = []
    for m in b2_multiplicities(16):
        n += 1
        e = exponents(B2, m)
        if e.e1 + e.e2 != sum(m):
            failed.append((m, "sum"))
        try:
            diff = cf.exponent_difference(m)
        except CaseNotCovered:
            pass
        else:
            n_diff += 1
            if diff != e.e2 - e.e1:
                failed.append((m, "difference"))
        if not is_balanced(m):
            n_nb += 1
            k = max(m)
            if tuple(e) != (sum(m) - k, k):
                failed.append((m, "non-balanced"))
    record(4, "oracle exponents agree with predictions for |m| <= 16", not failed and n_diff and n_nb,
           f"{n} tuples, {n_diff} difference predictions, {n_nb} non-balanced, {len(failed)} failures")


def test_criterion_05_basis_validity():
    n, failed = 0, []
    for m in b2_multiplicities(20):
        bm = cf.B2Multiplicity.of(m)
        if not bm.balanced:
            continue
        pairs = []
        if bm.admissible:
            pairs.append(cf.main_basis(m)[:2])
        try:
            pairs.append(cf.cor_Q_basis(m))
        except CaseNotCovered:
            pass
        for t1, t2 in pairs:
            n += 1
            c = determinant_ratio(t1, t2, B2, m)
            if not saito_check(t1, t2, B2, m) or c is None or c == 0:
                failed.append(m)
    record(5, "main and case-table bases pass the Saito check for |m| <= 20", n > 0 and not failed,
           f"{n} bases, {len(failed)} failures")


def test_criterion_06_recursions():
    nb = nd = 0
    failed = []
    for m in admissible(28):
        bm = cf.B2Multiplicity.of(m)
        if not bm.balanced:
            continue
        nd += 1
        if not cf.check_lemma_D(m):
            failed.append((m, "D"))
        if bm.m1 == 1:
            nb += 1
            if not cf.check_lemma_B(m):
                failed.append((m, "B"))
    record(6, "recursion identities B and D for |m| <= 28", nb and nd and not failed,
           f"{nb} B cases, {nd} D cases, {len(failed)} failures")


def test_criterion_07_non_divisibility():
    ms = [m for m in admissible(24) if is_balanced(m)]
    failed = [m for m in ms if not cf.check_cor_P(m)]
    record(7, "no arrangement form divides theta_m for |m| <= 24", ms and not failed,
           f"{len(ms)} multiplicities, {len(failed)} failures")


def test_criterion_08_specialization():
    failed = []
    for d in (1, 3, 5, 7, 9):
        theta = cf.theta_m((1, 1, d, d))
        c = Fraction((-1) ** ((d - 1) // 2), cf.double_factorial(d - 1) * d)
        for form in (cf.X_MINUS_Y, cf.X_PLUS_Y):
            if apply(theta, form) != c * linpow(form, d):
                failed.append((d, str(form)))
        if not cf.check_lemma_A(d):
            failed.append((d, "check"))
    record(8, "theta_(1,1,d,d) on x - y and x + y for d = 1..9 odd", not failed,
           f"{len(failed)} failures")


def test_criterion_09_profiles():
    rng = random.Random(2024)
    samples = []
    while len(samples) < 50:
        m = tuple(rng.randint(0, 7) for _ in range(4))
        if 1 <= sum(m) <= 14:
            samples.append(m)
    failed = []
    for m in samples:
        e = exponents(B2, m)
        if graded_dimension_profile(B2, m, sum(m)) != [free_dimension(e, d) for d in range(sum(m) + 1)]:
            failed.append(m)
    record(9, "graded dimensions match the free-module formula on 50 random m", not failed,
           f"{len(failed)} failures")


def test_criterion_10_cli(capsys):
    failed = []
    for m, f, g in THETA_EXAMPLES + THETA_PRIME_EXAMPLES:
        theta = parse_derivation(f, g)
        if derivation_from_json(json.loads(json.dumps(derivation_to_json(theta)))) != theta:
            failed.append(m)
        what = "theta" if len(m) == 4 else "theta-prime"
        if main(["emit", what, ",".join(map(str, m)), "--format", "json"]) != 0:
            failed.append(m)
            continue
        if derivation_from_json(json.loads(capsys.readouterr().out)) != theta:
            failed.append(m)
    code = main(["verify", "--max-sum", "16"])
    summary = capsys.readouterr().out.strip().splitlines()
    ok = not failed and code == 0 and summary[-1] == "OK"
    record(10, "CLI emit/parse round trip and verify --max-sum 16", ok,
           f"{len(failed)} round-trip failures, verify exit {code}")


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
