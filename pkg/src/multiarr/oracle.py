"""Brute-force ground truth for ``D(A, m)`` by exact linear algebra.

The degree-``d`` piece of ``D(A, m)`` is the nullspace of an integer matrix
acting on the ``2 (d + 1)`` coefficients of ``f`` and ``g``.  For a form
``alpha = a x + b y`` (scaled to primitive integers) we expand ``theta(alpha)``
at the point ``s (-b, a) + t (a, b)``; there ``alpha`` equals
``(a**2 + b**2) t``, so ``alpha ** k`` divides ``theta(alpha)`` exactly when the
coefficients of ``t**0 .. t**(k-1)`` vanish.  These conditions do not go
through ``poly.rem_mod_linpow``, which keeps the oracle independent of the
membership test it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm
from typing import Sequence

from . import kernels
from .arrangement import Derivation, ExponentPair, Multiarrangement
from .poly import HomoPoly


@dataclass(frozen=True)
class GradedPieceBasis:
    degree: int
    basis: tuple[Derivation, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _binomial_row(n: int, s_coef: int, t_coef: int) -> list[int]:
    # (s_coef * s + t_coef * t) ** n, indexed by the exponent of t
    return [comb(n, i) * s_coef ** (n - i) * t_coef ** i for i in range(n + 1)]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        return [v // g for v in row]
    return row


@lru_cache(maxsize=None)
def _form_conditions(a: int, b: int, k: int, d: int) -> tuple[tuple[int, ...], ...]:
    # M[t][j] = coeff of t**t in (-b s + a t)**(d - j) * (a s + b t)**j
    cols = [
        kernels.convolve(_binomial_row(d - j, -b, a), _binomial_row(j, a, b))
        for j in range(d + 1)
    ]
    rows = []
    for t in range(min(k, d + 1)):
        mrow = [cols[j][t] for j in range(d + 1)]
        rows.append(tuple(_primitive([a * v for v in mrow] + [b * v for v in mrow])))
    return tuple(rows)


def condition_matrix(arr: Multiarrangement, m: Sequence[int], d: int) -> list[list[int]]:
    """Integer matrix whose nullspace is ``D(A, m)_d`` in canonical coordinates."""
    m = arr.check(m)
    rows: list[list[int]] = []
    for form, k in zip(arr.forms, m):
        if k:
            a, b = form.integral()
            rows.extend(list(r) for r in _form_conditions(a, b, k, d) if any(r))
    return rows


def _nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Nullspace basis in reduced row echelon form (leading entries 1).

    Eliminating with the columns reversed makes each standard nullspace
    vector start, in the original order, at its free column.
    """
    rev = [r[::-1] for r in rows]
    reduced, pivots, den = kernels.ff_gauss_jordan(rev, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols - 1, -1, -1):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            if row[free]:
                v[p] = Fraction(-row[free], den)
        basis.append(v[::-1])
    return basis


def _rank(rows: list[list[Fraction]], ncols: int) -> int:
    ints = []
    for r in rows:
        den = lcm(*(c.denominator for c in r))
        ints.append([int(c * den) for c in r])
    return len(kernels.ff_gauss_jordan(ints, ncols)[1])


@lru_cache(maxsize=4096)
def _graded_piece(arr: Multiarrangement, m: tuple[int, ...], d: int) -> GradedPieceBasis:
    n = 2 * (d + 1)
    vecs = _nullspace(condition_matrix(arr, m, d), n)
    return GradedPieceBasis(d, tuple(Derivation.from_vector(d, v) for v in vecs))


def graded_piece(arr: Multiarrangement, m: Sequence[int], d: int) -> GradedPieceBasis:
    """Rational basis of the degree-``d`` piece of ``D(A, m)``."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return _graded_piece(arr, arr.check(m), d)


def exponents(arr: Multiarrangement, m: Sequence[int]) -> ExponentPair:
    m = arr.check(m)
    total = sum(m)
    for d in range(total + 1):
        if graded_piece(arr, m, d).dimension:
            return ExponentPair(*sorted((d, total - d)))
    raise RuntimeError(f"no nonzero derivation up to degree {total} for m={m}")


def complete_basis(
    arr: Multiarrangement, m: Sequence[int], theta1: Derivation, degree: int
) -> Derivation:
    """First element of ``D(A, m)_degree`` outside ``S_{degree - deg theta1} * theta1``."""
    k = degree - theta1.degree
    if k < 0:
        raise ValueError("target degree below the given generator")
    ncols = 2 * (degree + 1)
    multiples = [
        list((HomoPoly.monomial(1, k - j, j) * theta1).vector()) for j in range(k + 1)
    ]
    base_rank = _rank(multiples, ncols)
    for cand in graded_piece(arr, m, degree).basis:
        if _rank(multiples + [list(cand.vector())], ncols) > base_rank:
            return cand
    raise RuntimeError(f"degree-{degree} piece of D(A, {tuple(m)}) adds nothing to theta1")


def oracle_basis(arr: Multiarrangement, m: Sequence[int]) -> tuple[Derivation, Derivation]:
    m = arr.check(m)
    e1, e2 = exponents(arr, m)
    theta1 = graded_piece(arr, m, e1).basis[0]
    return theta1, complete_basis(arr, m, theta1, e2)


def graded_dimension_profile(
    arr: Multiarrangement, m: Sequence[int], d_max: int
) -> list[int]:
    return [graded_piece(arr, m, d).dimension for d in range(d_max + 1)]


def free_dimension(exps: ExponentPair, d: int) -> int:
    """Dimension of the degree-``d`` piece of a free module with these exponents."""
    return max(0, d - exps.e1 + 1) + max(0, d - exps.e2 + 1)
