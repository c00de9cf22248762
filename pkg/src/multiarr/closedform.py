"""Explicit bases for the B2 multiarrangement ``x, y, x - y, x + y``.

The central object is ``theta_m`` for ``m = (m1, m2, m3, m3)`` with ``m1, m2``
odd and ``|m|`` divisible by four.  Its coefficients are finite sums of
double Pochhammer ratios; everything else here (the main basis, the case
table of further bases, the recursion identities) is assembled from it.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import NamedTuple, Sequence

from .arrangement import (
    B2,
    Derivation,
    ExponentPair,
    flip_y,
    is_balanced,
    saito_determinant,
    swap_xy,
)
from .errors import CaseNotCovered, DomainError, HypothesisViolation
from .poly import HomoPoly, LinearForm, X, Y, divides, linpow, mul

X_MINUS_Y = LinearForm(1, -1)
X_PLUS_Y = LinearForm(1, 1)


def double_factorial(n: int) -> int:
    if n < -1:
        raise DomainError(f"double factorial undefined for {n}")
    return prod(range(n, 0, -2)) if n > 0 else 1


def double_pochhammer(a: int, n: int) -> int:
    """``a (a + 2) ... (a + 2 (n - 1))``; the empty product for ``n == 0``."""
    if n < 0:
        raise DomainError(f"length must be non-negative, got {n}")
    return prod(a + 2 * i for i in range(n))


class B2Multiplicity(NamedTuple):
    m1: int
    m2: int
    m3: int
    m4: int

    @classmethod
    def of(cls, m: Sequence[int]) -> B2Multiplicity:
        if isinstance(m, cls):
            return m
        m = tuple(int(v) for v in m)
        if len(m) != 4:
            raise HypothesisViolation(f"B2 multiplicities have four entries, got {m}")
        if any(v < 0 for v in m):
            raise HypothesisViolation(f"negative multiplicity in {m}")
        return cls(*m)

    @property
    def total(self) -> int:
        return self.m1 + self.m2 + self.m3 + self.m4

    @property
    def odd12(self) -> bool:
        return self.m1 % 2 == 1 and self.m2 % 2 == 1

    @property
    def symmetric(self) -> bool:
        return self.m3 == self.m4

    @property
    def balanced(self) -> bool:
        return is_balanced(self)

    @property
    def admissible(self) -> bool:
        """Domain of ``theta_m``: m3 = m4, m1 and m2 odd, ``|m|`` divisible by 4."""
        return self.symmetric and self.odd12 and self.total % 4 == 0

    def shifted(self, delta: Sequence[int]) -> tuple[int, ...]:
        return tuple(v + dv for v, dv in zip(self, delta))


def _theta_terms(m1: int, m2: int, m3: int):
    """Terms ``(coeff, xexp, yexp)`` of ``f_m`` and ``g_m`` for ``m = (m1, m2, m3, m3)``.

    Works formally for ``m1`` or ``m2`` equal to ``-1``, in which case a term
    with exponent ``-1`` can appear; callers multiply such results by ``x`` or
    ``y`` before turning them into polynomials.  A sum whose upper bound is
    negative is empty.
    """
    d = (m1 + m2 + 2 * m3) // 2 - 1
    a = m1 + m2 - d
    f_terms, g_terms = [], []
    if d - m1 >= 0:
        top = (d - m1) // 2
        for i in range(top + 1):
            c = Fraction(
                (-1) ** i * double_pochhammer(a, top - i),
                double_factorial(d - m1 - 2 * i)
                * double_factorial(d - 2 * i)
                * double_factorial(2 * i),
            )
            f_terms.append((c, d - 2 * i, 2 * i))
    if d - m2 >= 0:
        top = (d - m2) // 2
        for i in range(top + 1):
            c = Fraction(
                (-1) ** (i + m3) * double_pochhammer(a, top - i),
                double_factorial(d - m2 - 2 * i)
                * double_factorial(d - 2 * i)
                * double_factorial(2 * i),
            )
            g_terms.append((c, 2 * i, d - 2 * i))
    return d, f_terms, g_terms


def _check_admissible(m: B2Multiplicity) -> None:
    if not m.admissible:
        raise HypothesisViolation(
            f"{tuple(m)}: need m3 = m4, m1 and m2 odd, and |m| divisible by 4"
        )


def f_m(m: Sequence[int]) -> HomoPoly:
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    d, f_terms, _ = _theta_terms(m.m1, m.m2, m.m3)
    return HomoPoly.from_terms(d, f_terms)


def g_m(m: Sequence[int]) -> HomoPoly:
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    d, _, g_terms = _theta_terms(m.m1, m.m2, m.m3)
    return HomoPoly.from_terms(d, g_terms)


def theta_m(m: Sequence[int]) -> Derivation:
    """``f_m d/dx - g_m d/dy``, of degree ``|m|/2 - 1``."""
    return Derivation(f_m(m), -g_m(m))


def main_basis(m: Sequence[int]) -> tuple[Derivation, Derivation, ExponentPair]:
    """``(theta_m, theta_{m + (2, 2, 0, 0)})`` for balanced admissible ``m``."""
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    if not m.balanced:
        raise HypothesisViolation(f"{tuple(m)} is not balanced")
    d = m.total // 2 - 1
    upper = theta_m(m.shifted((2, 2, 0, 0)))
    return theta_m(m), upper, ExponentPair(d, d + 2)


# Recursion identities


class RecursionScalars(NamedTuple):
    b0: Fraction
    d0: Fraction
    e: Fraction
    d: int


def _x2_minus_y2() -> HomoPoly:
    return HomoPoly(2, (1, 0, -1))


def lemma_B_scalars(m: Sequence[int]) -> RecursionScalars:
    """Scalars of ``e theta_{m''} = b0 theta_{m'} - d0 (x^2 - y^2) theta_m``.

    Here ``m = (1, m2, m3, m3)``, ``m' = (1, m2, m3 + 2, m3 + 2)`` and
    ``m'' = (1, m2 + 2, m3 + 1, m3 + 1)``.
    """
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    if m.m1 != 1 or not m.balanced:
        raise HypothesisViolation(f"{tuple(m)}: need m1 = 1 and m balanced")
    d = m.total // 2 - 1
    s = (d - m.m2) // 2 + m.m3
    df = double_factorial
    b0 = Fraction((-1) ** s, df(m.m2) * df(d - m.m2))
    d0 = Fraction((-1) ** (s + 1), df(m.m2) * df(d + 2 - m.m2))
    e = Fraction((-1) ** (s + 1) * (m.m2 - 2 * d - 3), df(m.m2) * df(d + 2 - m.m2))
    return RecursionScalars(b0, d0, e, d)


def check_lemma_B(m: Sequence[int]) -> bool:
    m = B2Multiplicity.of(m)
    b0, d0, e, _ = lemma_B_scalars(m)
    lhs = b0 * theta_m((1, m.m2, m.m3 + 2, m.m3 + 2)) - d0 * (
        _x2_minus_y2() * theta_m(m)
    )
    return lhs == e * theta_m((1, m.m2 + 2, m.m3 + 1, m.m3 + 1))


def lemma_D_scalars(m: Sequence[int]) -> RecursionScalars:
    """Scalars of ``e theta_{m''} = b0 theta_{m'} - d0 y^2 theta_m``.

    Here ``m' = (m1, m2 + 4, m3, m3)`` and ``m'' = (m1 + 2, m2 + 2, m3, m3)``.
    """
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    if not m.balanced:
        raise HypothesisViolation(f"{tuple(m)} is not balanced")
    d = m.total // 2 - 1
    s = (d - m.m1) // 2
    df = double_factorial
    b0 = Fraction((-1) ** s, df(m.m1) * df(d - m.m1))
    d0 = Fraction((-1) ** (s + 1), df(m.m1) * df(d + 2 - m.m1))
    e = Fraction((-1) ** s * (m.m2 + 2), df(m.m1) * df(d + 2 - m.m1))
    return RecursionScalars(b0, d0, e, d)


def check_lemma_D(m: Sequence[int]) -> bool:
    m = B2Multiplicity.of(m)
    b0, d0, e, _ = lemma_D_scalars(m)
    y2 = HomoPoly.monomial(1, 0, 2)
    lhs = b0 * theta_m((m.m1, m.m2 + 4, m.m3, m.m3)) - d0 * (y2 * theta_m(m))
    return lhs == e * theta_m((m.m1 + 2, m.m2 + 2, m.m3, m.m3))


def check_lemma_A(d: int) -> bool:
    """For ``m = (1, 1, d, d)``, ``theta_m(x -+ y) = c (x -+ y)^d`` with
    ``c = (-1)^((d-1)/2) / ((d-1)!! d)``."""
    if d < 1 or d % 2 == 0:
        raise HypothesisViolation(f"d must be a positive odd integer, got {d}")
    from .arrangement import apply

    theta = theta_m((1, 1, d, d))
    c = Fraction((-1) ** ((d - 1) // 2), double_factorial(d - 1) * d)
    return all(apply(theta, form) == c * linpow(form, d) for form in (X_MINUS_Y, X_PLUS_Y))


def lemma_F_derivation(m: Sequence[int]) -> Derivation:
    """``x^m1 (x - y)^m3 (x + y)^m3 / (m1!! (2 m3)!!) d/dx`` for ``m2 = m1 + 2 m3 + 2``."""
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    if m.m2 != m.m1 + 2 * m.m3 + 2:
        raise HypothesisViolation(f"{tuple(m)}: need m2 = m1 + 2 m3 + 2")
    f = mul(mul(linpow(X, m.m1), linpow(X_MINUS_Y, m.m3)), linpow(X_PLUS_Y, m.m3))
    f = f * Fraction(1, double_factorial(m.m1) * double_factorial(2 * m.m3))
    return Derivation(f, HomoPoly.zero(f.degree))


def check_lemma_F(m: Sequence[int]) -> bool:
    return theta_m(m) == lemma_F_derivation(m)


def check_lemma_M(m: Sequence[int]) -> bool:
    """The two main-basis generators have a nonzero coefficient determinant."""
    t1, t2, _ = main_basis(m)
    return not saito_determinant(t1, t2).is_zero


def check_cor_P(m: Sequence[int]) -> bool:
    """No form of the arrangement divides ``theta_m`` (both coefficients at once)."""
    m = B2Multiplicity.of(m)
    _check_admissible(m)
    if not m.balanced:
        raise HypothesisViolation(f"{tuple(m)} is not balanced")
    theta = theta_m(m)
    return not any(
        divides(form, 1, theta.f) and divides(form, 1, theta.g) for form in B2.forms
    )


# Difference of exponents


def _abe_case(m: B2Multiplicity) -> tuple[str, int]:
    if m.m3 > m.m4:
        m = B2Multiplicity(m.m1, m.m2, m.m4, m.m3)
    if not m.balanced:
        raise CaseNotCovered(f"{tuple(m)} is not balanced")
    if abs(m.m1 - m.m2) < m.m4 - m.m3:
        raise CaseNotCovered(f"{tuple(m)}: |m1 - m2| < |m3 - m4|")
    gap = m.m4 - m.m3
    if m.total % 2 == 0:
        if gap == 0 and m.odd12 and m.total % 4 == 0:
            return "1(a)", 2
        if gap == 0:
            return "2(a)", 0
        if gap == 1:
            return "2(b)", 0
        if gap == 2 and m.odd12:
            return "2(c)", 0
    else:
        if gap in (0, 1, 2):
            return "3(" + "abc"[gap] + ")", 1
        if gap == 3 and m.odd12:
            return "3(d)", 1
    raise CaseNotCovered(f"{tuple(m)} matches no listed case")


def exponent_difference(m: Sequence[int]) -> int:
    """Predicted ``e2 - e1`` for balanced ``m`` with ``|m1 - m2| >= |m3 - m4|``."""
    return _abe_case(B2Multiplicity.of(m))[1]


def exponent_difference_case(m: Sequence[int]) -> str:
    return _abe_case(B2Multiplicity.of(m))[0]


# Case table of explicit bases

_PREFACTORS = {
    "1": HomoPoly.const(1),
    "x": X.as_poly(),
    "y": Y.as_poly(),
    "xy": HomoPoly.monomial(1, 1, 1),
    "(x+y)": X_PLUS_Y.as_poly(),
    "x(x+y)": mul(X.as_poly(), X_PLUS_Y.as_poly()),
    "(x-y)(x+y)^2": mul(X_MINUS_Y.as_poly(), linpow(X_PLUS_Y, 2)),
    "(x+y)^2": linpow(X_PLUS_Y, 2),
}


def _even_odd(m: B2Multiplicity) -> bool:
    return m.m1 % 2 == 0 and m.m2 % 2 == 1


def _even_even(m: B2Multiplicity) -> bool:
    return m.m1 % 2 == 0 and m.m2 % 2 == 0


# (case id, m4 - m3, |m| mod 4, parity test, generators as (prefactor, shift))
_COR_Q_CASES = [
    ("1(a)i", 0, 0, B2Multiplicity.odd12.fget, [("1", (0, 0, 0, 0)), ("1", (2, 2, 0, 0))]),
    ("1(a)ii", 0, 0, _even_even, [("x", (-1, 1, 0, 0)), ("y", (1, -1, 0, 0))]),
    ("1(b)i", 0, 1, _even_odd, [("x", (-1, 0, 0, 0)), ("1", (1, 0, 1, 1))]),
    ("1(c)i", 0, 2, B2Multiplicity.odd12.fget, [("1", (2, 0, 0, 0)), ("1", (0, 2, 0, 0))]),
    ("1(c)ii", 0, 2, _even_even, [("1", (1, 1, 0, 0)), ("xy", (-1, -1, 0, 0))]),
    ("1(d)i", 0, 3, _even_odd, [("1", (1, 0, 0, 0)), ("x", (-1, 0, 1, 1))]),
    ("2(a)i", 1, 0, _even_odd, [("x", (-1, 0, 1, 0)), ("(x+y)", (1, 0, 0, -1))]),
    ("2(b)i", 1, 1, B2Multiplicity.odd12.fget, [("(x+y)", (0, 0, 0, -1)), ("1", (2, 0, 1, 0))]),
    ("2(c)i", 1, 2, _even_odd, [("1", (1, 0, 1, 0)), ("x(x+y)", (-1, 0, 0, -1))]),
    ("2(d)i", 1, 3, B2Multiplicity.odd12.fget, [("1", (0, 0, 1, 0)), ("(x-y)(x+y)^2", (0, 0, -1, -2))]),
    ("3(a)i", 2, 2, B2Multiplicity.odd12.fget, [("1", (0, 0, 2, 0)), ("(x+y)^2", (0, 0, 0, -2))]),
]


def _scaled_theta(prefactor: str, mu: tuple[int, ...], case: str) -> Derivation:
    """``prefactor * theta(mu)``, allowing ``mu1`` or ``mu2 = -1`` when the
    prefactor clears the resulting ``x^-1`` or ``y^-1`` terms."""
    m1, m2, m3, m4 = mu
    if m3 != m4 or m1 % 2 == 0 or m2 % 2 == 0 or sum(mu) % 4 or min(mu) < -1 or m3 < 0:
        raise CaseNotCovered(f"case {case}: theta{mu} is undefined")
    d, f_terms, g_terms = _theta_terms(m1, m2, m3)
    if d < 0:
        raise CaseNotCovered(f"case {case}: theta{mu} is undefined")
    pre = _PREFACTORS[prefactor]
    deg = d + pre.degree

    def times(terms):
        out = []
        for c, xe, ye in terms:
            for pc, pxe, pye in pre.terms():
                if xe + pxe < 0 or ye + pye < 0:
                    raise CaseNotCovered(f"case {case}: {prefactor} * theta{mu} is not polynomial")
                out.append((c * pc, xe + pxe, ye + pye))
        return HomoPoly.from_terms(deg, out)

    theta = Derivation(times(f_terms), -times(g_terms))
    if theta.is_zero:
        raise CaseNotCovered(f"case {case}: theta{mu} vanishes")
    return theta


def _normalize(m: B2Multiplicity):
    """Move ``m`` to ``m3 <= m4`` and, for odd |m1 + m2|, m1 even; return the
    normal form and the list of symmetries to undo (innermost last)."""
    undo = []
    if m.m3 > m.m4:
        m = B2Multiplicity(m.m1, m.m2, m.m4, m.m3)
        undo.append(flip_y)
    if m.m1 % 2 == 1 and m.m2 % 2 == 0:
        m = B2Multiplicity(m.m2, m.m1, m.m3, m.m4)
        undo.append(swap_xy)
    return m, undo


def cor_Q_dispatch(m: Sequence[int]) -> tuple[str, Derivation, Derivation]:
    """Case id and basis of ``D(m)`` from the explicit case table."""
    m = B2Multiplicity.of(m)
    if not m.balanced:
        raise HypothesisViolation(f"{tuple(m)} is not balanced")
    n, undo = _normalize(m)
    for case, gap, mod, parity, gens in _COR_Q_CASES:
        if n.m4 - n.m3 == gap and n.total % 4 == mod and parity(n):
            pair = [_scaled_theta(pre, n.shifted(shift), case) for pre, shift in gens]
            for sym in reversed(undo):
                pair = [sym(t) for t in pair]
            return case, pair[0], pair[1]
    raise CaseNotCovered(f"{tuple(m)} matches no case of the basis table")


def cor_Q_basis(m: Sequence[int]) -> tuple[Derivation, Derivation]:
    _, t1, t2 = cor_Q_dispatch(m)
    return t1, t2
