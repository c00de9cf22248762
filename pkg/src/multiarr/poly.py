"""Exact homogeneous bivariate polynomials over the rationals.

A ``HomoPoly`` of degree ``d`` is stored densely as ``d + 1`` coefficients,
``coeffs[i]`` being the coefficient of ``x**(d - i) * y**i``.  The degree is
part of the value, so the zero polynomial of degree 3 and the zero polynomial
of degree 4 are different objects (and cannot be added together).

All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from numbers import Rational
from typing import Iterator, Sequence, Union

from . import kernels
from .errors import DegreeMismatch

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def _to_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


@dataclass(frozen=True)
class HomoPoly:
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        cs = tuple(_frac(c) for c in self.coeffs)
        if len(cs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    # construction helpers
    @classmethod
    def zero(cls, degree: int) -> HomoPoly:
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def const(cls, c: Scalar) -> HomoPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: Scalar, xexp: int, yexp: int) -> HomoPoly:
        if xexp < 0 or yexp < 0:
            raise ValueError("negative exponent")
        cs = [Fraction(0)] * (xexp + yexp + 1)
        cs[yexp] = _frac(c)
        return cls(xexp + yexp, tuple(cs))

    @classmethod
    def from_terms(cls, degree: int, terms) -> HomoPoly:
        """Build from ``(coeff, xexp, yexp)`` triples; repeated monomials add up."""
        cs = [Fraction(0)] * (degree + 1)
        for c, xe, ye in terms:
            if xe < 0 or ye < 0 or xe + ye != degree:
                raise DegreeMismatch(f"monomial x^{xe} y^{ye} is not of degree {degree}")
            cs[ye] += _frac(c)
        return cls(degree, tuple(cs))

    # queries
    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coeff(self, xexp: int, yexp: int) -> Fraction:
        if xexp + yexp != self.degree or xexp < 0 or yexp < 0:
            return Fraction(0)
        return self.coeffs[yexp]

    def terms(self) -> Iterator[tuple[Fraction, int, int]]:
        """Nonzero terms ``(coeff, xexp, yexp)`` by decreasing x-exponent."""
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c:
                yield c, d - i, i

    def __call__(self, x, y) -> Fraction:
        d = self.degree
        return sum((c * Fraction(x) ** (d - i) * Fraction(y) ** i
                    for i, c in enumerate(self.coeffs)), Fraction(0))

    def swap_xy(self) -> HomoPoly:
        """p(y, x)."""
        return HomoPoly(self.degree, self.coeffs[::-1])

    def flip_y(self) -> HomoPoly:
        """p(x, -y)."""
        return HomoPoly(self.degree, tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return add(self, -other)

    def __neg__(self):
        return HomoPoly(self.degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, HomoPoly):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return HomoPoly(self.degree, tuple(c * v for v in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HomoPoly:
        if k < 0:
            raise ValueError("negative power")
        out = HomoPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = mul(out, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return out

    def __str__(self) -> str:
        from .render import poly_to_text

        return poly_to_text(self)


@dataclass(frozen=True)
class LinearForm:
    """The linear form ``a*x + b*y``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = _frac(self.a), _frac(self.b)
        if a == 0 and b == 0:
            raise ValueError("the zero linear form does not define a hyperplane")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def as_poly(self) -> HomoPoly:
        return HomoPoly(1, (self.a, self.b))

    def proportional_to(self, other: LinearForm) -> bool:
        return self.a * other.b == self.b * other.a

    def integral(self) -> tuple[int, int]:
        """Primitive integer coefficients of a positive multiple of this form."""
        den = lcm(self.a.denominator, self.b.denominator)
        a, b = int(self.a * den), int(self.b * den)
        g = gcd(a, b)
        return a // g, b // g

    def __str__(self) -> str:
        from .render import poly_to_text

        return poly_to_text(self.as_poly())


X = LinearForm(1, 0)
Y = LinearForm(0, 1)


def add(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot add degree {p.degree} and degree {q.degree}")
    return HomoPoly(p.degree, tuple(a + b for a, b in zip(p.coeffs, q.coeffs)))


def mul(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    """Product; ``deg = p.degree + q.degree`` even when a factor is zero."""
    pn, pd = _to_ints(p.coeffs)
    qn, qd = _to_ints(q.coeffs)
    den = pd * qd
    prod = kernels.convolve(pn, qn)
    return HomoPoly(p.degree + q.degree, tuple(Fraction(c, den) for c in prod))


def linpow(form: LinearForm, k: int) -> HomoPoly:
    """``form ** k`` expanded by the binomial theorem."""
    if k < 0:
        raise ValueError("negative power")
    a, b = form.a, form.b
    return HomoPoly(k, tuple(comb(k, i) * a ** (k - i) * b ** i for i in range(k + 1)))


def _int_form(form: LinearForm) -> tuple[int, int, int]:
    # form == (a x + b y) / den with integer a, b
    den = lcm(form.a.denominator, form.b.denominator)
    return int(form.a * den), int(form.b * den), den


def _int_powers(a: int, b: int, d: int) -> list[list[int]]:
    pows = [[1]]
    for _ in range(d):
        pows.append(kernels.convolve(pows[-1], [a, b]))
    return pows


def subst_linear(p: HomoPoly, u: LinearForm, v: LinearForm) -> HomoPoly:
    """``p(u(x, y), v(x, y))``."""
    d = p.degree
    pn, pden = _to_ints(p.coeffs)
    ua, ub, ud = _int_form(u)
    va, vb, vd = _int_form(v)
    upows, vpows = _int_powers(ua, ub, d), _int_powers(va, vb, d)
    # common denominator pden * ud**d * vd**d
    acc = [0] * (d + 1)
    for i, c in enumerate(pn):
        if c:
            scale = c * ud**i * vd ** (d - i)
            for j, t in enumerate(kernels.convolve(upows[d - i], vpows[i])):
                acc[j] += scale * t
    den = pden * ud**d * vd**d
    return HomoPoly(d, tuple(Fraction(c, den) for c in acc))


def rem_mod_linpow(p: HomoPoly, form: LinearForm, k: int) -> HomoPoly:
    """Remainder of ``p`` modulo ``form ** k``; zero iff ``form ** k`` divides ``p``.

    With ``form = a*x + b*y`` and ``b != 0`` we rewrite ``p`` in the coordinates
    ``(x, t)`` with ``t = form``, drop every term divisible by ``t**k`` and map
    back.  For ``b == 0`` the roles of ``x`` and ``y`` are exchanged.
    """
    if k <= 0:
        return HomoPoly.zero(p.degree)
    d = p.degree
    a, b = form.a, form.b
    if b != 0:
        # y = (t - a x) / b ; coordinates (x, t), t-exponent = index
        q = subst_linear(p, X, LinearForm(-a / b, 1 / b))
        kept = [c if i < k else Fraction(0) for i, c in enumerate(q.coeffs)]
        return subst_linear(HomoPoly(d, kept), X, form)
    # x = t / a ; coordinates (t, y), t-exponent = d - index
    q = subst_linear(p, LinearForm(1 / a, 0), Y)
    kept = [c if d - i < k else Fraction(0) for i, c in enumerate(q.coeffs)]
    return subst_linear(HomoPoly(d, kept), form, Y)


def divides(form: LinearForm, k: int, p: HomoPoly) -> bool:
    """Whether ``form ** k`` divides ``p``; same coordinate change as ``rem_mod_linpow``."""
    if k <= 0:
        return True
    d = p.degree
    if k > d:
        return p.is_zero
    a, b = form.a, form.b
    if b != 0:
        q = subst_linear(p, X, LinearForm(-a / b, 1 / b))
        return not any(q.coeffs[:k])
    q = subst_linear(p, LinearForm(1 / a, 0), Y)
    return not any(q.coeffs[d - k + 1:])


def ratio(p: HomoPoly, q: HomoPoly) -> Fraction | None:
    """The scalar ``c`` with ``p == c * q``, or ``None`` if there is none.

    ``q`` must be nonzero.
    """
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    c = None
    for pc, qc in zip(p.coeffs, q.coeffs):
        if qc:
            c = pc / qc
            break
    if c is None:
        raise ZeroDivisionError("ratio against the zero polynomial")
    if all(pc == c * qc for pc, qc in zip(p.coeffs, q.coeffs)):
        return c
    return None
