"""Multiarrangements of lines in the plane and their derivation modules.

A derivation ``theta = f d/dx + g d/dy`` lies in ``D(A, m)`` when
``theta(alpha_i)`` is divisible by ``alpha_i ** m_i`` for every form of the
arrangement.  Multiplicities are plain tuples of non-negative integers; a
zero multiplicity imposes no condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import BalancedInput, DegreeMismatch, LengthMismatch, NotMember
from .poly import HomoPoly, LinearForm, Scalar, X, Y, add, divides, linpow, mul, ratio

Multiplicity = tuple[int, ...]


class ExponentPair(NamedTuple):
    e1: int
    e2: int


@dataclass(frozen=True)
class Derivation:
    f: HomoPoly
    g: HomoPoly

    def __post_init__(self):
        if self.f.degree != self.g.degree:
            raise DegreeMismatch(
                f"coefficients have degrees {self.f.degree} and {self.g.degree}"
            )

    @classmethod
    def zero(cls, degree: int) -> Derivation:
        return cls(HomoPoly.zero(degree), HomoPoly.zero(degree))

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def is_zero(self) -> bool:
        return self.f.is_zero and self.g.is_zero

    def vector(self) -> tuple[Fraction, ...]:
        """Coefficients in canonical order: f-block then g-block, each by decreasing x-exponent."""
        return self.f.coeffs + self.g.coeffs

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence[Scalar]) -> Derivation:
        n = degree + 1
        return cls(HomoPoly(degree, tuple(vec[:n])), HomoPoly(degree, tuple(vec[n:])))

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(add(self.f, other.f), add(self.g, other.g))

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Derivation(-self.f, -self.g)

    def __mul__(self, other):
        if isinstance(other, HomoPoly):
            return Derivation(mul(other, self.f), mul(other, self.g))
        if isinstance(other, (int, Fraction)):
            return Derivation(self.f * other, self.g * other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        from .render import derivation_to_text

        return derivation_to_text(self)


EULER = Derivation(X.as_poly(), Y.as_poly())
DX = Derivation(HomoPoly.const(1), HomoPoly.const(0))
DY = Derivation(HomoPoly.const(0), HomoPoly.const(1))


@dataclass(frozen=True)
class Multiarrangement:
    forms: tuple[LinearForm, ...]

    def __post_init__(self):
        forms = tuple(self.forms)
        for i, a in enumerate(forms):
            for b in forms[:i]:
                if a.proportional_to(b):
                    raise ValueError(f"forms {b} and {a} define the same line")
        object.__setattr__(self, "forms", forms)

    def __len__(self) -> int:
        return len(self.forms)

    def check(self, m: Sequence[int]) -> Multiplicity:
        m = tuple(int(v) for v in m)
        if len(m) != len(self.forms):
            raise LengthMismatch(f"{len(self.forms)} forms but {len(m)} multiplicities")
        if any(v < 0 for v in m):
            raise ValueError(f"multiplicities must be non-negative: {m}")
        return m


B2 = Multiarrangement((X, Y, LinearForm(1, -1), LinearForm(1, 1)))
A2 = Multiarrangement((X, Y, LinearForm(1, 1)))


def apply(theta: Derivation, form: LinearForm) -> HomoPoly:
    """``theta(a x + b y) = a f + b g``."""
    return add(theta.f * form.a, theta.g * form.b)


def is_member(theta: Derivation, arr: Multiarrangement, m: Sequence[int]) -> bool:
    m = arr.check(m)
    return all(
        divides(form, k, apply(theta, form)) for form, k in zip(arr.forms, m) if k
    )


def is_balanced(m: Sequence[int]) -> bool:
    total = sum(m)
    return all(2 * v <= total - 1 for v in m)


def defining_polynomial(arr: Multiarrangement, m: Sequence[int]) -> HomoPoly:
    """``prod alpha_i ** m_i``."""
    m = arr.check(m)
    out = HomoPoly.const(1)
    for form, k in zip(arr.forms, m):
        if k:
            out = mul(out, linpow(form, k))
    return out


def saito_determinant(theta1: Derivation, theta2: Derivation) -> HomoPoly:
    return mul(theta1.f, theta2.g) - mul(theta2.f, theta1.g)


def saito_check(
    theta1: Derivation, theta2: Derivation, arr: Multiarrangement, m: Sequence[int]
) -> bool:
    """Whether two members of ``D(A, m)`` form a basis of it.

    For two homogeneous elements this means: degrees add up to ``|m|`` and the
    coefficient determinant does not vanish.
    """
    m = arr.check(m)
    for k, theta in enumerate((theta1, theta2), 1):
        if not is_member(theta, arr, m):
            raise NotMember(f"derivation {k} is not in D(A, {m})")
    if theta1.degree + theta2.degree != sum(m):
        return False
    return not saito_determinant(theta1, theta2).is_zero


def determinant_ratio(
    theta1: Derivation, theta2: Derivation, arr: Multiarrangement, m: Sequence[int]
) -> Fraction | None:
    """The scalar ``c`` with ``det = c * prod alpha_i ** m_i``, if any."""
    det = saito_determinant(theta1, theta2)
    q = defining_polynomial(arr, m)
    if det.degree != q.degree:
        return None
    return ratio(det, q)


# Linear symmetries of the plane used to move multiplicities into normal form.
# Both are involutions; for B2 ``swap_xy`` exchanges m1 <-> m2 and ``flip_y``
# exchanges m3 <-> m4.


def swap_xy(theta: Derivation) -> Derivation:
    """Push ``theta`` forward along ``(x, y) -> (y, x)``."""
    return Derivation(theta.g.swap_xy(), theta.f.swap_xy())


def flip_y(theta: Derivation) -> Derivation:
    """Push ``theta`` forward along ``(x, y) -> (x, -y)``."""
    return Derivation(theta.f.flip_y(), -theta.g.flip_y())


def non_balanced_basis(
    arr: Multiarrangement, m: Sequence[int]
) -> tuple[Derivation, Derivation, ExponentPair]:
    """Basis of ``D(A, m)`` when one multiplicity dominates.

    With ``m_k`` maximal and ``alpha_k = a x + b y``, the lower generator is
    ``prod_{i != k} alpha_i ** m_i * (b d/dx - a d/dy)``: the vector field
    along the line ``alpha_k = 0``.  The upper generator of degree ``m_k`` is
    completed by exact linear algebra.
    """
    from .oracle import complete_basis

    m = arr.check(m)
    if is_balanced(m):
        raise BalancedInput(f"{m} is balanced")
    k = max(range(len(m)), key=lambda i: (m[i], -i))
    ak = arr.forms[k]
    lead = HomoPoly.const(1)
    for i, (form, mi) in enumerate(zip(arr.forms, m)):
        if i != k and mi:
            lead = mul(lead, linpow(form, mi))
    theta1 = Derivation(lead * ak.b, lead * (-ak.a))
    exps = ExponentPair(sum(m) - m[k], m[k])
    theta2 = complete_basis(arr, m, theta1, exps.e2)
    return theta1, theta2, exps
