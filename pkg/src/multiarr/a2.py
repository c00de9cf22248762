"""Lower derivations for the A2 multiarrangement ``x, y, x + y`` with
multiplicity ``(a, a, b)``.

``theta_prime`` is obtained from the B2 derivation ``theta_mu`` with
``mu = (1, b, a, a)`` by substituting ``(x - y, x + y)`` for ``(x, y)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .arrangement import A2, Derivation, is_member
from .closedform import X_MINUS_Y, X_PLUS_Y, f_m, g_m
from .errors import DegreeMismatch, HypothesisViolation
from .render import parse_derivation


class A2Multiplicity(NamedTuple):
    a: int
    b: int

    @property
    def values(self) -> tuple[int, int, int]:
        return (self.a, self.a, self.b)

    @property
    def total(self) -> int:
        return 2 * self.a + self.b

    @property
    def admissible(self) -> bool:
        return self.b % 2 == 1 and self.total % 4 == 3

    @property
    def balanced(self) -> bool:
        from .arrangement import is_balanced

        return is_balanced(self.values)

    @classmethod
    def of(cls, m) -> A2Multiplicity:
        if isinstance(m, cls):
            return m
        m = tuple(int(v) for v in m)
        if len(m) == 3:
            if m[0] != m[1]:
                raise HypothesisViolation(f"A2 multiplicity must have equal first entries: {m}")
            m = (m[0], m[2])
        if len(m) != 2 or min(m) < 0:
            raise HypothesisViolation(f"bad A2 multiplicity {m}")
        return cls(*m)


def _mu(m: A2Multiplicity) -> tuple[int, int, int, int]:
    return (1, m.b, m.a, m.a)


def theta_prime(m) -> Derivation:
    """``f' d/dx - g' d/dy`` with ``f' = (f_mu - g_mu)(x - y, x + y)`` and
    ``g' = (f_mu + g_mu)(x - y, x + y)``."""
    m = A2Multiplicity.of(m)
    if not m.admissible:
        raise HypothesisViolation(f"{m.values}: need b odd and 2a + b = 3 mod 4")
    from .poly import subst_linear

    mu = _mu(m)
    f = subst_linear(f_m(mu), X_MINUS_Y, X_PLUS_Y)
    g = subst_linear(g_m(mu), X_MINUS_Y, X_PLUS_Y)
    return Derivation(f - g, -(f + g))


def a2_membership(theta: Derivation, m) -> bool:
    return is_member(theta, A2, A2Multiplicity.of(m).values)


def scalar_ratio(theta1: Derivation, theta2: Derivation) -> Fraction | None:
    """``c`` with ``theta1 == c * theta2``, or ``None`` when not proportional."""
    if theta1.degree != theta2.degree:
        raise DegreeMismatch(f"degrees {theta1.degree} and {theta2.degree} differ")
    v1, v2 = theta1.vector(), theta2.vector()
    c = next((p / q for p, q in zip(v1, v2) if q), None)
    if c is None:
        return None
    if all(p == c * q for p, q in zip(v1, v2)):
        return c
    return None


# Lower basis elements with integer coefficients for a few balanced A2
# multiplicities, together with their ratio to theta_prime.
_WAKAMIKO = [
    ((2, 3), "x^3 + 3 x^2 y", "3 x y^2 + y^3", "-3/2"),
    ((3, 5), "x^5 + 5 x^4 y + 10 x^3 y^2", "10 x^2 y^3 + 5 x y^4 + y^5", "15/2"),
    ((4, 3), "6 x^5 + 10 x^4 y", "10 x y^4 + 6 y^5", "15"),
    (
        (4, 7),
        "x^7 + 7 x^6 y + 21 x^5 y^2 + 35 x^4 y^3",
        "35 x^3 y^4 + 21 x^2 y^5 + 7 x y^6 + y^7",
        "-105/2",
    ),
    ((5, 5), "50 x^7 + 175 x^6 y + 175 x^5 y^2", "175 x^2 y^5 + 175 x y^6 + 50 y^7", "-2625/4"),
    (
        (5, 9),
        "x^9 + 9 x^8 y + 36 x^7 y^2 + 84 x^6 y^3 + 126 x^5 y^4",
        "126 x^4 y^5 + 84 x^3 y^6 + 36 x^2 y^7 + 9 x y^8 + y^9",
        "945/2",
    ),
    ((6, 3), "15 x^7 + 21 x^6 y", "21 x y^6 + 15 y^7", "-315/4"),
    (
        (6, 7),
        "490 x^9 + 2646 x^8 y + 5292 x^7 y^2 + 4116 x^6 y^3",
        "4116 x^3 y^6 + 5292 x^2 y^7 + 2646 x y^8 + 490 y^9",
        "46305",
    ),
    (
        (6, 11),
        "x^11 + 11 x^10 y + 55 x^9 y^2 + 165 x^8 y^3 + 330 x^7 y^4 + 462 x^6 y^5",
        "462 x^5 y^6 + 330 x^4 y^7 + 165 x^3 y^8 + 55 x^2 y^9 + 11 x y^10 + y^11",
        "-10395/2",
    ),
    ((7, 5), "490 x^9 + 1470 x^8 y + 1176 x^7 y^2", "1176 x^2 y^7 + 1470 x y^8 + 490 y^9", "15435"),
]


def wakamiko_fixtures() -> list[tuple[A2Multiplicity, Derivation, Fraction]]:
    return [
        (A2Multiplicity(*m), parse_derivation(f, g), Fraction(r))
        for m, f, g, r in _WAKAMIKO
    ]
