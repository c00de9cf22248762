"""Text, LaTeX and JSON renderings of polynomials and derivations.

Canonical text form lists monomials by decreasing x-exponent with rational
coefficients written ``p/q``, e.g. ``1/10 x^5 - 1/6 x^3 y^2``.  The JSON form
of a derivation is::

    {"degree": d, "f": [["1/10", 5, 0], ...], "g": [...]}

with one ``[coefficient, xexp, yexp]`` entry per nonzero term.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from .poly import HomoPoly

if TYPE_CHECKING:
    from .arrangement import Derivation


def _monomial(xe: int, ye: int, latex: bool) -> str:
    parts = []
    for var, e in (("x", xe), ("y", ye)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{{{e}}}" if latex else f"{var}^{e}")
    return " ".join(parts)


def _coeff_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _join(pieces: list[tuple[Fraction, str]]) -> str:
    out = []
    for k, (sign_neg, body) in enumerate(pieces):
        if k == 0:
            out.append(("-" if sign_neg else "") + body)
        else:
            out.append((" - " if sign_neg else " + ") + body)
    return "".join(out)


def poly_to_text(p: HomoPoly) -> str:
    pieces = []
    for c, xe, ye in p.terms():
        mono = _monomial(xe, ye, latex=False)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a} {mono}"
        pieces.append((c < 0, body))
    return _join(pieces) if pieces else "0"


def poly_to_latex(p: HomoPoly) -> str:
    pieces = []
    for c, xe, ye in p.terms():
        mono = _monomial(xe, ye, latex=True)
        a = abs(c)
        if not mono:
            body = _coeff_latex(a)
        elif a == 1:
            body = mono
        else:
            body = rf"{_coeff_latex(a)} \, {mono}"
        pieces.append((c < 0, body))
    return _join(pieces) if pieces else "0"


def derivation_to_text(theta: Derivation) -> str:
    return f"({poly_to_text(theta.f)}) dx + ({poly_to_text(theta.g)}) dy"


def derivation_to_latex(theta: Derivation) -> str:
    return (
        rf"\left({poly_to_latex(theta.f)}\right)\partial_x"
        rf"+\left({poly_to_latex(theta.g)}\right)\partial_y"
    )


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?)?\s*\*?\s*
        (?:x(?:\^(?P<xe>\d+))?(?P<xs>))?\s*\*?\s*
        (?:y(?:\^(?P<ye>\d+))?(?P<ys>))?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, degree: int | None = None) -> HomoPoly:
    """Parse the canonical text form (``*`` between factors is optional).

    ``degree`` is required for the zero polynomial and checked otherwise.
    """
    s = text.strip()
    if s in ("", "0"):
        if degree is None:
            raise ValueError("degree needed to parse the zero polynomial")
        return HomoPoly.zero(degree)
    terms = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        has_x = m.group("xs") is not None
        has_y = m.group("ys") is not None
        if m.group("coef") is None and not (has_x or has_y):
            raise ValueError(f"empty term in {text!r}")
        if terms and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r}")
        c = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            c = -c
        xe = int(m.group("xe") or 1) if has_x else 0
        ye = int(m.group("ye") or 1) if has_y else 0
        terms.append((c, xe, ye))
        pos = m.end()
    degs = {xe + ye for _, xe, ye in terms}
    if len(degs) != 1:
        raise ValueError(f"polynomial {text!r} is not homogeneous")
    d = degs.pop()
    if degree is not None and d != degree:
        raise ValueError(f"polynomial {text!r} has degree {d}, expected {degree}")
    return HomoPoly.from_terms(d, terms)


def parse_derivation(f_text: str, g_text: str, degree: int | None = None) -> Derivation:
    from .arrangement import Derivation

    if degree is None:
        for t in (f_text, g_text):
            if t.strip() not in ("", "0"):
                degree = parse_poly(t).degree
                break
    return Derivation(parse_poly(f_text, degree), parse_poly(g_text, degree))


def poly_to_json(p: HomoPoly) -> list[list[Any]]:
    return [[str(c), xe, ye] for c, xe, ye in p.terms()]


def derivation_to_json(theta: Derivation) -> dict[str, Any]:
    return {
        "degree": theta.degree,
        "f": poly_to_json(theta.f),
        "g": poly_to_json(theta.g),
    }


def derivation_from_json(obj: dict[str, Any]) -> Derivation:
    from .arrangement import Derivation

    d = int(obj["degree"])
    f = HomoPoly.from_terms(d, ((Fraction(c), int(xe), int(ye)) for c, xe, ye in obj["f"]))
    g = HomoPoly.from_terms(d, ((Fraction(c), int(xe), int(ye)) for c, xe, ye in obj["g"]))
    return Derivation(f, g)
