"""Command-line interface.

Subcommands::

    multiarr basis b2 1,1,1,1 [--format json|latex|text] [--fallback-oracle]
    multiarr oracle b2 3,5,2,2 [--profile 8]
    multiarr verify --max-sum 16 [--jobs 4]
    multiarr emit theta 3,5,2,2 --format latex
    multiarr emit record basis.json --format latex

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 multiplicity outside the closed-form cases.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import closedform as cf
from .a2 import A2Multiplicity, theta_prime
from .arrangement import (
    A2,
    B2,
    EULER,
    Derivation,
    ExponentPair,
    Multiarrangement,
    is_balanced,
    is_member,
    non_balanced_basis,
    saito_check,
)
from .errors import CaseNotCovered, HypothesisViolation, MultiarrError
from .oracle import complete_basis, exponents, graded_dimension_profile, oracle_basis
from .poly import LinearForm
from .render import (
    derivation_from_json,
    derivation_to_json,
    derivation_to_latex,
    derivation_to_text,
)

log = logging.getLogger("multiarr")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_COVERED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputRecord:
    arrangement: str
    forms: tuple[LinearForm, ...]
    multiplicity: tuple[int, ...]
    exponents: ExponentPair
    basis: tuple[Derivation, Derivation]
    provenance: str

    def to_json(self) -> dict[str, Any]:
        return {
            "arrangement": self.arrangement,
            "forms": [[str(f.a), str(f.b)] for f in self.forms],
            "multiplicity": list(self.multiplicity),
            "exponents": list(self.exponents),
            "provenance": self.provenance,
            "basis": [derivation_to_json(t) for t in self.basis],
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> OutputRecord:
        forms = tuple(LinearForm(Fraction(a), Fraction(b)) for a, b in obj["forms"])
        t1, t2 = (derivation_from_json(t) for t in obj["basis"])
        return cls(
            obj["arrangement"],
            forms,
            tuple(obj["multiplicity"]),
            ExponentPair(*obj["exponents"]),
            (t1, t2),
            obj["provenance"],
        )

    def recheck(self) -> bool:
        arr = Multiarrangement(self.forms)
        t1, t2 = self.basis
        if not (is_member(t1, arr, self.multiplicity) and is_member(t2, arr, self.multiplicity)):
            return False
        return saito_check(t1, t2, arr, self.multiplicity) and sorted(
            (t1.degree, t2.degree)
        ) == list(self.exponents)


def parse_multiplicity(text: str) -> tuple[int, ...]:
    try:
        m = tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"malformed multiplicity {text!r}; expected e.g. 1,1,1,1") from None
    if any(v < 0 for v in m):
        raise UsageError(f"multiplicities must be non-negative: {text!r}")
    return m


def parse_forms(text: str) -> Multiarrangement:
    forms = []
    try:
        for chunk in text.split(";"):
            a, b = chunk.split(",")
            forms.append(LinearForm(Fraction(a.strip()), Fraction(b.strip())))
        return Multiarrangement(tuple(forms))
    except ValueError as exc:
        raise UsageError(f"malformed --forms {text!r}: {exc}") from None


def _arrangement(name: str, forms: str | None) -> Multiarrangement:
    if forms is not None:
        return parse_forms(forms)
    if name == "b2":
        return B2
    if name == "a2":
        return A2
    raise UsageError("the custom preset needs --forms")


def compute_basis(
    name: str, arr: Multiarrangement, m: tuple[int, ...], fallback_oracle: bool = False
) -> OutputRecord:
    """Dispatch: dominant multiplicity, main theorem, case table, then (optionally) oracle."""
    m = arr.check(m)

    def record(t1, t2, prov):
        exps = ExponentPair(*sorted((t1.degree, t2.degree)))
        return OutputRecord(name, arr.forms, m, exps, (t1, t2), prov)

    if not is_balanced(m):
        t1, t2, _ = non_balanced_basis(arr, m)
        return record(t1, t2, "non_balanced")
    if arr == B2:
        bm = cf.B2Multiplicity.of(m)
        if bm.admissible:
            t1, t2, _ = cf.main_basis(bm)
            return record(t1, t2, "main_theorem")
        try:
            case, t1, t2 = cf.cor_Q_dispatch(bm)
            return record(t1, t2, f"cor_Q:{case}")
        except CaseNotCovered:
            if not fallback_oracle:
                raise
    elif arr == A2 and m[0] == m[1] and A2Multiplicity(m[0], m[2]).admissible:
        t1 = theta_prime((m[0], m[2]))
        e1, e2 = exponents(arr, m)
        return record(t1, complete_basis(arr, m, t1, e2), "a2_theta_prime")
    elif not fallback_oracle:
        raise CaseNotCovered(f"no closed form for {m} on this arrangement")
    t1, t2 = oracle_basis(arr, m)
    return record(t1, t2, "oracle")


def render_record(rec: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec.to_json(), indent=2)
    head = (
        f"m = {rec.multiplicity}, exponents ({rec.exponents.e1}, {rec.exponents.e2}),"
        f" provenance {rec.provenance}"
    )
    if fmt == "latex":
        lines = ["% " + head]
        lines += [rf"\theta_{{{k}}} = {derivation_to_latex(t)}" for k, t in enumerate(rec.basis, 1)]
        return "\n".join(lines)
    lines = [head] + [f"theta{k} = {derivation_to_text(t)}" for k, t in enumerate(rec.basis, 1)]
    return "\n".join(lines)


def render_derivation(theta: Derivation, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(derivation_to_json(theta))
    if fmt == "latex":
        return derivation_to_latex(theta)
    return derivation_to_text(theta)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_basis(args) -> int:
    arr = _arrangement(args.arrangement, args.forms)
    m = parse_multiplicity(args.multiplicity)
    rec = compute_basis(args.arrangement, arr, m, args.fallback_oracle)
    if not args.no_recheck and not rec.recheck():
        log.error("basis for %s failed re-verification", m)
        return EXIT_FAIL
    _write(render_record(rec, args.format), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    arr = _arrangement(args.arrangement, args.forms)
    m = arr.check(parse_multiplicity(args.multiplicity))
    t1, t2 = oracle_basis(arr, m)
    exps = exponents(arr, m)
    rec = OutputRecord(args.arrangement, arr.forms, m, exps, (t1, t2), "oracle")
    text = render_record(rec, args.format)
    if args.profile is not None:
        prof = graded_dimension_profile(arr, m, args.profile)
        if args.format == "json":
            obj = rec.to_json()
            obj["dimension_profile"] = prof
            text = json.dumps(obj, indent=2)
        else:
            text += "\ndimension profile: " + " ".join(map(str, prof))
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import sweep

    if args.max_sum < 0:
        raise UsageError("--max-sum must be non-negative")
    results = sweep(args.max_sum, args.jobs)
    passed, failed = Counter(), Counter()
    failures = []
    for m, checks in results:
        for name, ok in checks.items():
            (passed if ok else failed)[name] += 1
            if not ok:
                failures.append((m, name))
    lines = [f"multiplicities checked: {len(results)}"]
    for name in sorted(set(passed) | set(failed)):
        lines.append(f"  {name:24s} pass {passed[name]:6d}  fail {failed[name]:4d}")
    for m, name in failures[:50]:
        lines.append(f"FAIL {name} at m={m}")
    lines.append("OK" if not failures else f"{len(failures)} FAILED")
    _write("\n".join(lines), args.out)
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_emit(args) -> int:
    if args.what == "record":
        if not args.arg:
            raise UsageError("emit record needs a JSON file")
        with open(args.arg, encoding="utf-8") as fh:
            rec = OutputRecord.from_json(json.load(fh))
        _write(render_record(rec, args.format), args.out)
        return EXIT_OK
    if args.what == "euler":
        theta = EULER
    else:
        if not args.arg:
            raise UsageError(f"emit {args.what} needs a multiplicity")
        m = parse_multiplicity(args.arg)
        theta = cf.theta_m(m) if args.what == "theta" else theta_prime(m)
    _write(render_derivation(theta, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multiarr",
        description="Bases of derivation modules of rank-2 multiarrangements.",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json", "latex"), default="text"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write to this file instead of stdout")

    b = sub.add_parser("basis", help="explicit basis of D(A, m)")
    b.add_argument("arrangement", choices=("b2", "a2", "custom"))
    b.add_argument("multiplicity", help="comma-separated naturals, e.g. 1,1,1,1")
    b.add_argument("--forms", help='custom forms "a1,b1;a2,b2;..." for a1 x + b1 y, ...')
    b.add_argument("--fallback-oracle", action="store_true")
    b.add_argument("--no-recheck", action="store_true")
    common(b)
    b.set_defaults(func=cmd_basis)

    o = sub.add_parser("oracle", help="basis and exponents by exact linear algebra")
    o.add_argument("arrangement", choices=("b2", "a2", "custom"))
    o.add_argument("multiplicity")
    o.add_argument("--forms")
    o.add_argument("--profile", type=int, metavar="DMAX",
                   help="also print graded dimensions for degrees 0..DMAX")
    common(o)
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="check closed forms against the oracle")
    v.add_argument("--max-sum", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("emit", help="render a single derivation or a saved record")
    e.add_argument("what", choices=("theta", "theta-prime", "euler", "record"))
    e.add_argument("arg", nargs="?", help="multiplicity, or JSON file for 'record'")
    common(e, default="latex")
    e.set_defaults(func=cmd_emit)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except CaseNotCovered as exc:
        log.error("not covered: %s (try --fallback-oracle)", exc)
        return EXIT_NOT_COVERED
    except (HypothesisViolation, MultiarrError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
