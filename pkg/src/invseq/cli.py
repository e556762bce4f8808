"""Command-line surface tying the enumeration modules together.

Commands: count, series, classify, asymptotics, words, verify-all.
Output formats: a human-readable table, json-lines (one JSON object per
row), and the OEIS b-file format ("<index> <value>" per line, no header).
Exit status is 0 only when every requested verification passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import combinat
from .analysis import (
    GROWTH_REFERENCE,
    classify_triples,
    estimate_growth,
    fit_stretched,
)
from .core import PatternSet, RelationTriple, triple_to_pattern_set
from .gentree import ClassId, count_class
from .oracle import BOUND_ENV_VAR, WordConstraint, count_avoiders, count_words
from .series import (
    CATALYTIC_CLASSES,
    CLOSED_FORM_CLASSES,
    CUBIC_KERNELS,
    MINIMAL_POLYNOMIAL_DEGREE,
    TruncatedSeries,
    expand_closed_form,
    iterate_catalytic,
    kernel_root,
    verify_minimal_polynomial,
)

FORMATS = ("table", "json-lines", "b-file")


def _emit_rows(rows: Iterable[dict], fmt: str, keys: Sequence[str]) -> None:
    """Print rows in the requested format.

    b-file uses the first two keys as index and value; the table format
    prints space-separated values in key order.
    """
    if fmt == "json-lines":
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    elif fmt == "b-file":
        for r in rows:
            print(f"{r[keys[0]]} {r[keys[1]]}")
    else:
        for r in rows:
            print(" ".join(str(r[k]) for k in keys))


def _parse_class(text: str) -> ClassId:
    try:
        return ClassId.parse(text)
    except (KeyError, ValueError) as exc:
        raise SystemExit(f"error: unknown class {text!r}") from exc


def _patterns_for(args) -> PatternSet:
    if args.class_id is not None:
        return _parse_class(args.class_id).patterns
    if args.triple is not None:
        return triple_to_pattern_set(RelationTriple.parse(args.triple))
    return PatternSet.of(*args.patterns)


def cmd_count(args) -> int:
    engine = args.engine
    if engine is None:
        engine = "gentree" if args.class_id is not None else "oracle"
    if engine == "gentree":
        if args.class_id is None:
            raise SystemExit("error: the gentree engine needs --class")
        counts = count_class(_parse_class(args.class_id), args.n)
    else:
        patterns = _patterns_for(args)
        counts = [count_avoiders(n, patterns, args.bound) for n in range(args.n + 1)]
    rows = [{"n": n, "count": c} for n, c in enumerate(counts)]
    _emit_rows(rows, args.format, ("n", "count"))
    return 0


def cmd_series(args) -> int:
    cid = _parse_class(args.class_id)
    order = args.order + 1  # coefficients through z^order
    reference = count_class(cid, args.order)
    if args.source == "catalytic":
        if cid not in CATALYTIC_CLASSES:
            raise SystemExit(f"error: no catalytic system for class {cid.value}")
        coeffs = iterate_catalytic(cid, order)
    else:
        if cid not in CLOSED_FORM_CLASSES:
            raise SystemExit(f"error: no closed form for class {cid.value}")
        coeffs = expand_closed_form(cid, order)
    rows = [{"n": n, "coefficient": str(c)} for n, c in enumerate(coeffs)]
    _emit_rows(rows, args.format, ("n", "coefficient"))
    ok = [Fraction(c) for c in coeffs] == [Fraction(c) for c in reference]
    verdicts = [("series matches counts", ok)]
    if args.verify_minpoly:
        if cid not in MINIMAL_POLYNOMIAL_DEGREE:
            raise SystemExit(f"error: no stored annihilator for class {cid.value}")
        verdicts.append(
            (
                f"annihilator degree {MINIMAL_POLYNOMIAL_DEGREE[cid]}",
                verify_minimal_polynomial(cid, reference),
            )
        )
    failed = False
    for name, good in verdicts:
        failed |= not good
        if args.format == "json-lines":
            print(json.dumps({"check": name, "ok": good}, sort_keys=True))
        else:
            print(f"verdict {'OK' if good else 'FAIL'}: {name}")
    return 1 if failed else 0


def cmd_classify(args) -> int:
    tc = classify_triples(args.max_n, args.bound)
    wilf_of = {}
    for vec, members in tc.wilf_classes.items():
        for ps in members:
            wilf_of[ps] = vec
    rows = []
    for ps in sorted(tc.pattern_classes, key=str):
        vec = wilf_of[ps]
        rows.append(
            {
                "representative": str(ps),
                "n_triples": len(tc.pattern_classes[ps]),
                "counts": list(vec),
            }
        )
    if args.format == "json-lines":
        for r in rows:
            print(json.dumps(r, sort_keys=True))
        print(
            json.dumps(
                {
                    "triples": tc.n_triples,
                    "equivalence_classes": tc.n_pattern_classes,
                    "wilf_classes": tc.n_wilf_classes,
                },
                sort_keys=True,
            )
        )
    else:
        for r in rows:
            print(f"{r['representative']} triples={r['n_triples']} counts={r['counts']}")
        print(f"total triples {tc.n_triples}")
        print(f"equivalence classes {tc.n_pattern_classes}")
        print(f"wilf classes {tc.n_wilf_classes}")
    return 0


def cmd_asymptotics(args) -> int:
    cid = _parse_class(args.class_id)
    info = GROWTH_REFERENCE[cid]
    model = args.model
    if model is None:
        model = "stretched" if info.stretched else "algebraic"
    counts = count_class(cid, args.terms)
    if model == "stretched":
        fit = fit_stretched(counts, info.mu)
        row = {
            "class": cid.value,
            "model": "stretched",
            "base": fit.base,
            "sigma": fit.sigma,
            "exponent": fit.exponent,
            "log_mu1": fit.log_mu1,
            "residual": fit.residual,
        }
    else:
        est = estimate_growth(counts, args.points)
        row = {
            "class": cid.value,
            "model": "algebraic",
            "mu": est.mu,
            "exponent": est.exponent,
            "reference_mu": info.mu,
            "relative_error": abs(est.mu - info.mu) / info.mu,
        }
    if args.format == "json-lines":
        print(json.dumps(row, sort_keys=True))
    else:
        for k, v in row.items():
            print(f"{k} {v}")
    return 0


WORD_RULESETS = {
    "R1R2": (("212", "112", "213"), combinat.words_R1R2),
    "R1R3": (("111", "212", "112", "213"), combinat.words_R1R3),
}


def cmd_words(args) -> int:
    forbidden, formula = WORD_RULESETS[args.rules]
    expected = formula(args.k, args.b)
    constraint = WordConstraint.of(args.k, args.b, forbidden, surjective=True)
    actual = count_words(constraint, args.bound)
    row = {
        "k": args.k,
        "b": args.b,
        "rules": args.rules,
        "formula": expected,
        "enumerated": actual,
        "ok": expected == actual,
    }
    if args.format == "json-lines":
        print(json.dumps(row, sort_keys=True))
    else:
        print(f"formula {expected}")
        print(f"enumerated {actual}")
        print(f"verdict {'OK' if row['ok'] else 'FAIL'}")
    return 0 if row["ok"] else 1


def _check_rules_vs_oracle(n_max: int) -> bool:
    for cid in ClassId:
        counts = count_class(cid, n_max)
        for n in range(n_max + 1):
            if counts[n] != count_avoiders(n, cid.patterns):
                return False
    return True


def _check_series_agreement(order: int) -> bool:
    for cid in CLOSED_FORM_CLASSES:
        reference = count_class(cid, order - 1)
        if [Fraction(c) for c in expand_closed_form(cid, order)] != reference:
            return False
        if cid in CATALYTIC_CLASSES and iterate_catalytic(cid, order) != reference:
            return False
    return True


def _check_minimal_polynomials(order: int) -> bool:
    return all(
        verify_minimal_polynomial(cid, count_class(cid, order - 1))
        for cid in MINIMAL_POLYNOMIAL_DEGREE
    )


def _check_kernel_roots(order: int) -> bool:
    for cid, polys in CUBIC_KERNELS.items():
        ks = [TruncatedSeries.from_poly(p, order) for p in polys]
        x = kernel_root(ks, 1, order)
        if cid == ClassId.C1420 and [int(c) for c in x.coeffs[:5]] != [1, 2, 5, 17, 64]:
            return False
        acc = TruncatedSeries([Fraction(0)], order)
        for k in reversed(ks):
            acc = acc * x + k
        if not acc.is_zero():
            return False
    return True


def _check_words(k_max: int) -> bool:
    for k in range(1, k_max + 1):
        for b in range(1, k + 1):
            for rules, (forbidden, formula) in WORD_RULESETS.items():
                constraint = WordConstraint.of(k, b, forbidden, surjective=True)
                if formula(k, b) != count_words(constraint, max(k, b)):
                    return False
    for ell in range(13):
        for b in range(ell + 1):
            if combinat.multiplicity_m(ell, b) != sum(
                combinat.words_R1R2(k, b) for k in range(b, ell + 1)
            ):
                return False
            if combinat.multiplicity_w(ell, b) != combinat.words_R1R3(
                ell - 1, b
            ) + combinat.words_R1R3(ell, b):
                return False
    return True


def _check_classification() -> bool:
    tc = classify_triples()
    return (
        tc.n_triples == 343
        and tc.n_pattern_classes == 98
        and tc.n_wilf_classes == 63
    )


def cmd_verify_all(args) -> int:
    checks = [
        ("succession rules vs oracle", lambda: _check_rules_vs_oracle(args.n)),
        ("closed forms vs counts", lambda: _check_series_agreement(args.order)),
        ("minimal polynomials", lambda: _check_minimal_polynomials(args.order)),
        ("kernel roots", lambda: _check_kernel_roots(args.order)),
        ("word formulas", lambda: _check_words(args.max_k)),
        ("triple classification", _check_classification),
    ]
    failed = False
    for name, run in checks:
        ok = run()
        failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 1 if failed else 0


def _add_format(p: argparse.ArgumentParser, choices=FORMATS, default="table") -> None:
    p.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invseq",
        description="Exact enumeration of pattern-avoiding inversion sequences.",
        epilog=f"The {BOUND_ENV_VAR} environment variable sets the default "
        "exhaustive-search bound; --bound flags override it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="counting sequence of an avoidance class")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--class", dest="class_id", metavar="ID")
    sel.add_argument("--patterns", nargs="+", metavar="PAT")
    sel.add_argument("--triple", metavar="R1,R2,R3")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=("gentree", "oracle"))
    p.add_argument("--bound", type=int)
    _add_format(p, default="b-file")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("series", help="generating-function coefficients")
    p.add_argument("--class", dest="class_id", required=True, metavar="ID")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--source", choices=("closed-form", "catalytic"), default="closed-form")
    p.add_argument("--verify-minpoly", action="store_true")
    _add_format(p, default="b-file")
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("classify", help="group the 343 relation triples")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--bound", type=int)
    _add_format(p, choices=("table", "json-lines"))
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("asymptotics", help="growth-rate fit of a class")
    p.add_argument("--class", dest="class_id", required=True, metavar="ID")
    p.add_argument("--terms", type=int, default=210)
    p.add_argument("--model", choices=("algebraic", "stretched"))
    p.add_argument("--points", type=int, default=10)
    _add_format(p, choices=("table", "json-lines"))
    p.set_defaults(run=cmd_asymptotics)

    p = sub.add_parser("words", help="commitment-word formulas vs enumeration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--rules", choices=tuple(WORD_RULESETS), required=True)
    p.add_argument("--bound", type=int)
    _add_format(p, choices=("table", "json-lines"))
    p.set_defaults(run=cmd_words)

    p = sub.add_parser("verify-all", help="run the full verification battery")
    p.add_argument("--n", type=int, default=7, help="rule-vs-oracle depth")
    p.add_argument("--order", type=int, default=31, help="series order")
    p.add_argument("--max-k", type=int, default=7, help="word-length cap")
    p.set_defaults(run=cmd_verify_all)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
