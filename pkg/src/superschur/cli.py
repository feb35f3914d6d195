"""Command-line surface for the library.

Labels use the same wire syntax everywhere: fermionic parts left of the
semicolon, bosonic parts right of it, e.g. "(3,0;4,1)".  Strip arguments
are "(;r)" / "(r;)" for row strips and "(;1^r)" / "(0;1^r)" for column
strips.  Every listing is printed in descending label order so runs are
reproducible; --json switches to a machine-readable rendering of the same
data and --out sends it to a file instead of stdout.

Exit codes: 0 on success, 1 when a verify sweep finds a counterexample,
2 on unusable input (bad syntax, bad flags), with a message on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .dual_tableaux import dual_schur_comb, enumerate_dual, kostka
from .pieri import parse_strip, pieri_product
from .superpartition import SuperPartition, enumerate_superpartitions, parse
from .superpoly import extract_expansion, multiply
from .tableaux import (
    enumerate_tableaux,
    kostka_bar,
    schur_comb,
    schur_expand,
    schur_poly,
)
from .verify import ALL_CHECKS, faithful_vars


def _ordered(terms: dict) -> list[tuple[SuperPartition, int | Fraction]]:
    return sorted(terms.items(), key=lambda kv: kv[0].sort_key, reverse=True)


def _as_int(coeff) -> int:
    if isinstance(coeff, Fraction):
        if coeff.denominator != 1:
            raise ValueError(f"non-integer coefficient {coeff}")
        return coeff.numerator
    return int(coeff)


def _expansion_payload(basis: str, degree: tuple[int, int], terms: dict) -> dict:
    return {
        "basis": basis,
        "degree": [degree[0], degree[1]],
        "terms": [
            {"label": str(lam), "coeff": _as_int(c)} for lam, c in _ordered(terms)
        ],
    }


def _expansion_text(terms: dict) -> str:
    if not terms:
        return "0"
    return "\n".join(f"{lam} {_as_int(c)}" for lam, c in _ordered(terms))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _check_n_vars(n_vars: int | None) -> None:
    if n_vars is not None and n_vars < 1:
        raise ValueError("--n-vars must be at least 1")


# -- subcommand bodies --------------------------------------------------------


def _cmd_expand(args) -> int:
    _check_n_vars(args.n_vars)
    label = parse(args.label)
    comb = dual_schur_comb(label) if args.family == "dual-schur" else schur_comb(label)
    terms = {
        om: c
        for om, c in comb.items()
        if c and (args.n_vars is None or om.length <= args.n_vars)
    }
    if args.json:
        _emit(json.dumps(_expansion_payload("m", label.degree, terms)), args.out)
    else:
        _emit(_expansion_text(terms), args.out)
    return 0


def _cmd_kostka(args) -> int:
    shape = parse(args.shape)
    content = parse(args.content)
    value = (kostka if args.dual else kostka_bar)(shape, content)
    if args.json:
        payload = {
            "shape": str(shape),
            "content": str(content),
            "dual": args.dual,
            "value": value,
        }
        _emit(json.dumps(payload), args.out)
    else:
        _emit(str(value), args.out)
    return 0


def _cmd_kostka_matrix(args) -> int:
    if args.n < 0 or args.m < 0:
        raise ValueError("degree components must be non-negative")
    labels = sorted(
        enumerate_superpartitions(args.n, args.m),
        key=lambda lam: lam.sort_key,
        reverse=True,
    )
    count = kostka if args.dual else kostka_bar
    matrix = [[count(shape, content) for content in labels] for shape in labels]
    if args.json:
        payload = {
            "degree": [args.n, args.m],
            "dual": args.dual,
            "labels": [str(lam) for lam in labels],
            "matrix": matrix,
        }
        _emit(json.dumps(payload), args.out)
        return 0
    names = [str(lam) for lam in labels]
    width = max((len(s) for s in names), default=1)
    cols = [max(width, 1) for _ in names]
    lines = [" " * width + "  " + "  ".join(n.rjust(w) for n, w in zip(names, cols))]
    for name, row in zip(names, matrix):
        cells = "  ".join(str(v).rjust(w) for v, w in zip(row, cols))
        lines.append(f"{name.rjust(width)}  {cells}")
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_tableaux_list(args) -> int:
    _check_n_vars(args.n_vars)
    shape = parse(args.shape)
    content = parse(args.content) if args.content else None
    if content is None and args.n_vars is None:
        raise ValueError("need --content or --n-vars for a finite listing")
    enumerate_fn = enumerate_dual if args.dual else enumerate_tableaux
    tabs = enumerate_fn(shape, n_values=args.n_vars, content=content)
    if args.json:
        payload = {
            "shape": str(shape),
            "content": str(content) if content else None,
            "dual": args.dual,
            "count": len(tabs),
            "tableaux": [str(tab).splitlines() for tab in tabs],
        }
        _emit(json.dumps(payload), args.out)
        return 0
    blocks = [f"{len(tabs)} tableaux"]
    blocks.extend(str(tab) for tab in tabs)
    _emit("\n\n".join(blocks), args.out)
    return 0


def _cmd_pieri(args) -> int:
    lam = parse(args.label)
    strip = parse_strip(args.strip)
    terms = pieri_product(lam, strip)
    degree = (lam.n + strip.r, lam.m + (1 if strip.fermionic else 0))
    if args.json:
        payload = _expansion_payload("s", degree, {t.label: t.sign for t in terms})
        _emit(json.dumps(payload), args.out)
        return 0
    if not terms:
        _emit("0", args.out)
        return 0
    _emit("\n".join(f"{'+' if t.sign > 0 else '-'}{t.label}" for t in terms), args.out)
    return 0


def _cmd_product(args) -> int:
    _check_n_vars(args.n_vars)
    left = parse(args.left)
    right = parse(args.right)
    boxes = left.n + right.n
    circles = left.m + right.m
    n_vars = args.n_vars if args.n_vars is not None else faithful_vars(boxes, circles)
    poly = multiply(schur_poly(left, n_vars), schur_poly(right, n_vars))
    expansion = schur_expand(extract_expansion(poly), n_vars=n_vars)
    terms = {om: c for om, c in expansion.items() if c}
    if args.json:
        payload = _expansion_payload("s", (boxes, circles), terms)
        _emit(json.dumps(payload), args.out)
    else:
        _emit(_expansion_text(terms), args.out)
    return 0


_BOUND_FLAGS = {
    "pieri": {"max_n": "n_max", "max_m": "m_max", "max_r": "r_max"},
    "duality": {"max_n": "n_max", "max_m": "m_max"},
    "h-basis": {"max_n": "n_max", "max_m": "m_max"},
    "kostka-pieri": {"max_n": "n_max", "max_m": "m_max"},
    "bilinear": {"max_k": "k_max", "max_n": "n_max"},
}


def _cmd_verify(args) -> int:
    mapping = _BOUND_FLAGS[args.check]
    kwargs = {}
    for flag in ("max_n", "max_m", "max_k", "max_r"):
        value = getattr(args, flag)
        if value is None:
            continue
        if flag not in mapping:
            raise ValueError(
                f"--{flag.replace('_', '-')} does not apply to check '{args.check}'"
            )
        if value < 0:
            raise ValueError(f"--{flag.replace('_', '-')} must be non-negative")
        kwargs[mapping[flag]] = value
    report = ALL_CHECKS[args.check](**kwargs)
    if args.json:
        _emit(json.dumps(report.to_json(), indent=2), args.out)
    else:
        _emit(report.summary(), args.out)
    return 0 if report.passed else 1


# -- argv plumbing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superschur",
        description="Exact arithmetic for the two Schur superpolynomial families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--out", metavar="FILE", help="write output to FILE")

    p = sub.add_parser("expand", help="monomial expansion of one family member")
    p.add_argument("family", choices=["schur", "dual-schur"])
    p.add_argument("label", help='e.g. "(3,0;4,1)"')
    p.add_argument("--n-vars", type=int, dest="n_vars", help="restrict to N variables")
    common(p)

    p = sub.add_parser("kostka", help="one Kostka coefficient")
    p.add_argument("--dual", action="store_true", help="dual-family coefficient")
    p.add_argument("--shape", required=True)
    p.add_argument("--content", required=True)
    common(p)

    p = sub.add_parser("kostka-matrix", help="all Kostka coefficients at one degree")
    p.add_argument("n", type=int, help="total box weight")
    p.add_argument("m", type=int, help="number of circles")
    p.add_argument("--dual", action="store_true", help="dual-family coefficients")
    common(p)

    p = sub.add_parser("tableaux", help="tableau listings")
    tsub = p.add_subparsers(dest="tableaux_command", required=True)
    tp = tsub.add_parser("list", help="every valid filling of a shape")
    tp.add_argument("--dual", action="store_true", help="dual filling rules")
    tp.add_argument("--shape", required=True)
    tp.add_argument("--content", help="pin the value counts to this label")
    tp.add_argument("--n-vars", type=int, dest="n_vars", help="values range over 1..N")
    common(tp)

    p = sub.add_parser("pieri", help="product with a one-line label, by the strip rule")
    p.add_argument("label")
    p.add_argument("strip", help='"(;r)", "(r;)", "(;1^r)" or "(0;1^r)"')
    common(p)

    p = sub.add_parser("product", help="product of two members via polynomial arithmetic")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--basis", choices=["schur"], required=True)
    p.add_argument("--n-vars", type=int, dest="n_vars", help="evaluate in N variables")
    common(p)

    p = sub.add_parser("verify", help="run one identity sweep and report")
    p.add_argument("check", choices=sorted(ALL_CHECKS))
    p.add_argument("--max-n", type=int, dest="max_n", help="degree/height bound")
    p.add_argument("--max-m", type=int, dest="max_m", help="circle-count bound")
    p.add_argument("--max-k", type=int, dest="max_k", help="rectangle-width bound")
    p.add_argument("--max-r", type=int, dest="max_r", help="strip-size bound")
    common(p)

    return parser


_HANDLERS = {
    "expand": _cmd_expand,
    "kostka": _cmd_kostka,
    "kostka-matrix": _cmd_kostka_matrix,
    "pieri": _cmd_pieri,
    "product": _cmd_product,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        if args.command == "tableaux":
            return _cmd_tableaux_list(args)
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
