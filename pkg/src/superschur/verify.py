"""Exhaustive small-case sweeps for the conjectured identities.

Each check pits two independently computed sides of an identity against
each other over every instance inside the given degree bounds, and
returns a report.  A failing instance never aborts the sweep; every
counterexample inside the bounds is collected with enough data to replay
it.  The two sides of a check always go through disjoint code paths
(tableau enumeration vs. polynomial arithmetic vs. diagram products), so
agreement is evidence and disagreement is diagnosable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from .dual_tableaux import dual_schur_poly, kostka
from .pieri import (
    StripSpec,
    inv_sign,
    pieri_multi_P,
    pieri_multi_Ptilde,
    pieri_product,
)
from .superpartition import (
    SuperPartition,
    dominance_leq,
    enumerate_superpartitions,
    from_parts,
)
from .superpoly import (
    extract_expansion,
    multiplicative_basis,
    multiply,
    omega,
    scalar_product_11,
)
from .tableaux import schur_expand, schur_poly


@dataclass
class VerificationReport:
    name: str
    bounds: dict[str, int]
    status: str
    counterexamples: list[dict] = field(default_factory=list)
    seconds: float = 0.0
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "bounds": self.bounds,
            "status": self.status,
            "checked": self.checked,
            "seconds": round(self.seconds, 3),
            "counterexamples": self.counterexamples,
        }

    def summary(self) -> str:
        bounds = " ".join(f"{key}<={val}" for key, val in self.bounds.items())
        head = (
            f"{self.name}: {self.status} "
            f"({self.checked} cases, {bounds}, {self.seconds:.1f}s)"
        )
        if self.passed:
            return head
        lines = [head]
        for bad in self.counterexamples[:5]:
            lines.append(
                f"  {bad['inputs']}: expected {bad['expected']}, got {bad['got']}"
            )
        extra = len(self.counterexamples) - 5
        if extra > 0:
            lines.append(f"  ... and {extra} more")
        return "\n".join(lines)


def _finish(name, bounds, start, counterexamples, checked) -> VerificationReport:
    return VerificationReport(
        name=name,
        bounds=bounds,
        status="pass" if not counterexamples else "fail",
        counterexamples=counterexamples,
        seconds=perf_counter() - start,
        checked=checked,
    )


def _degrees(n_max: int, m_max: int):
    for n in range(n_max + 1):
        for m in range(m_max + 1):
            yield n, m


# -- Pieri products against the polynomial oracle ----------------------------


def _sweep_strips(r_max: int) -> list[StripSpec]:
    strips = [StripSpec(0, "row", True)]
    for r in range(1, r_max + 1):
        strips += [
            StripSpec(r, "row", False),
            StripSpec(r, "row", True),
            StripSpec(r, "column", False),
            StripSpec(r, "column", True),
        ]
    return strips


def faithful_vars(boxes: int, circles: int) -> int:
    """Number of variables at which no label of bidegree (boxes|circles) is
    truncated: the longest such label has one row per circle plus single-box
    bosonic rows for whatever the minimal circled rows leave over."""
    return max(boxes + circles - circles * (circles - 1) // 2, 1)


def product_by_polynomials(lam: SuperPartition, strip: StripSpec, _cache=None):
    """Schur expansion of the product computed with no diagram rule at all:
    multiply the two polynomials and re-expand."""
    n_vars = faithful_vars(
        lam.n + strip.r, lam.m + (1 if strip.fermionic else 0)
    )
    if _cache is None:
        left = schur_poly(lam, n_vars)
        right = schur_poly(strip.label, n_vars)
    else:
        for label in (lam, strip.label):
            if (label, n_vars) not in _cache:
                _cache[label, n_vars] = schur_poly(label, n_vars)
        left = _cache[lam, n_vars]
        right = _cache[strip.label, n_vars]
    poly = multiply(left, right)
    return {
        label: coeff
        for label, coeff in schur_expand(extract_expansion(poly)).items()
        if coeff
    }


def verify_pieri(n_max: int = 4, m_max: int = 2, r_max: int = 3) -> VerificationReport:
    start = perf_counter()
    bad: list[dict] = []
    checked = 0
    strips = _sweep_strips(r_max)
    cache: dict = {}
    for n, m in _degrees(n_max, m_max):
        for lam in enumerate_superpartitions(n, m):
            for strip in strips:
                expected = product_by_polynomials(lam, strip, cache)
                got = {t.label: t.sign for t in pieri_product(lam, strip)}
                checked += 1
                if got != expected:
                    bad.append(
                        {
                            "inputs": f"{lam} x {strip}",
                            "expected": _format_terms(expected),
                            "got": _format_terms(got),
                        }
                    )
    return _finish(
        "pieri", {"n": n_max, "m": m_max, "r": r_max}, start, bad, checked
    )


def _format_terms(terms: dict) -> str:
    if not terms:
        return "0"
    ordered = sorted(terms.items(), key=lambda kv: kv[0].sort_key, reverse=True)
    return " ".join(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{lam}"
                    for lam, c in ordered)


# -- duality of the two Schur families ---------------------------------------


def verify_duality(n_max: int = 4, m_max: int = 2) -> VerificationReport:
    start = perf_counter()
    bad: list[dict] = []
    checked = 0
    for n, m in _degrees(n_max, m_max):
        labels = enumerate_superpartitions(n, m)
        n_vars = max(n + m, 1)
        starred = {
            lam: omega(dual_schur_poly(lam.conjugate, n_vars)) for lam in labels
        }
        straight = {om: schur_poly(om, n_vars) for om in labels}
        for lam in labels:
            for om in labels:
                value = scalar_product_11(starred[lam], straight[om])
                expected = Fraction(1 if lam == om else 0)
                checked += 1
                if value != expected:
                    bad.append(
                        {
                            "inputs": f"<s*_{lam}, s_{om}>",
                            "expected": str(expected),
                            "got": str(value),
                        }
                    )
    return _finish("duality", {"n": n_max, "m": m_max}, start, bad, checked)


# -- the H basis expands over Schur with dual Kostka coefficients -------------


def verify_H_expansion(n_max: int = 4, m_max: int = 2) -> VerificationReport:
    start = perf_counter()
    bad: list[dict] = []
    checked = 0
    for n, m in _degrees(n_max, m_max):
        labels = enumerate_superpartitions(n, m)
        n_vars = max(n + m, 1)
        for lam in labels:
            h_poly = multiplicative_basis(lam, "H", n_vars)
            got = {
                om: coeff
                for om, coeff in schur_expand(extract_expansion(h_poly)).items()
                if coeff
            }
            expected = {}
            for om in labels:
                count = kostka(om, lam)
                if count:
                    expected[om] = count
            checked += 1
            if got != expected:
                bad.append(
                    {
                        "inputs": f"H_{lam}",
                        "expected": _format_terms(expected),
                        "got": _format_terms(got),
                    }
                )
            elif not all(dominance_leq(lam, om) for om in got):
                low = [om for om in got if not dominance_leq(lam, om)]
                bad.append(
                    {
                        "inputs": f"H_{lam}",
                        "expected": "support above the label in dominance",
                        "got": f"support contains {low[0]}",
                    }
                )
    return _finish("h-basis", {"n": n_max, "m": m_max}, start, bad, checked)


# -- bilinear identities ------------------------------------------------------


def bilinear_instances(k: int, n: int):
    """The conjectured two-term product identities at the given rectangle
    size: (name, lhs pair, [(coeff, pair), (coeff, pair)]).

    Naming: BilSchur is the circle-free rectangle identity; SBil1-SBil3 add
    one, two, and a zero-width circle row to it; SBila-SBild cover the
    almost-rectangular shapes whose circle rows hug the rectangle corner.
    """

    def sp(fer, bos):
        return from_parts(tuple(fer), tuple(p for p in bos if p))

    rect = lambda w, h: sp((), (w,) * h)  # noqa: E731

    yield (
        f"BilSchur k={k} n={n}",
        (rect(k, n), rect(k, n)),
        [(1, (rect(k + 1, n), rect(k - 1, n))), (1, (rect(k, n + 1), rect(k, n - 1)))],
    )
    for r in (k, k - 1, 0):
        eps = 1 if r == 0 else 0
        yield (
            f"SBil1 k={k} n={n} r={r}",
            (sp((r,), (k,) * (n - 1 + eps)), rect(k, n)),
            [
                (1, (sp((r + 1 - eps,), (k + 1,) * (n - 1 + eps)), rect(k - 1, n))),
                (1, (sp((r,), (k,) * (n + eps)), rect(k, n - 1))),
            ],
        )
    for r_hi, r_lo in ((k, k - 1), (k, 0), (k - 1, 0)):
        eps = 1 if r_lo == 0 else 0
        yield (
            f"SBil2 k={k} n={n} r'={r_hi} r={r_lo}",
            (sp((r_hi,), (k,) * (n - 1)), sp((r_lo,), (k,) * (n - 1 + eps))),
            [
                (
                    1,
                    (
                        sp((r_hi + 1, r_lo + 1 - eps), (k + 1,) * (n - 2 + eps)),
                        rect(k - 1, n),
                    ),
                ),
                (1, (sp((r_hi, r_lo), (k,) * (n - 1 + eps)), rect(k, n - 1))),
            ],
        )
    yield (
        f"SBil3 k={k} n={n}",
        (sp((k, 0), (k,) * (n - 1)), rect(k, n)),
        [
            (1, (sp((k + 1, 0), (k + 1,) * (n - 1)), rect(k - 1, n))),
            (1, (sp((k, 0), (k,) * n), rect(k, n - 1))),
        ],
    )
    # The lone minus sign in the family: the odd-odd product on the right
    # anticommutes, so the sign rides on the factor order fixed here.
    yield (
        f"SBila k={k} n={n}",
        (sp((k, k - 1), (k,) * (n - 2)), rect(k, n)),
        [
            (1, (sp((k + 1, k), (k + 1,) * (n - 2)), rect(k - 1, n))),
            (-1, (sp((k - 1,), (k,) * n), sp((k,), (k,) * (n - 2)))),
        ],
    )
    yield (
        f"SBilb k={k} n={n}",
        (sp((k - 1, 0), (k,) * (n - 1)), rect(k, n)),
        [
            (1, (sp((k, 0), (k + 1,) * (n - 1)), rect(k - 1, n))),
            (1, (sp((k - 1,), (k,) * n), sp((0,), (k,) * (n - 1)))),
        ],
    )
    yield (
        f"SBilc k={k} n={n}",
        (sp((k, k - 1), (k,) * (n - 2)), sp((0,), (k,) * n)),
        [
            (1, (sp((k + 1, k, 0), (k + 1,) * (n - 2)), rect(k - 1, n))),
            (1, (sp((k - 1, 0), (k,) * n), sp((k,), (k,) * (n - 2)))),
        ],
    )
    yield (
        f"SBild k={k} n={n}",
        (sp((k, k - 1, 0), (k,) * (n - 2)), rect(k, n)),
        [
            (1, (sp((k + 1, k), (k + 1,) * (n - 2)), sp((0,), (k - 1,) * n))),
            (1, (sp((k - 1, 0), (k,) * n), sp((k,), (k,) * (n - 2)))),
        ],
    )


def verify_bilinear(k_max: int = 3, n_max: int = 3) -> VerificationReport:
    start = perf_counter()
    bad: list[dict] = []
    checked = 0
    cache: dict = {}
    products: dict = {}

    def poly(label: SuperPartition, n_vars: int):
        key = (label, n_vars)
        if key not in cache:
            cache[key] = schur_poly(label, n_vars)
        return cache[key]

    def product(a: SuperPartition, b: SuperPartition, n_vars: int):
        key = (a, b, n_vars)
        if key not in products:
            products[key] = multiply(poly(a, n_vars), poly(b, n_vars))
        return products[key]

    for k in range(2, k_max + 1):
        for n in range(2, n_max + 1):
            for name, lhs, rhs in bilinear_instances(k, n):
                pairs = [lhs] + [pair for _, pair in rhs]
                # enough variables to see every label either product can reach
                n_vars = max(a.length + b.length for a, b in pairs)
                total = product(lhs[0], lhs[1], n_vars)
                for coeff, (a, b) in rhs:
                    total = total - product(a, b, n_vars).scaled(coeff)
                checked += 1
                if not total.is_zero():
                    residue = extract_expansion(total, verify=False)
                    sample = sorted(residue, key=lambda s: s.sort_key, reverse=True)
                    bad.append(
                        {
                            "inputs": name,
                            "expected": "0",
                            "got": f"{len(residue)} residual labels, e.g. {sample[0]}",
                        }
                    )
    return _finish("bilinear", {"k": k_max, "n": n_max}, start, bad, checked)


# -- Kostka numbers by three routes ------------------------------------------


def verify_kostka_pieri(n_max: int = 4, m_max: int = 2) -> VerificationReport:
    start = perf_counter()
    bad: list[dict] = []
    checked = 0
    for n, m in _degrees(n_max, m_max):
        labels = enumerate_superpartitions(n, m)
        for content in labels:
            signed_tabs = pieri_multi_P(content)
            plain_tabs = pieri_multi_Ptilde(content)
            for shape in labels:
                reference = kostka(shape, content)
                signed = sum(
                    inv_sign(t) for t in signed_tabs if t.shape == shape
                )
                plain = sum(1 for t in plain_tabs if t.shape == shape)
                checked += 1
                if not (reference == signed == plain):
                    bad.append(
                        {
                            "inputs": f"K[{shape}, {content}]",
                            "expected": str(reference),
                            "got": f"signed {signed}, unsigned {plain}",
                        }
                    )
    return _finish("kostka-pieri", {"n": n_max, "m": m_max}, start, bad, checked)


ALL_CHECKS = {
    "pieri": verify_pieri,
    "duality": verify_duality,
    "h-basis": verify_H_expansion,
    "bilinear": verify_bilinear,
    "kostka-pieri": verify_kostka_pieri,
}


def render_reports(reports: list[VerificationReport], as_json: bool = False) -> str:
    if as_json:
        return json.dumps([r.to_json() for r in reports], indent=2)
    return "\n".join(r.summary() for r in reports)
