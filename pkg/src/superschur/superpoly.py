"""Exact sparse polynomials in N commuting and N anticommuting variables.

A term is keyed by ``(thetas, exponents)`` where ``thetas`` is the ascending
tuple of 1-based indices of the anticommuting variables present and
``exponents`` has one entry per commuting variable.  Coefficients are exact
(int or Fraction); zero coefficients are pruned.  The anticommuting sign
bookkeeping happens once, in multiplication, as the parity of merging the two
ascending index tuples.

The monomial basis m_Lambda, the multiplicative p/e/h/H bases, the expansion
extractor and the degree-(1,1) scalar product / omega involution all live
here; they form the independent cross-check route for everything the tableau
modules produce.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator

from superschur.superpartition import (
    SuperPartition,
    enumerate_superpartitions,
)

Coeff = int | Fraction
TermKey = tuple[tuple[int, ...], tuple[int, ...]]


def _merge_thetas(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Merge two ascending index tuples; None on collision.

    Returns (sign, merged) where sign is -1 to the number of transpositions
    needed to interleave b into a.
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return None
    inversions = 0
    for y in b:
        # elements of a strictly greater than y must jump over y
        inversions += len(a) - bisect_right(a, y)
    merged = tuple(sorted(a + b))
    return (-1) ** inversions, merged


class SuperPolynomial:
    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: dict[TermKey, Coeff] | None = None):
        self.n_vars = n_vars
        self.terms: dict[TermKey, Coeff] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = coeff

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> "SuperPolynomial":
        return cls(n_vars)

    @classmethod
    def one(cls, n_vars: int) -> "SuperPolynomial":
        return cls(n_vars, {((), (0,) * n_vars): 1})

    # -- ring operations ----------------------------------------------------

    def _require_same_ring(self, other: "SuperPolynomial") -> None:
        if self.n_vars != other.n_vars:
            raise ValueError(f"mixed variable counts: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._require_same_ring(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return SuperPolynomial(self.n_vars, out)

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(self.n_vars, {k: -c for k, c in self.terms.items()})

    def scaled(self, factor: Coeff) -> "SuperPolynomial":
        if not factor:
            return SuperPolynomial.zero(self.n_vars)
        return SuperPolynomial(self.n_vars, {k: factor * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        self._require_same_ring(other)
        out: dict[TermKey, Coeff] = {}
        for (t1, e1), c1 in self.terms.items():
            for (t2, e2), c2 in other.terms.items():
                merged = _merge_thetas(t1, t2)
                if merged is None:
                    continue
                sign, thetas = merged
                exps = tuple(x + y for x, y in zip(e1, e2))
                key = (thetas, exps)
                acc = out.get(key, 0) + sign * c1 * c2
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return SuperPolynomial(self.n_vars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperPolynomial)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("SuperPolynomial is mutable-ish; not hashable")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, thetas: Iterable[int], exps: Iterable[int]) -> Coeff:
        return self.terms.get((tuple(thetas), tuple(exps)), 0)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(sum(exps), len(thetas)) for thetas, exps in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (thetas, exps), coeff in sorted(self.terms.items()):
            factors = [f"t{i}" for i in thetas]
            factors += [
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exps)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            pieces.append(f"{coeff}*{body}" if factors else str(coeff))
        return " + ".join(pieces)

    __repr__ = __str__


# -- multiset permutations (Knuth's Algorithm L) -----------------------------


def unique_permutations(seq: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, in lexicographic order."""
    current = sorted(seq)
    size = len(current)
    if size == 0:
        yield ()
        return
    while True:
        yield tuple(current)
        k = size - 2
        while k >= 0 and current[k] >= current[k + 1]:
            k -= 1
        if k < 0:
            return
        i = size - 1
        while current[k] >= current[i]:
            i -= 1
        current[k], current[i] = current[i], current[k]
        current[k + 1 :] = current[-1:k:-1]


def _inversions(seq: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )


# -- monomial basis ----------------------------------------------------------


def monomial_basis(lam: SuperPartition, n_vars: int) -> SuperPolynomial:
    """m_Lambda: the orbit sum of theta_1..theta_m x^Lambda under the
    diagonal exchange of (x_i, theta_i) pairs.

    Fermionic parts (all distinct) are injected into positions carrying a
    theta; the sign of a term is the parity of sorting those positions.
    Bosonic parts fill the remaining positions as a multiset arrangement.
    Labels longer than n_vars give the zero polynomial.
    """
    m = lam.m
    if lam.length > n_vars:
        return SuperPolynomial.zero(n_vars)
    bos_pool = list(lam.bosonic) + [0] * (n_vars - m - len(lam.bosonic))
    out: dict[TermKey, Coeff] = {}
    for subset in combinations(range(n_vars), m):
        for assignment in permutations(range(m)):
            # position subset[j] receives fermionic part assignment[j];
            # sign is the parity of the word (position of part 1, part 2, ...)
            word = tuple(assignment.index(k) for k in range(m))
            sign = (-1) ** _inversions(word)
            rest = [i for i in range(n_vars) if i not in subset]
            for bos_arrangement in unique_permutations(bos_pool):
                exps = [0] * n_vars
                for j, pos in enumerate(subset):
                    exps[pos] = lam.fermionic[assignment[j]]
                for slot, value in zip(rest, bos_arrangement):
                    exps[slot] = value
                key = (tuple(p + 1 for p in subset), tuple(exps))
                acc = out.get(key, 0) + sign
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    return SuperPolynomial(n_vars, out)


def multiply(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    return f * g


def to_polynomial(
    expansion: dict[SuperPartition, Coeff], n_vars: int
) -> SuperPolynomial:
    """Sum of coeff * m_Lambda; labels longer than n_vars contribute nothing."""
    total = SuperPolynomial.zero(n_vars)
    for lam, coeff in expansion.items():
        if coeff and lam.length <= n_vars:
            total = total + monomial_basis(lam, n_vars).scaled(coeff)
    return total


def extract_expansion(
    poly: SuperPolynomial, verify: bool = True
) -> dict[SuperPartition, Coeff]:
    """Read off the monomial-basis expansion of a symmetric superpolynomial.

    The canonical term of m_Lambda is theta_1..theta_m x1^L1 x2^L2 ...; it
    occurs in no other monomial basis element, so scanning for canonically
    shaped terms recovers the expansion at any number of variables.  With
    verify=True the residual poly - sum(c * m) is checked to vanish, which
    catches non-symmetric input (at the price of rebuilding every m_Lambda).
    """
    found: dict[SuperPartition, Coeff] = {}
    for (thetas, exps), coeff in poly.terms.items():
        m = len(thetas)
        if thetas != tuple(range(1, m + 1)):
            continue
        fer, bos_padded = exps[:m], exps[m:]
        if any(fer[i] <= fer[i + 1] for i in range(m - 1)):
            continue
        if any(bos_padded[i] < bos_padded[i + 1] for i in range(len(bos_padded) - 1)):
            continue
        bos = tuple(e for e in bos_padded if e)
        found[SuperPartition(fer, bos)] = coeff
    if verify:
        residual = poly - to_polynomial(found, poly.n_vars)
        if not residual.is_zero():
            raise ValueError(
                "polynomial is not a combination of monomial superfunctions "
                f"(residual has {len(residual.terms)} terms)"
            )
    return found


# -- multiplicative bases ----------------------------------------------------


def power_sum(r: int, fermionic: bool, n_vars: int) -> SuperPolynomial:
    """p-tilde_r = sum theta_i x_i^r (r >= 0) or p_r = sum x_i^r (r >= 1)."""
    terms: dict[TermKey, Coeff] = {}
    if fermionic:
        if r < 0:
            raise ValueError("fermionic power sums need r >= 0")
        for i in range(n_vars):
            exps = [0] * n_vars
            exps[i] = r
            terms[((i + 1,), tuple(exps))] = 1
    else:
        if r < 1:
            raise ValueError("bosonic power sums need r >= 1")
        for i in range(n_vars):
            exps = [0] * n_vars
            exps[i] = r
            terms[((), tuple(exps))] = 1
    return SuperPolynomial(n_vars, terms)


def elementary(r: int, fermionic: bool, n_vars: int) -> SuperPolynomial:
    if fermionic:
        return monomial_basis(SuperPartition((0,), (1,) * r), n_vars)
    if r == 0:
        return SuperPolynomial.one(n_vars)
    return monomial_basis(SuperPartition((), (1,) * r), n_vars)


def homogeneous(r: int, fermionic: bool, n_vars: int) -> SuperPolynomial:
    """h_r = sum of all m_lambda of degree r; fermionic variant weights
    m_Lambda by Lambda_1 + 1 over degree (r|1)."""
    total = SuperPolynomial.zero(n_vars)
    if fermionic:
        for lam in enumerate_superpartitions(r, 1):
            total = total + monomial_basis(lam, n_vars).scaled(lam.fermionic[0] + 1)
        return total
    if r == 0:
        return SuperPolynomial.one(n_vars)
    for lam in enumerate_superpartitions(r, 0):
        total = total + monomial_basis(lam, n_vars)
    return total


_FAMILY = {
    "p": (power_sum, power_sum),
    "e": (elementary, elementary),
    "h": (homogeneous, homogeneous),
    "H": (power_sum, homogeneous),  # fermionic p-tilde with bosonic h
}


def multiplicative_basis(
    lam: SuperPartition, family: str, n_vars: int
) -> SuperPolynomial:
    """Product basis: fermionic factors first (in the order given), then the
    bosonic ones.  family is one of p, e, h, H."""
    if family not in _FAMILY:
        raise ValueError(f"unknown family {family!r}")
    fer_factor, bos_factor = _FAMILY[family]
    total = SuperPolynomial.one(n_vars)
    for a in lam.fermionic:
        total = total * fer_factor(a, True, n_vars)
    for s in lam.bosonic:
        total = total * bos_factor(s, False, n_vars)
    return total


# -- power-sum expansion, scalar product, omega ------------------------------


@lru_cache(maxsize=None)
def _power_sum_expansion(lam: SuperPartition, n_vars: int) -> tuple:
    poly = multiplicative_basis(lam, "p", n_vars)
    return tuple(extract_expansion(poly, verify=False).items())


def to_power_sum(poly: SuperPolynomial) -> dict[SuperPartition, Fraction]:
    """Exact expansion over the power-sum basis.

    Greedy elimination from the bottom of the (star, circledast) order: the
    power-sum products only produce monomial labels at or above their own
    label, so repeatedly clearing the least label present terminates.
    """
    remaining = extract_expansion(poly)
    result: dict[SuperPartition, Fraction] = {}
    guard = 0
    limit = 10 + sum(
        len(enumerate_superpartitions(n, m)) for (n, m) in poly.bidegrees()
    )
    while remaining:
        guard += 1
        if guard > limit:
            raise ArithmeticError("power-sum elimination failed to converge")
        lam = min(remaining, key=lambda sp: sp.sort_key)
        coeff = remaining.pop(lam)
        p_exp = dict(_power_sum_expansion(lam, poly.n_vars))
        lead = p_exp.get(lam)
        if not lead:
            raise ArithmeticError(
                f"power sum of {lam} has no leading monomial term at N={poly.n_vars}"
            )
        scale = Fraction(coeff) / lead
        result[lam] = scale
        for other, c in p_exp.items():
            if other == lam:
                continue
            acc = remaining.get(other, 0) - scale * c
            if acc:
                remaining[other] = acc
            else:
                remaining.pop(other, None)
    return {lam: c for lam, c in result.items() if c}


def z_factor(partition: tuple[int, ...]) -> int:
    """z_lambda = prod r^{mult_r} mult_r!."""
    total = 1
    for r in set(partition):
        mult = partition.count(r)
        total *= r**mult * factorial(mult)
    return total


def scalar_product_11(f: SuperPolynomial, g: SuperPolynomial) -> Fraction:
    """The q=t=1 pairing: power sums are orthogonal with
    <p_Lambda, p_Lambda> = (-1)^binom(m,2) z_{Lambda^s}."""
    fa = to_power_sum(f)
    ga = to_power_sum(g)
    total = Fraction(0)
    for lam, a in fa.items():
        b = ga.get(lam)
        if b:
            sign = (-1) ** (lam.m * (lam.m - 1) // 2)
            total += a * b * sign * z_factor(lam.bosonic)
    return total


def omega(poly: SuperPolynomial) -> SuperPolynomial:
    """The involution acting on power sums by p_r -> (-1)^(r-1) p_r and
    p-tilde_a -> (-1)^a p-tilde_a."""
    expansion = to_power_sum(poly)
    out = SuperPolynomial.zero(poly.n_vars)
    for lam, coeff in expansion.items():
        sign = (-1) ** (sum(s - 1 for s in lam.bosonic) + sum(lam.fermionic))
        p_lam = multiplicative_basis(lam, "p", poly.n_vars)
        out = out + p_lam.scaled(coeff * sign)
    return out
