"""Superpartitions: pairs of a strictly-decreasing and a weakly-decreasing partition.

A superpartition ``(a_1,...,a_m; s_1,...,s_k)`` consists of a fermionic part
(strictly decreasing, the last entry may be 0) and a bosonic part (weakly
decreasing, positive).  Its diagram has one row per part, sorted by *effective
length*: a fermionic row of a boxes counts as a + 1/2 because it carries a
circle in column a + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


def _is_strictly_decreasing(seq: tuple[int, ...]) -> bool:
    return all(seq[i] > seq[i + 1] for i in range(len(seq) - 1))


def _is_weakly_decreasing(seq: tuple[int, ...]) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def _transpose(partition: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate of an ordinary partition (column lengths)."""
    if not partition:
        return ()
    return tuple(
        sum(1 for part in partition if part >= col)
        for col in range(1, partition[0] + 1)
    )


@dataclass(frozen=True)
class SuperPartition:
    fermionic: tuple[int, ...]
    bosonic: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.fermionic) or any(p < 0 for p in self.bosonic):
            raise ValueError(f"negative part in {self.fermionic};{self.bosonic}")
        if not _is_strictly_decreasing(self.fermionic):
            raise ValueError(f"fermionic parts must strictly decrease: {self.fermionic}")
        if not _is_weakly_decreasing(self.bosonic) or (self.bosonic and self.bosonic[-1] == 0):
            raise ValueError(f"bosonic parts must weakly decrease and be positive: {self.bosonic}")

    # -- basic invariants ---------------------------------------------------

    @property
    def m(self) -> int:
        """Number of fermionic parts."""
        return len(self.fermionic)

    @property
    def n(self) -> int:
        """Total number of boxes (sum of all parts)."""
        return sum(self.fermionic) + sum(self.bosonic)

    @property
    def degree(self) -> tuple[int, int]:
        return (self.n, self.m)

    @property
    def length(self) -> int:
        return len(self.fermionic) + len(self.bosonic)

    @property
    def parts(self) -> tuple[int, ...]:
        """All parts, fermionic first (the given order, not diagram order)."""
        return self.fermionic + self.bosonic

    # -- derived partitions -------------------------------------------------

    @cached_property
    def star(self) -> tuple[int, ...]:
        """All parts sorted decreasingly, zeros dropped."""
        return tuple(p for p in sorted(self.parts, reverse=True) if p > 0)

    @cached_property
    def circledast(self) -> tuple[int, ...]:
        """Like star, but with every fermionic part enlarged by one box."""
        raised = [p + 1 for p in self.fermionic] + list(self.bosonic)
        return tuple(sorted(raised, reverse=True))

    @cached_property
    def rows(self) -> tuple[tuple[int, int | None], ...]:
        """Diagram rows, top to bottom.

        Each row is ``(boxes, circle)`` where ``circle`` is the 1-based index
        of the fermionic part sitting in that row (its circle occupies column
        boxes + 1), or None for a bosonic row.  Rows are sorted by effective
        length ``boxes + 1/2 * (circle is not None)``, decreasingly.
        """
        tagged = [(p, k + 1) for k, p in enumerate(self.fermionic)]
        tagged += [(p, None) for p in self.bosonic]
        tagged.sort(key=lambda row: 2 * row[0] + (row[1] is not None), reverse=True)
        return tuple(tagged)

    @cached_property
    def circle_columns(self) -> tuple[int, ...]:
        """Column of the circle of each fermionic part, in the given order."""
        return tuple(p + 1 for p in self.fermionic)

    @cached_property
    def conjugate(self) -> "SuperPartition":
        """Transpose the diagram (circles included)."""
        star_t = _transpose(self.star)
        circ_t = _transpose(self.circledast)
        fermionic = []
        bosonic = []
        for i, total in enumerate(circ_t):
            boxes = star_t[i] if i < len(star_t) else 0
            if total - boxes == 1:
                fermionic.append(boxes)
            elif boxes > 0:
                bosonic.append(boxes)
        return SuperPartition(tuple(fermionic), tuple(bosonic))

    @property
    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(star, circledast); descending lexicographic order on this key is a
        linear extension of the dominance order and is used everywhere a
        deterministic listing is needed."""
        return (self.star, self.circledast)

    def __str__(self) -> str:
        fer = ",".join(str(p) for p in self.fermionic)
        bos = ",".join(str(p) for p in self.bosonic)
        return f"({fer};{bos})"

    def __repr__(self) -> str:
        return f"SuperPartition{self}"


def parse(text: str) -> SuperPartition:
    """Parse "(a1,...;s1,...)" — e.g. "(3,0;4,1)", "(;3)", "(3;)", "(;)"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if ";" not in body:
        raise ValueError(f"missing ';' in superpartition {text!r}")
    fer_text, bos_text = body.split(";", 1)

    def ints(chunk: str) -> tuple[int, ...]:
        chunk = chunk.strip()
        if not chunk:
            return ()
        return tuple(int(piece) for piece in chunk.split(","))

    return SuperPartition(ints(fer_text), ints(bos_text))


def from_parts(fermionic, bosonic) -> SuperPartition:
    return SuperPartition(tuple(fermionic), tuple(bosonic))


# -- dominance ---------------------------------------------------------------


def _partition_leq(mu: tuple[int, ...], lam: tuple[int, ...]) -> bool:
    """Classical dominance: every partial sum of mu is <= that of lam."""
    total_mu = 0
    total_lam = 0
    for i in range(max(len(mu), len(lam))):
        total_mu += mu[i] if i < len(mu) else 0
        total_lam += lam[i] if i < len(lam) else 0
        if total_mu > total_lam:
            return False
    return True


def dominance_leq(omega: SuperPartition, lam: SuperPartition) -> bool:
    """True iff omega <= lam: same degree, and both star and circledast
    diagrams are dominated."""
    if omega.degree != lam.degree:
        return False
    return _partition_leq(omega.star, lam.star) and _partition_leq(
        omega.circledast, lam.circledast
    )


# -- enumeration -------------------------------------------------------------


def _strict_tuples(total: int, count: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of the given length and sum, parts < cap."""
    if count == 0:
        if total == 0:
            yield ()
        return
    # smallest possible tail sum for count-1 further strictly smaller parts
    for first in range(min(cap - 1, total), -1, -1):
        tail_min = (count - 1) * (count - 2) // 2
        if total - first < tail_min:
            continue
        if first < count - 1:  # not enough room below for distinct parts
            break
        for rest in _strict_tuples(total - first, count - 1, first):
            yield (first,) + rest


def _partitions(total: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    top = total if cap is None else min(cap, total)
    for first in range(top, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_superpartitions(n: int, m: int) -> list[SuperPartition]:
    """All superpartitions of degree (n|m), sorted decreasingly by
    (star, circledast) — most dominant first."""
    if n < 0 or m < 0:
        return []
    found = []
    min_fermionic = m * (m - 1) // 2  # 0+1+...+(m-1)
    for fer_sum in range(min_fermionic, n + 1):
        for fer in _strict_tuples(fer_sum, m, fer_sum + 1):
            for bos in _partitions(n - fer_sum):
                found.append(SuperPartition(fer, bos))
    found.sort(key=lambda sp: sp.sort_key, reverse=True)
    return found


# -- column statistics -------------------------------------------------------


def column_counts(lam: SuperPartition, k: int) -> tuple[int, int]:
    """Bosonic-column counts used by the filling rules.

    A diagram column is fermionic when it ends with a circle, bosonic
    otherwise.  Returns ``(beyond, between)`` where ``beyond`` counts bosonic
    columns strictly to the right of the circle column of the k-th fermionic
    part and ``between`` counts bosonic columns strictly between the circle
    columns of the k-th and (k-1)-th fermionic parts.  For k = 1 both numbers
    are the ``beyond`` count.
    """
    if not 1 <= k <= lam.m:
        raise ValueError(f"k={k} out of range for {lam}")
    circle_cols = set(lam.circle_columns)
    width = lam.star[0] if lam.star else 0
    bosonic_cols = [j for j in range(1, width + 1) if j not in circle_cols]
    col_k = lam.circle_columns[k - 1]
    beyond = sum(1 for j in bosonic_cols if j > col_k)
    if k == 1:
        return (beyond, beyond)
    col_prev = lam.circle_columns[k - 2]
    between = sum(1 for j in bosonic_cols if col_k < j < col_prev)
    return (beyond, between)
