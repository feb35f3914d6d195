"""Super semi-standard tableaux and the combinatorial Schur expansion.

A tableau on a superpartition shape carries one circle per fermionic row.
Reading the circles top to bottom gives the fermionic values i_1, ..., i_m;
the comparison order on entries is

    i_1 > i_2 > ... > i_m > (all other values, naturally ordered).

Filling rules:
  * every box of a fermionic row repeats the value of its circle ("frozen");
  * fermionic values in bosonic rows sit strictly right of their circle's
    column, occur at most c_{k,0} times in total and at most c_{k,k-1} times
    as singlets (a doublet pairs an i_k with an i_{k-1} in a strictly lower
    bosonic row; pairs are disjoint, fermionic-row copies never pair);
  * bosonic rows weakly increase left to right, and entries strictly
    increase down columns when only bosonic-row cells are compared.

Counting fillings by content gives the combinatorial Kostka coefficients and
hence the monomial expansion of the Schur superpolynomial.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from superschur.superpartition import (
    SuperPartition,
    column_counts,
    enumerate_superpartitions,
)
from superschur.superpoly import SuperPolynomial, to_polynomial


def effective_order(circle_values: tuple[int, ...], n_values: int) -> list[int]:
    """All entry values, largest first: the circle values in top-to-bottom
    order, then the remaining values of 1..n_values descending."""
    seen = set(circle_values)
    rest = [v for v in range(n_values, 0, -1) if v not in seen]
    return list(circle_values) + rest


def _rank(circle_values: tuple[int, ...], n_values: int) -> dict[int, int]:
    """value -> position in ascending effective order."""
    order = effective_order(circle_values, n_values)
    return {v: len(order) - i for i, v in enumerate(order)}


@dataclass(frozen=True)
class SuperTableau:
    """A (possibly partial) filling; rows follow the diagram order of the
    shape and unfilled cells hold None."""

    shape: SuperPartition
    rows: tuple[tuple[int | None, ...], ...]
    circles: tuple[int | None, ...]

    def __post_init__(self) -> None:
        diagram = self.shape.rows
        if len(self.rows) != len(diagram):
            raise ValueError("row count does not match shape")
        for (boxes, circle_k), row, circ in zip(diagram, self.rows, self.circles):
            if len(row) != boxes:
                raise ValueError(f"row {row} has wrong length for {boxes} boxes")
            if (circle_k is None) != (circ is None):
                raise ValueError("circle values must sit exactly on fermionic rows")

    @classmethod
    def build(
        cls,
        shape: SuperPartition,
        bosonic_rows,
        circle_values: tuple[int, ...] | None = None,
    ) -> "SuperTableau":
        """Assemble a tableau from the entries of the bosonic rows only
        (top to bottom); fermionic rows are frozen automatically."""
        values = circle_values or tuple(range(1, shape.m + 1))
        if len(values) != shape.m or len(set(values)) != shape.m:
            raise ValueError(f"need {shape.m} distinct circle values, got {values}")
        supplied = list(bosonic_rows)
        rows = []
        circles = []
        for boxes, circle_k in shape.rows:
            if circle_k is not None:
                value = values[circle_k - 1]
                rows.append((value,) * boxes)
                circles.append(value)
            else:
                entries = tuple(supplied.pop(0))
                rows.append(entries)
                circles.append(None)
        if supplied:
            raise ValueError("too many bosonic rows supplied")
        return cls(shape, tuple(rows), tuple(circles))

    @classmethod
    def from_rows(
        cls,
        shape: SuperPartition,
        all_rows,
        circle_values: tuple[int, ...] | None = None,
    ) -> "SuperTableau":
        """Assemble from entries of every diagram row (fermionic rows are not
        frozen here — the dual rules fill them freely)."""
        values = circle_values or tuple(range(1, shape.m + 1))
        if len(values) != shape.m or len(set(values)) != shape.m:
            raise ValueError(f"need {shape.m} distinct circle values, got {values}")
        circles = tuple(
            values[circle_k - 1] if circle_k is not None else None
            for _, circle_k in shape.rows
        )
        return cls(shape, tuple(tuple(row) for row in all_rows), circles)

    @property
    def fermionic_values(self) -> tuple[int, ...]:
        """Circle values top to bottom, i.e. (i_1, ..., i_m)."""
        return tuple(v for v in self.circles if v is not None)

    def bosonic_cells(self):
        """(row_index, column_index, entry) over bosonic rows; 0-based."""
        for r, (row, circ) in enumerate(zip(self.rows, self.circles)):
            if circ is None:
                for c, entry in enumerate(row):
                    yield r, c, entry

    def content(self) -> Counter:
        counts: Counter = Counter()
        for row in self.rows:
            for entry in row:
                if entry is not None:
                    counts[entry] += 1
        return counts

    def __str__(self) -> str:
        lines = []
        for row, circ in zip(self.rows, self.circles):
            cells = " ".join("." if e is None else str(e) for e in row)
            if circ is not None:
                cells = (cells + " " if cells else "") + f"({circ})"
            lines.append(cells)
        return "\n".join(lines)


def doublet_singlet_counts(tab: SuperTableau, k: int) -> tuple[int, int]:
    """Doublets pair an i_k in a bosonic row with an i_{k-1} in a strictly
    lower bosonic row, disjointly; the rest of the i_k are singlets.  Only
    the fermionic placements need to be filled in.  For k=1 every occurrence
    is a singlet."""
    values = tab.fermionic_values
    if not 1 <= k <= len(values):
        raise ValueError(f"k={k} out of range")
    upper = sorted(r for r, _, e in tab.bosonic_cells() if e == values[k - 1])
    if k == 1:
        return 0, len(upper)
    lower = sorted(r for r, _, e in tab.bosonic_cells() if e == values[k - 2])
    matched = 0
    i = 0
    for row in lower:
        if i < len(upper) and upper[i] < row:
            matched += 1
            i += 1
    return matched, len(upper) - matched


def validate(tab: SuperTableau, n_values: int | None = None) -> tuple[bool, list[str]]:
    """Check the filling rules; returns (ok, list of violations)."""
    problems: list[str] = []
    shape = tab.shape
    values = tab.fermionic_values
    if len(set(values)) != len(values):
        return False, ["circle values are not distinct"]
    all_entries = [e for row in tab.rows for e in row]
    if any(e is None for e in all_entries):
        return False, ["tableau has unfilled cells"]
    top = max([n_values or 0] + all_entries + list(values))
    rank = _rank(values, top)

    # frozen fermionic rows
    for (boxes, circle_k), row in zip(shape.rows, tab.rows):
        if circle_k is not None:
            expected = values[circle_k - 1]
            if any(e != expected for e in row):
                problems.append(f"fermionic row of part {shape.fermionic[circle_k-1]} "
                                f"must repeat {expected}")

    # rows weakly increase
    for r, _, _ in _bosonic_row_indices(tab):
        row = tab.rows[r]
        for c in range(1, len(row)):
            if rank[row[c - 1]] > rank[row[c]]:
                problems.append(f"row {r+1} decreases at column {c+1}")

    # columns strictly increase through bosonic rows only
    width = shape.star[0] if shape.star else 0
    for c in range(width):
        previous = None
        for r, (row, circ) in enumerate(zip(tab.rows, tab.circles)):
            if circ is not None or c >= len(row):
                continue
            if previous is not None and rank[previous] >= rank[row[c]]:
                problems.append(f"column {c+1} fails to increase at row {r+1}")
            previous = row[c]

    # fermionic values in bosonic rows: position and count bounds
    for k in range(1, shape.m + 1):
        circle_col = shape.circle_columns[k - 1]
        occurrences = [
            (r, c) for r, c, e in tab.bosonic_cells() if e == values[k - 1]
        ]
        for r, c in occurrences:
            if c + 1 <= circle_col:
                problems.append(
                    f"value {values[k-1]} at row {r+1}, column {c+1} is not "
                    f"right of its circle column {circle_col}"
                )
        beyond, between = column_counts(shape, k)
        if len(occurrences) > beyond:
            problems.append(
                f"value {values[k-1]} occurs {len(occurrences)} times, "
                f"allowed at most {beyond}"
            )
        _, singlets = doublet_singlet_counts(tab, k)
        if singlets > between:
            problems.append(
                f"value {values[k-1]} has {singlets} singlets, allowed at most {between}"
            )

    return not problems, problems


def _bosonic_row_indices(tab: SuperTableau):
    for r, circ in enumerate(tab.circles):
        if circ is None:
            yield r, None, None


def enumerate_tableaux(
    shape: SuperPartition,
    n_values: int | None = None,
    circle_values: tuple[int, ...] | None = None,
    content: SuperPartition | None = None,
) -> list[SuperTableau]:
    """All valid fillings of the shape.

    Free mode: entries range over 1..n_values with the circle values (default
    1..m) reserved for the fermionic numbers.  Content mode: value counts are
    pinned to the given superpartition — value k occurs content.fermionic[k-1]
    times (frozen row included) and value m+j occurs content.bosonic[j-1]
    times — which is what the Kostka coefficient counts.
    """
    m = shape.m
    circles = tuple(circle_values) if circle_values else tuple(range(1, m + 1))
    diagram = shape.rows

    if content is not None:
        if circle_values is not None and circles != tuple(range(1, m + 1)):
            raise ValueError("content counting requires the canonical circle values")
        if content.m != m or content.degree != shape.degree:
            return []
        quota: dict[int, int] = {}
        for k in range(m):
            extra = content.fermionic[k] - shape.fermionic[k]
            if extra < 0:
                return []
            quota[circles[k]] = extra
        bosonic_values = tuple(m + 1 + j for j in range(len(content.bosonic)))
        for j, v in enumerate(bosonic_values):
            quota[v] = content.bosonic[j]
        pool = circles + bosonic_values
        n_top = max((m,) + pool)
    else:
        if n_values is None:
            raise ValueError("need n_values when no content is given")
        quota = None
        pool = circles + tuple(
            v for v in range(1, n_values + 1) if v not in set(circles)
        )
        n_top = n_values

    rank = _rank(circles, max(n_top, max(circles, default=0)))
    candidates = sorted(pool, key=lambda v: rank[v])

    # bosonic cells in fill order, with their comparison neighbours
    cells = []
    for r, (boxes, circle_k) in enumerate(diagram):
        if circle_k is None:
            for c in range(boxes):
                above = None
                for rr in range(r - 1, -1, -1):
                    if diagram[rr][1] is None and diagram[rr][0] > c:
                        above = (rr, c)
                        break
                cells.append((r, c, above))

    bounds = {}
    for k in range(1, m + 1):
        beyond, between = column_counts(shape, k)
        bounds[circles[k - 1]] = (k, beyond, between)

    grid: dict[tuple[int, int], int] = {}
    used: Counter = Counter()
    found: list[SuperTableau] = []

    def finish() -> None:
        rows = []
        for r, (boxes, circle_k) in enumerate(diagram):
            if circle_k is None:
                rows.append(tuple(grid[(r, c)] for c in range(boxes)))
        tab = SuperTableau.build(shape, rows, circles)
        if content is not None and quota is not None:
            for v, need in quota.items():
                if used[v] != need:
                    return
        # singlet bounds are global, so they are checked on the completed filling
        for value, (k, _, between) in bounds.items():
            _, singlets = doublet_singlet_counts(tab, k)
            if singlets > between:
                return
        found.append(tab)

    def fill(index: int) -> None:
        if index == len(cells):
            finish()
            return
        r, c, above = cells[index]
        floor = 0
        if c > 0:
            floor = rank[grid[(r, c - 1)]]
        if above is not None:
            floor = max(floor, rank[grid[above]] + 1)
        for v in candidates:
            if rank[v] < floor:
                continue
            if quota is not None and used[v] >= quota[v]:
                continue
            info = bounds.get(v)
            if info is not None:
                k, beyond, _ = info
                if c + 1 <= shape.circle_columns[k - 1]:
                    continue
                if used[v] >= beyond:
                    continue
            used[v] += 1
            grid[(r, c)] = v
            fill(index + 1)
            del grid[(r, c)]
            used[v] -= 1

    fill(0)
    return found


def kostka_bar(shape: SuperPartition, content: SuperPartition) -> int:
    """Number of super semi-standard tableaux of the given shape and content."""
    return len(enumerate_tableaux(shape, content=content))


@lru_cache(maxsize=None)
def _schur_comb_cached(shape: SuperPartition) -> tuple:
    n, m = shape.degree
    out = []
    for omega in enumerate_superpartitions(n, m):
        count = kostka_bar(shape, omega)
        if count:
            out.append((omega, count))
    return tuple(out)


def schur_comb(shape: SuperPartition) -> dict[SuperPartition, int]:
    """Monomial expansion of the combinatorial Schur superpolynomial: label ->
    Kostka coefficient.  Every label of the degree is tried; no dominance
    shortcut, so triangularity stays an observable property."""
    return dict(_schur_comb_cached(shape))


def schur_poly(shape: SuperPartition, n_vars: int) -> SuperPolynomial:
    return to_polynomial(schur_comb(shape), n_vars)


def schur_expand(
    expansion: dict[SuperPartition, int | Fraction],
    n_vars: int | None = None,
):
    """Rewrite a monomial expansion over the Schur family by clearing the
    leading label (in the descending (star, circledast) order) repeatedly.

    With n_vars set, the rewrite happens inside the polynomial ring in that
    many variables: labels with more rows vanish there, so they are dropped
    consistently from both the input and every elimination step.
    """
    remaining = {
        lam: c
        for lam, c in expansion.items()
        if c and (n_vars is None or lam.length <= n_vars)
    }
    result: dict[SuperPartition, int | Fraction] = {}
    budget = 10 + sum(
        len(enumerate_superpartitions(*lam.degree)) for lam in set(remaining)
    )
    while remaining:
        budget -= 1
        if budget < 0:
            raise ArithmeticError("Schur elimination failed to terminate")
        lam = max(remaining, key=lambda sp: sp.sort_key)
        comb = schur_comb(lam)
        lead = comb.get(lam)
        if not lead:
            raise ArithmeticError(f"Schur of {lam} lacks its own monomial")
        coeff = remaining.pop(lam)
        if lead != 1:
            coeff = Fraction(coeff, lead)
        result[lam] = coeff
        for omega, count in comb.items():
            if omega == lam:
                continue
            if n_vars is not None and omega.length > n_vars:
                continue
            acc = remaining.get(omega, 0) - coeff * count
            if acc:
                remaining[omega] = acc
            else:
                remaining.pop(omega, None)
    return result
