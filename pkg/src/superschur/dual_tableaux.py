"""Dual super semi-standard tableaux and the dual Schur expansion.

The comparison order reverses the fermionic block relative to the plain
tableaux:

    i_m > i_{m-1} > ... > i_1 > (all other values, naturally ordered).

Filling rules:
  * nothing is frozen — boxes of fermionic rows are filled like any others;
  * a box holding the fermionic value i_k sits strictly left of the circle
    column of i_k;
  * around the circle of i_k, for every l >= 1 at least l boxes of value
    i_{k-l} lie strictly above the circle's row or strictly right of its
    column;
  * scanning the boxes row by row, right to left within each row, the
    running count of i_k stays strictly ahead of the running count of
    i_{k+1} from the moment i_{k+1} first appears;
  * rows weakly increase left to right and columns strictly increase
    downward, every box included.

Counting fillings by content gives the dual Kostka coefficients and hence
the monomial expansion of the dual Schur superpolynomial.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from superschur.superpartition import SuperPartition, enumerate_superpartitions
from superschur.superpoly import SuperPolynomial, to_polynomial
from superschur.tableaux import SuperTableau


def dual_effective_order(circle_values: tuple[int, ...], n_values: int) -> list[int]:
    """All entry values, largest first: the circle values in bottom-to-top
    order, then the remaining values of 1..n_values descending."""
    seen = set(circle_values)
    rest = [v for v in range(n_values, 0, -1) if v not in seen]
    return list(reversed(circle_values)) + rest


def _dual_rank(circle_values: tuple[int, ...], n_values: int) -> dict[int, int]:
    """value -> position in ascending dual order."""
    order = dual_effective_order(circle_values, n_values)
    return {v: len(order) - i for i, v in enumerate(order)}


def _circle_positions(shape: SuperPartition) -> dict[int, int]:
    """k -> diagram row index (0-based) carrying the circle of i_k."""
    return {
        circle_k: r
        for r, (_, circle_k) in enumerate(shape.rows)
        if circle_k is not None
    }


def validate_dual(tab: SuperTableau, n_values: int | None = None) -> tuple[bool, list[str]]:
    """Check the dual filling rules; returns (ok, list of violations)."""
    problems: list[str] = []
    shape = tab.shape
    values = tab.fermionic_values
    if len(set(values)) != len(values):
        return False, ["circle values are not distinct"]
    all_entries = [e for row in tab.rows for e in row]
    if any(e is None for e in all_entries):
        return False, ["tableau has unfilled cells"]
    top = max([n_values or 0] + all_entries + list(values))
    rank = _dual_rank(values, top)
    index_of = {v: k + 1 for k, v in enumerate(values)}

    # rows weakly increase and columns strictly increase, every box included
    for r, row in enumerate(tab.rows):
        for c in range(1, len(row)):
            if rank[row[c - 1]] > rank[row[c]]:
                problems.append(f"row {r+1} decreases at column {c+1}")
    for r in range(1, len(tab.rows)):
        above = tab.rows[r - 1]
        for c, entry in enumerate(tab.rows[r]):
            if rank[above[c]] >= rank[entry]:
                problems.append(f"column {c+1} fails to increase at row {r+1}")

    # fermionic boxes sit strictly left of their circle's column
    occurrences: dict[int, list[tuple[int, int]]] = {k: [] for k in range(1, shape.m + 1)}
    for r, row in enumerate(tab.rows):
        for c, entry in enumerate(row):
            k = index_of.get(entry)
            if k is not None:
                occurrences[k].append((r, c))
    for k in range(1, shape.m + 1):
        circle_col = shape.circle_columns[k - 1]
        for r, c in occurrences[k]:
            if c + 1 >= circle_col:
                problems.append(
                    f"value {values[k-1]} at row {r+1}, column {c+1} is not "
                    f"left of its circle column {circle_col}"
                )

    # the circle of i_k needs l boxes of i_{k-l} strictly above or right
    circle_rows = _circle_positions(shape)
    for k in range(2, shape.m + 1):
        r0 = circle_rows[k]
        c0 = shape.circle_columns[k - 1]
        for step in range(1, k):
            have = sum(1 for r, c in occurrences[k - step] if r < r0 or c + 1 > c0)
            if have < step:
                problems.append(
                    f"circle of {values[k-1]} at row {r0+1}, column {c0} sees "
                    f"{have} of value {values[k-step-1]} above or right, needs {step}"
                )

    # right-to-left scan: count of i_{k-1} stays strictly ahead of i_k
    counts = [0] * (shape.m + 1)
    scanning = True
    for r, row in enumerate(tab.rows):
        if not scanning:
            break
        for c in range(len(row) - 1, -1, -1):
            k = index_of.get(row[c])
            if k is None:
                continue
            counts[k] += 1
            if k >= 2 and counts[k - 1] <= counts[k]:
                problems.append(
                    f"running count of {values[k-1]} reaches {counts[k]} at "
                    f"row {r+1}, column {c+1} before {values[k-2]} gets ahead"
                )
                scanning = False
                break

    return not problems, problems


def enumerate_dual(
    shape: SuperPartition,
    n_values: int | None = None,
    circle_values: tuple[int, ...] | None = None,
    content: SuperPartition | None = None,
) -> list[SuperTableau]:
    """All valid dual fillings of the shape.

    Free mode: entries range over 1..n_values with the circle values (default
    1..m) reserved for the fermionic numbers.  Content mode: value k occurs
    content.fermionic[k-1] times and value m+j occurs content.bosonic[j-1]
    times, which is what the dual Kostka coefficient counts.
    """
    m = shape.m
    circles = tuple(circle_values) if circle_values else tuple(range(1, m + 1))
    diagram = shape.rows

    if content is not None:
        if circle_values is not None and circles != tuple(range(1, m + 1)):
            raise ValueError("content counting requires the canonical circle values")
        if content.m != m or content.degree != shape.degree:
            return []
        quota: dict[int, int] | None = {
            circles[k]: content.fermionic[k] for k in range(m)
        }
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

    rank = _dual_rank(circles, max(n_top, max(circles, default=0)))
    candidates = sorted(pool, key=lambda v: rank[v])
    index_of = {v: k + 1 for k, v in enumerate(circles)}
    circle_rows = _circle_positions(shape)

    # cells in scan order: row by row, right to left — the running-count rule
    # then prunes incrementally
    cells = [
        (r, c)
        for r, (boxes, _) in enumerate(diagram)
        for c in range(boxes - 1, -1, -1)
    ]

    grid: dict[tuple[int, int], int] = {}
    used: Counter = Counter()
    counts = [0] * (m + 1)
    found: list[SuperTableau] = []

    def finish() -> None:
        if quota is not None:
            for v, need in quota.items():
                if used[v] != need:
                    return
        # the circle neighbourhood rule is a property of the whole filling
        for k in range(2, m + 1):
            r0 = circle_rows[k]
            c0 = shape.circle_columns[k - 1]
            for step in range(1, k):
                target = circles[k - step - 1]
                have = sum(
                    1
                    for (r, c), entry in grid.items()
                    if entry == target and (r < r0 or c + 1 > c0)
                )
                if have < step:
                    return
        rows = [
            tuple(grid[(r, c)] for c in range(boxes))
            for r, (boxes, _) in enumerate(diagram)
        ]
        found.append(SuperTableau.from_rows(shape, rows, circles))

    def fill(index: int) -> None:
        if index == len(cells):
            finish()
            return
        r, c = cells[index]
        floor = 0
        if r > 0:
            floor = rank[grid[(r - 1, c)]] + 1
        cap = None
        if c + 1 < diagram[r][0]:
            cap = rank[grid[(r, c + 1)]]
        for v in candidates:
            rv = rank[v]
            if rv < floor:
                continue
            if cap is not None and rv > cap:
                break
            if quota is not None and used[v] >= quota[v]:
                continue
            k = index_of.get(v)
            if k is not None:
                if c + 1 >= shape.circle_columns[k - 1]:
                    continue
                if k >= 2 and counts[k - 1] <= counts[k] + 1:
                    continue
                counts[k] += 1
            used[v] += 1
            grid[(r, c)] = v
            fill(index + 1)
            del grid[(r, c)]
            used[v] -= 1
            if k is not None:
                counts[k] -= 1

    fill(0)
    return found


def kostka(shape: SuperPartition, content: SuperPartition) -> int:
    """Number of dual super semi-standard tableaux of the given shape and
    content."""
    return len(enumerate_dual(shape, content=content))


@lru_cache(maxsize=None)
def _dual_schur_comb_cached(shape: SuperPartition) -> tuple:
    n, m = shape.degree
    out = []
    for omega in enumerate_superpartitions(n, m):
        count = kostka(shape, omega)
        if count:
            out.append((omega, count))
    return tuple(out)


def dual_schur_comb(shape: SuperPartition) -> dict[SuperPartition, int]:
    """Monomial expansion of the dual Schur superpolynomial: label -> dual
    Kostka coefficient, every label of the degree tried."""
    return dict(_dual_schur_comb_cached(shape))


def dual_schur_poly(shape: SuperPartition, n_vars: int) -> SuperPolynomial:
    return to_polynomial(dual_schur_comb(shape), n_vars)
