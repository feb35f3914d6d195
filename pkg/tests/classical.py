"""Independent classical-side oracles for cross-checking the library.

Everything here is deliberately written from scratch (no imports from
superschur) so that a bug in the package cannot cancel out in the tests:
partition utilities, two unrelated Kostka-number computations (a free-entry
backtracking counter and a horizontal-strip peeling recursion), and the
classical Pieri interval rules.
"""

from functools import lru_cache


def partitions(total, cap=None):
    if total == 0:
        yield ()
        return
    top = total if cap is None else min(cap, total)
    for first in range(top, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def dominates(lam, mu):
    """lam >= mu in dominance (same weight assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def ssyt_count(shape, content):
    """Number of semi-standard tableaux of the given shape and content,
    counted cell by cell."""
    if sum(shape) != sum(content):
        return 0
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    remaining = list(content)

    def fill(index, grid):
        if index == len(cells):
            return 1
        r, c = cells[index]
        total = 0
        for v in range(len(remaining)):
            if remaining[v] == 0:
                continue
            if c > 0 and grid[(r, c - 1)] > v + 1:
                continue
            if r > 0 and (r - 1, c) in grid and grid[(r - 1, c)] >= v + 1:
                continue
            remaining[v] -= 1
            grid[(r, c)] = v + 1
            total += fill(index + 1, grid)
            del grid[(r, c)]
            remaining[v] += 1
        return total

    return fill(0, {})


def _horizontal_strips(lam, size):
    """Partitions mu <= lam with lam/mu a horizontal strip of the given size."""

    def walk(row, remaining, prev_floor, acc):
        if row == len(lam):
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        lo = max(lam[row + 1] if row + 1 < len(lam) else 0, lam[row] - remaining)
        hi = min(lam[row], prev_floor)
        for keep in range(lo, hi + 1):
            # keep boxes stay in this row; lam[row] - keep are removed
            yield from walk(row + 1, remaining - (lam[row] - keep), keep, acc + [keep])

    yield from walk(0, size, 10**9, [])


def kostka_strip(shape, content):
    """Kostka number via peeling the last content part off as a horizontal
    strip; independent of ssyt_count."""

    @lru_cache(maxsize=None)
    def peel(lam, weights):
        if not weights:
            return 1 if not lam else 0
        total = 0
        for smaller in _horizontal_strips(lam, weights[-1]):
            total += peel(smaller, weights[:-1])
        return total

    return peel(tuple(shape), tuple(content))


def pieri_row(lam, r):
    """All partitions obtained from lam by adding a horizontal r-strip."""
    lam = tuple(lam)
    results = []

    def walk(row, remaining, prev_new, acc):
        if row == len(lam):
            if remaining:
                # a brand-new bottom row: must fit under the last old row
                if prev_new >= remaining and (not lam or remaining <= lam[-1]):
                    results.append(tuple(p for p in acc if p) + (remaining,))
            else:
                results.append(tuple(p for p in acc if p))
            return
        old = lam[row]
        below = lam[row + 1] if row + 1 < len(lam) else 0
        for new in range(old, old + remaining + 1):
            if new > prev_new:
                break
            # horizontal strip: new row top must not overlap previous addition
            if row > 0 and new > lam[row - 1]:
                break
            walk(row + 1, remaining - (new - old), new, acc + [new])

    walk(0, r, 10**9, [])
    return sorted(set(results), reverse=True)


def pieri_col(lam, r):
    """All partitions obtained from lam by adding a vertical r-strip."""
    return sorted(
        {conjugate(mu) for mu in pieri_row(conjugate(tuple(lam)), r)}, reverse=True
    )
