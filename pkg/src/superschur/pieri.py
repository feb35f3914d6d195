"""Products with one-row and one-column factors, and their iterated form.

Multiplying by a row factor adds a horizontal strip of squares to the
square skeleton of the diagram.  Circles are not inert while this
happens: a circle either keeps its row — sliding to the new row end when
squares arrive, freely in the first row, lower rows only as far as the
row above originally reached — or drops one row straight down onto a row
whose final length supports it.  A fermionic factor appends one more
circle at the upper-right end of the added squares.  The result is read
in place: row lengths are never re-sorted, and it must again be a valid
diagram (weakly decreasing effective lengths, one circle per row and per
column).  Column factors are handled by transposing, multiplying by the
transposed row factor, and transposing back; their sign is counted in
the transposed picture.

Running the same engine over all parts of a superpartition, with each
cell remembering which factor created it, yields the marked tableaux
whose (signed) counts give the dual Kostka numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .superpartition import SuperPartition, from_parts

Rows = tuple[tuple[int, ...], ...]
Circles = tuple[int | None, ...]


@dataclass(frozen=True)
class StripSpec:
    """One multiplication factor: r squares in a row or column, with a
    circle at the extreme end (upper-right / lower-left) if fermionic."""

    r: int
    orientation: str
    fermionic: bool

    def __post_init__(self) -> None:
        if self.orientation not in ("row", "column"):
            raise ValueError(f"orientation must be 'row' or 'column': {self.orientation!r}")
        if self.fermionic:
            if self.r < 0:
                raise ValueError(f"strip length must be non-negative: {self.r}")
        elif self.r < 1:
            raise ValueError(f"a bosonic strip needs at least one square: {self.r}")

    @property
    def label(self) -> SuperPartition:
        """The superpartition whose Schur polynomial this factor is."""
        if self.orientation == "row":
            if self.fermionic:
                return from_parts((self.r,), ())
            return from_parts((), (self.r,))
        if self.fermionic:
            return from_parts((0,), (1,) * self.r)
        return from_parts((), (1,) * self.r)

    def __str__(self) -> str:
        if self.orientation == "row":
            return f"({self.r};)" if self.fermionic else f"(;{self.r})"
        return f"(0;1^{self.r})" if self.fermionic else f"(;1^{self.r})"


def parse_strip(text: str) -> StripSpec:
    """Parse "(;r)", "(r;)", "(;1^r)" or "(0;1^r)" (also "1,1,...,1" runs)."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if ";" not in body:
        raise ValueError(f"missing ';' in strip {text!r}")
    fer, bos = (chunk.strip() for chunk in body.split(";", 1))

    def ones_run(chunk: str) -> int | None:
        if "^" in chunk:
            base, _, exponent = chunk.partition("^")
            if base.strip() != "1":
                return None
            return int(exponent)
        pieces = [p.strip() for p in chunk.split(",") if p.strip()]
        if pieces and all(p == "1" for p in pieces):
            return len(pieces)
        return None

    if fer == "" and bos:
        if "^" in bos or "," in bos:
            length = ones_run(bos)
            if length is None:
                raise ValueError(f"not a single row or column: {text!r}")
            return StripSpec(length, "column", False)
        return StripSpec(int(bos), "row", False)
    if fer == "0":
        if not bos:
            return StripSpec(0, "row", True)
        length = ones_run(bos)
        if length is None:
            raise ValueError(f"not a single row or column: {text!r}")
        return StripSpec(length, "column", True)
    if fer and not bos:
        return StripSpec(int(fer), "row", True)
    raise ValueError(f"not a single row or column: {text!r}")


@dataclass(frozen=True)
class PieriTerm:
    sign: int
    label: SuperPartition


@dataclass(frozen=True)
class PieriTableau:
    """Outcome of an iterated strip product that remembers its history:
    every cell carries the 1-based index of the part whose strip created
    it, and every circle the index of its fermionic part."""

    rows: Rows
    circles: Circles

    @property
    def shape(self) -> SuperPartition:
        return _shape_of(self.rows, self.circles)

    @property
    def circle_sequence(self) -> tuple[int, ...]:
        """Circle labels read top to bottom."""
        return tuple(label for label in self.circles if label is not None)

    def strip_cells(self, mark: int) -> tuple[tuple[int, int], ...]:
        """(row, column) positions, 0-based, of the squares added by the
        strip of part ``mark``."""
        return tuple(
            (r, c)
            for r, row in enumerate(self.rows)
            for c, cell in enumerate(row)
            if cell == mark
        )


def inv_sign(tab: PieriTableau) -> int:
    """Parity of the number of inversions in the top-to-bottom circle
    labels: +1 when they can be sorted by an even number of swaps."""
    seq = tab.circle_sequence
    inversions = sum(
        1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b]
    )
    return -1 if inversions % 2 else 1


# -- the row engine ----------------------------------------------------------


def _state_from_shape(lam: SuperPartition) -> tuple[Rows, Circles]:
    rows = tuple((0,) * boxes for boxes, _ in lam.rows)
    circles = tuple(k for _, k in lam.rows)
    return rows, circles


def _shape_of(rows: Rows, circles: Circles) -> SuperPartition:
    fermionic = tuple(len(row) for row, c in zip(rows, circles) if c is not None)
    bosonic = tuple(len(row) for row, c in zip(rows, circles) if c is None and row)
    return SuperPartition(fermionic, bosonic)


def _square_distributions(base: list[int], r: int) -> list[tuple[int, ...]]:
    """Ways to spread r squares over the rows plus one new bottom row so
    that no column receives two squares (adjacent interlacing measured on
    the original row lengths)."""
    k = len(base)
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == k + 1:
            if left == 0:
                out.append(tuple(acc))
            return
        if i == 0:
            cap = left
        else:
            below = base[i] if i < k else 0
            cap = min(left, base[i - 1] - below)
        for d in range(cap + 1):
            acc.append(d)
            rec(i + 1, left - d, acc)
            acc.pop()

    rec(0, r, [])
    return out


def _row_step(
    rows: Rows,
    circles: Circles,
    r: int,
    fermionic: bool,
    mark: int,
    circle_label: int | None = None,
):
    """All results of one row-factor multiplication on a marked diagram.

    Returns deduplicated (rows, circles, added_row) triples; added_row is
    the physical row of the freshly appended circle, None for bosonic
    factors.
    """
    base = [len(row) for row in rows]
    k = len(rows)
    originals = [(i, base[i] + 1, lbl) for i, lbl in enumerate(circles) if lbl is not None]
    results: dict[tuple[Rows, Circles], int | None] = {}

    def assemble(boxes: list[int], place: dict[int, tuple[int, int]], added_row: int | None) -> None:
        height = max([len(boxes)] + [ri + 1 for ri in place])
        full = boxes + [0] * (height - len(boxes))
        # a circle sits immediately to the right of its row's last square
        for ri, (col, _) in place.items():
            if col != full[ri] + 1:
                return
        cols = [col for col, _ in place.values()]
        if len(set(cols)) != len(cols):
            return
        while full and full[-1] == 0 and (len(full) - 1) not in place:
            full.pop()
        # read in place: effective lengths must already be weakly decreasing
        keys = [2 * b + (ri in place) for ri, b in enumerate(full)]
        if any(keys[i] < keys[i + 1] for i in range(len(keys) - 1)):
            return
        new_rows = []
        new_circles = []
        for ri, b in enumerate(full):
            old = rows[ri] if ri < k else ()
            new_rows.append(old + (mark,) * (b - len(old)))
            new_circles.append(place[ri][1] if ri in place else None)
        key = (tuple(new_rows), tuple(new_circles))
        if key not in results:
            results[key] = added_row

    for dist in _square_distributions(base, r):
        boxes = [base[i] + dist[i] for i in range(k)]
        if dist[k] > 0:
            boxes.append(dist[k])
        square_rows = [i for i in range(k + 1) if dist[i] > 0]
        min_square_row = min(square_rows) if square_rows else None
        max_square_col = (
            max((base[i] if i < k else 0) + dist[i] for i in square_rows)
            if square_rows
            else None
        )

        # each existing circle keeps its row (sliding along with any new
        # squares) or drops one row straight down
        options = []
        for i, col, lbl in originals:
            choices = []
            slid = base[i] + dist[i] + 1
            if dist[i] == 0 or i == 0 or slid <= base[i - 1]:
                choices.append((i, slid, lbl))
            choices.append((i + 1, col, lbl))  # support checked in assemble
            options.append(choices)

        for combo in product(*options):
            placed: dict[int, tuple[int, int]] = {}
            clash = False
            for row_i, col, lbl in combo:
                if row_i in placed:
                    clash = True
                    break
                placed[row_i] = (col, lbl)
            if clash:
                continue
            if not fermionic:
                assemble(boxes, placed, None)
                continue
            # the new circle goes strictly right of and weakly above every
            # added square, at the end of its row
            for t in range(len(boxes) + 1):
                if t in placed:
                    continue
                col_t = (boxes[t] if t < len(boxes) else 0) + 1
                if square_rows and not (col_t > max_square_col and t <= min_square_row):
                    continue
                extended = dict(placed)
                extended[t] = (col_t, circle_label)
                assemble(boxes, extended, t)

    return [(state[0], state[1], added) for state, added in results.items()]


# -- single products ---------------------------------------------------------


def pieri_product(lam: SuperPartition, strip: StripSpec) -> list[PieriTerm]:
    """Expand the product of the Schur polynomial of ``lam`` with a strip
    factor as a signed, multiplicity-free list of superpartitions."""
    if strip.orientation == "column":
        return _column_product(lam, strip)
    rows, circles = _state_from_shape(lam)
    new_label = lam.m + 1 if strip.fermionic else None
    terms: dict[SuperPartition, int] = {}
    for new_rows, new_circles, added_row in _row_step(
        rows, circles, strip.r, strip.fermionic, 1, new_label
    ):
        label = _shape_of(new_rows, new_circles)
        if strip.fermionic:
            below = sum(
                1
                for ri, lbl in enumerate(new_circles)
                if lbl is not None and ri > added_row
            )
            sign = -1 if below % 2 else 1
        else:
            sign = 1
        _record(terms, label, sign, lam, strip)
    ordered = sorted(terms, key=lambda o: o.sort_key, reverse=True)
    return [PieriTerm(terms[o], o) for o in ordered]


def _column_product(lam: SuperPartition, strip: StripSpec) -> list[PieriTerm]:
    transposed = lam.conjugate
    rows, circles = _state_from_shape(transposed)
    new_label = lam.m + 1 if strip.fermionic else None
    terms: dict[SuperPartition, int] = {}
    for new_rows, new_circles, added_row in _row_step(
        rows, circles, strip.r, strip.fermionic, 1, new_label
    ):
        label = _shape_of(new_rows, new_circles).conjugate
        if strip.fermionic:
            # count in the transposed picture: a circle ends up below the
            # added one exactly when its column here is larger
            added_col = len(new_rows[added_row]) + 1
            below = sum(
                1
                for ri, lbl in enumerate(new_circles)
                if lbl is not None and ri != added_row and len(new_rows[ri]) + 1 > added_col
            )
            sign = -1 if below % 2 else 1
        else:
            sign = 1
        _record(terms, label, sign, lam, strip)
    ordered = sorted(terms, key=lambda o: o.sort_key, reverse=True)
    return [PieriTerm(terms[o], o) for o in ordered]


def _record(
    terms: dict[SuperPartition, int],
    label: SuperPartition,
    sign: int,
    lam: SuperPartition,
    strip: StripSpec,
) -> None:
    prev = terms.get(label)
    if prev is not None and prev != sign:
        raise AssertionError(f"conflicting signs for {label} in {lam} x {strip}")
    terms[label] = sign


# -- iterated products -------------------------------------------------------


def _multi(factors: list[tuple[int, bool, int]]) -> list[PieriTableau]:
    states: list[tuple[Rows, Circles]] = [((), ())]
    for r, fermionic, mark in factors:
        fresh: dict[tuple[Rows, Circles], None] = {}
        for rows, circles in states:
            for new_rows, new_circles, _ in _row_step(
                rows, circles, r, fermionic, mark, mark if fermionic else None
            ):
                fresh[(new_rows, new_circles)] = None
        states = list(fresh)
    return [PieriTableau(rows, circles) for rows, circles in states]


def pieri_multi_P(lam: SuperPartition) -> list[PieriTableau]:
    """Marked tableaux of the row-by-row product taken bosonic parts first
    (longest to shortest), then the fermionic parts in index order; the
    strip of part i is marked i."""
    m = lam.m
    factors = [(p, False, m + 1 + j) for j, p in enumerate(lam.bosonic)]
    factors += [(p, True, i + 1) for i, p in enumerate(lam.fermionic)]
    return _multi(factors)


def pieri_multi_Ptilde(lam: SuperPartition) -> list[PieriTableau]:
    """Same factors as pieri_multi_P but fermionic parts first; the
    fermionic prefix collapses to a single tableau, so every tableau here
    counts with weight +1."""
    m = lam.m
    factors = [(p, True, i + 1) for i, p in enumerate(lam.fermionic)]
    factors += [(p, False, m + 1 + j) for j, p in enumerate(lam.bosonic)]
    return _multi(factors)


def signed_kostka_via_pieri(lam: SuperPartition, omega: SuperPartition) -> int:
    """Signed count of marked product tableaux of shape ``lam`` built from
    the parts of ``omega``; conjecturally the dual Kostka number."""
    if lam.degree != omega.degree:
        raise ValueError(f"degree mismatch: {lam} vs {omega}")
    return sum(inv_sign(t) for t in pieri_multi_P(omega) if t.shape == lam)
