import sys
from itertools import permutations
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))
from classical import partitions, ssyt_count  # noqa: E402

from superschur.superpartition import (
    SuperPartition,
    dominance_leq,
    enumerate_superpartitions,
    parse,
)
from superschur.superpoly import (
    SuperPolynomial,
    extract_expansion,
    multiplicative_basis,
    omega,
    scalar_product_11,
)
from superschur.tableaux import SuperTableau, schur_expand, schur_poly, validate
from superschur.dual_tableaux import (
    dual_effective_order,
    dual_schur_comb,
    dual_schur_poly,
    enumerate_dual,
    kostka,
    validate_dual,
)


def test_dual_effective_order_golden():
    assert dual_effective_order((3, 1, 5), 14) == [
        5, 1, 3, 14, 13, 12, 11, 10, 9, 8, 7, 6, 4, 2,
    ]
    assert dual_effective_order((1,), 5) == [1, 5, 4, 3, 2]


def fermionic_pattern(tab: SuperTableau) -> tuple:
    """Positions and values of the fermionic entries, as a canonical key."""
    values = set(tab.fermionic_values)
    return tuple(
        sorted(
            (r, c, e)
            for r, row in enumerate(tab.rows)
            for c, e in enumerate(row)
            if e in values
        )
    )


# -- fermionic-row freedom ---------------------------------------------------


def test_fermionic_rows_not_frozen():
    # the dual rules fill fermionic rows freely; the plain rules freeze them
    tab = SuperTableau.from_rows(parse("(2;1)"), [(3, 4), (5,)])
    assert validate_dual(tab)[0]
    assert not validate(tab)[0]


def test_from_rows_rejects_bad_input():
    with pytest.raises(ValueError):
        SuperTableau.from_rows(parse("(2;1)"), [(3, 4)])  # missing a row
    with pytest.raises(ValueError):
        SuperTableau.from_rows(parse("(2;1)"), [(3, 4), (5,)], circle_values=(1, 1))


# -- single-rule violations --------------------------------------------------


def test_row_must_weakly_increase():
    ok, problems = validate_dual(SuperTableau.from_rows(parse("(1;2)"), [(4, 3), (5,)]))
    assert not ok and any("row 1 decreases" in p for p in problems)


def test_columns_strict_through_fermionic_rows():
    ok, problems = validate_dual(SuperTableau.from_rows(parse("(2;1)"), [(3, 3), (3,)]))
    assert not ok
    assert any("column 1 fails to increase at row 2" in p for p in problems)


def test_fermionic_value_left_of_circle_column():
    # circle of value 1 sits in column 2, so a box of 1 may only use column 1
    ok, problems = validate_dual(SuperTableau.from_rows(parse("(1;2)"), [(3, 1), (4,)]))
    assert not ok and any("not left of its circle column" in p for p in problems)
    ok, _ = validate_dual(SuperTableau.from_rows(parse("(1;2)"), [(3, 4), (1,)]))
    assert ok


def test_unfilled_cells_reported():
    ok, problems = validate_dual(
        SuperTableau.from_rows(parse("(1;2)"), [(3, None), (4,)])
    )
    assert not ok and problems == ["tableau has unfilled cells"]


# -- shape (5,3;1), content (3,2;1,1,1,1) ------------------------------------


PATTERN_A = tuple(sorted([(0, 2, 1), (0, 3, 1), (0, 4, 1), (1, 1, 2), (1, 2, 2)]))
PATTERN_B = tuple(sorted([(0, 3, 1), (0, 4, 1), (1, 1, 1), (1, 2, 2), (2, 0, 2)]))
PATTERN_C = tuple(sorted([(0, 2, 1), (0, 3, 1), (0, 4, 1), (1, 2, 2), (2, 0, 2)]))
REJECTED = tuple(sorted([(0, 3, 1), (0, 4, 1), (1, 1, 2), (1, 2, 2), (2, 0, 1)]))


def test_fermionic_fillings_of_5_3_1():
    tabs = enumerate_dual(parse("(5,3;1)"), content=parse("(3,2;1,1,1,1)"))
    assert len(tabs) == 8
    groups = {}
    for tab in tabs:
        groups.setdefault(fermionic_pattern(tab), []).append(tab)
    assert set(groups) == {PATTERN_A, PATTERN_B, PATTERN_C}
    assert sorted(len(g) for g in groups.values()) == [2, 3, 3]
    assert len(groups[PATTERN_A]) == 3 and len(groups[PATTERN_C]) == 2


def test_rejected_filling_fails_running_count():
    # the second 2 appears while only two 1's have been scanned
    tab = SuperTableau.from_rows(
        parse("(5,3;1)"), [(3, 4, 5, 1, 1), (6, 2, 2), (1,)]
    )
    assert fermionic_pattern(tab) == REJECTED
    ok, problems = validate_dual(tab)
    assert not ok
    assert any("running count" in p for p in problems)


def test_completed_filling_validates():
    tab = SuperTableau.from_rows(
        parse("(5,3;1)"), [(3, 4, 1, 1, 1), (5, 2, 2), (6,)]
    )
    assert validate_dual(tab) == (True, [])
    assert fermionic_pattern(tab) == PATTERN_A


# -- the big diagram: circle-neighbourhood rule ------------------------------


BIG_SHAPE = parse("(8,4,2,0;6,3,3,1,1)")

BIG_VALID = [
    (5, 5, 5, 5, 5, 5, 5, 1),
    (6, 6, 6, 6, 6, 1),
    (7, 7, 7, 1),
    (8, 8, 1),
    (9, 2, 2),
    (10, 3),
    (11,),
    (12,),
    (),
]

BIG_INVALID = [
    (5, 5, 5, 5, 5, 5, 5, 1),
    (6, 6, 6, 6, 6, 1),
    (7, 7, 7, 1),
    (8, 8, 8),
    (9, 9, 1),
    (10, 2),
    (2,),
    (3,),
    (),
]


def test_big_diagram_valid():
    tab = SuperTableau.from_rows(BIG_SHAPE, BIG_VALID)
    assert validate_dual(tab) == (True, [])


def test_big_diagram_needs_value_near_circle():
    # no 2 sits above or right of the circle of 3, everything else is fine
    tab = SuperTableau.from_rows(BIG_SHAPE, BIG_INVALID)
    ok, problems = validate_dual(tab)
    assert not ok
    assert len(problems) == 1
    assert "circle of 3" in problems[0] and "needs 1" in problems[0]


# -- full listing for shape (2,0;2,1) ----------------------------------------


LISTING_2_0_2_1 = {
    ((3, 3), (4, 4), (1,), ()),
    ((3, 3), (4, 5), (1,), ()),
    ((3, 3), (4, 1), (5,), ()),
    ((3, 4), (5, 6), (1,), ()),
    ((3, 5), (4, 6), (1,), ()),
    ((3, 4), (5, 1), (6,), ()),
    ((3, 5), (4, 1), (6,), ()),
    ((3, 6), (4, 1), (5,), ()),
    ((3, 3), (4, 1), (1,), ()),
    ((3, 4), (5, 1), (1,), ()),
    ((3, 5), (4, 1), (1,), ()),
}


def test_listing_2_0_2_1():
    shape = parse("(2,0;2,1)")
    tabs = []
    for omega_label in enumerate_superpartitions(5, 2):
        tabs.extend(enumerate_dual(shape, content=omega_label))
    assert {tab.rows for tab in tabs} == LISTING_2_0_2_1
    # the circle of value 2 sits in column 1, so no box can hold a 2,
    # and it forces at least one 1 somewhere above or to its right
    for tab in tabs:
        entries = [e for row in tab.rows for e in row]
        assert 2 not in entries
        assert 1 in entries


# -- Kostka coefficients -----------------------------------------------------


def test_kostka_square_golden():
    assert kostka(parse("(3,2;1)"), parse("(2,1;1,1,1)")) == 3


def test_kostka_thirty():
    tabs = enumerate_dual(parse("(8,4;1,1)"), content=parse("(6,3;1,1,1,1,1)"))
    assert len(tabs) == 30
    groups = {}
    for tab in tabs:
        groups.setdefault(fermionic_pattern(tab), []).append(tab)
    assert sorted(len(g) for g in groups.values()) == [4, 4, 5, 5, 6, 6]


def test_kostka_mismatched_content_is_zero():
    assert kostka(parse("(2;1)"), parse("(;3)")) == 0  # different fermionic degree
    assert kostka(parse("(2;1)"), parse("(1;1)")) == 0  # different total degree


def test_content_mode_requires_canonical_circles():
    with pytest.raises(ValueError):
        enumerate_dual(
            parse("(2;1)"), content=parse("(1;2)"), circle_values=(3,)
        )


def test_coefficient_in_dual_schur_of_1_2():
    comb = dual_schur_comb(parse("(1;2)"))
    assert comb[parse("(0;1,1,1)")] == 2
    assert comb[parse("(1;2)")] == 1


def test_dual_triangularity_small_degrees():
    for n, m in [(2, 0), (3, 0), (2, 1), (3, 1), (3, 2), (4, 2)]:
        for lam in enumerate_superpartitions(n, m):
            comb = dual_schur_comb(lam)
            assert comb[lam] == 1
            for label in comb:
                assert dominance_leq(label, lam)


def test_classical_reduction():
    # with no fermionic parts the dual rules are the plain column-strict ones
    for n in range(1, 6):
        for lam_parts in partitions(n, n):
            lam = SuperPartition((), lam_parts)
            for mu_parts in partitions(n, n):
                mu = SuperPartition((), mu_parts)
                assert kostka(lam, mu) == ssyt_count(lam_parts, mu_parts)


# -- cross-module checks -----------------------------------------------------


FROZEN_H_0_111 = {
    "(3;)": 1,
    "(2;1)": 2,
    "(1;2)": 2,
    "(1;1,1)": 1,
    "(0;3)": 1,
    "(0;2,1)": 2,
    "(0;1,1,1)": 1,
}


def test_kostka_matches_H_expansion_column():
    # the multiplicative H basis expands over Schurs with dual-Kostka
    # coefficients: the content-(0;1,1,1) column against the frozen expansion
    content = parse("(0;1,1,1)")
    column = {
        str(label): kostka(label, content)
        for label in enumerate_superpartitions(3, 1)
    }
    assert {k: v for k, v in column.items() if v} == FROZEN_H_0_111


def test_kostka_column_via_H_expansion_m2():
    # coefficient of each s_label in H_(1,0;2) equals the dual count of that
    # shape with content (1,0;2) — an independent polynomial route
    content = parse("(1,0;2)")
    H = multiplicative_basis(content, "H", 6)
    coeffs = schur_expand(extract_expansion(H))
    for label in enumerate_superpartitions(4, 2):
        assert coeffs.get(label, 0) == kostka(label, content)


def weight_polynomial(tabs, n_vars: int) -> SuperPolynomial:
    """Sum of theta_{i_1}...theta_{i_m} x^content over the given tableaux."""
    total = SuperPolynomial.zero(n_vars)
    for tab in tabs:
        circles = tab.fermionic_values
        inversions = sum(
            1
            for i in range(len(circles))
            for j in range(i + 1, len(circles))
            if circles[i] > circles[j]
        )
        exponents = [0] * n_vars
        for row in tab.rows:
            for entry in row:
                exponents[entry - 1] += 1
        key = (tuple(sorted(circles)), tuple(exponents))
        total = total + SuperPolynomial(n_vars, {key: (-1) ** inversions})
    return total


def test_free_tableaux_generate_the_polynomial():
    # summing monomial weights over free fillings for every choice of circle
    # values reproduces the monomial expansion
    for text, n_vars in [("(1;2)", 4), ("(2,0;2,1)", 5)]:
        shape = parse(text)
        tabs = []
        for circles in permutations(range(1, n_vars + 1), shape.m):
            tabs.extend(enumerate_dual(shape, n_values=n_vars, circle_values=circles))
        assert weight_polynomial(tabs, n_vars) == dual_schur_poly(shape, n_vars)


def test_duality_orthonormality_small():
    # omega of the dual Schur of the conjugate pairs orthonormally with the
    # plain Schurs under the q=t=1 scalar product
    for n, m, n_vars in [(2, 1, 3), (3, 2, 5)]:
        labels = enumerate_superpartitions(n, m)
        for lam in labels:
            starred = omega(dual_schur_poly(lam.conjugate, n_vars))
            for label in labels:
                value = scalar_product_11(starred, schur_poly(label, n_vars))
                assert value == (1 if label == lam else 0)


# -- properties --------------------------------------------------------------


SMALL_SHAPES = ["(1;2)", "(2;1)", "(0;2,1)", "(2,0;1)", "(1,0;2)", "(3;2)"]


@settings(deadline=None, max_examples=30)
@given(
    shape=st.sampled_from(SMALL_SHAPES),
    n_values=st.integers(min_value=2, max_value=4),
)
def test_enumerated_dual_tableaux_validate(shape, n_values):
    lam = parse(shape)
    if n_values < lam.m:
        n_values = lam.m
    for tab in enumerate_dual(lam, n_values=n_values):
        ok, problems = validate_dual(tab, n_values=n_values)
        assert ok, problems


@settings(deadline=None, max_examples=20)
@given(shape=st.sampled_from(SMALL_SHAPES))
def test_dual_schur_poly_is_symmetric(shape):
    # extract_expansion verifies the residual, which fails on asymmetric input
    lam = parse(shape)
    n_vars = max(1, lam.length + 1)
    expansion = extract_expansion(dual_schur_poly(lam, n_vars))
    assert expansion == {
        label: count
        for label, count in dual_schur_comb(lam).items()
        if label.length <= n_vars
    }
