import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))
from classical import kostka_strip, partitions  # noqa: E402

from superschur.superpartition import SuperPartition, enumerate_superpartitions, parse
from superschur.superpoly import (
    extract_expansion,
    multiplicative_basis,
    power_sum,
)
from superschur.tableaux import (
    SuperTableau,
    doublet_singlet_counts,
    effective_order,
    enumerate_tableaux,
    kostka_bar,
    schur_comb,
    schur_expand,
    schur_poly,
    validate,
)


def test_effective_order_golden():
    assert effective_order((3, 1, 5), 14) == [3, 1, 5, 14, 13, 12, 11, 10, 9, 8, 7, 6, 4, 2]
    assert effective_order((1,), 5) == [1, 5, 4, 3, 2]


def test_frozen_rows():
    tab = SuperTableau.build(
        parse("(6,4,1;3)"), [(None,) * 3], circle_values=(3, 1, 5)
    )
    assert tab.rows == ((3,) * 6, (1,) * 4, (None, None, None), (5,))
    assert tab.circles == (3, 1, None, 5)
    assert tab.fermionic_values == (3, 1, 5)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        SuperTableau.build(parse("(1;4)"), [(2, 2)])  # wrong row length
    with pytest.raises(ValueError):
        SuperTableau.build(parse("(1;4)"), [(2,) * 4], circle_values=(1, 2))


# -- doublet / singlet fixtures ---------------------------------------------


def fixed_pair_left():
    return SuperTableau.build(
        parse("(3,0;6,5,2)"),
        [
            (None, None, None, None, 2, 2),
            (None, None, None, 2, 1),
            (None, None),
        ],
    )


def fixed_pair_right():
    return SuperTableau.build(
        parse("(3,0;6,5,2)"),
        [
            (None,) * 6,
            (None, None, 2, 2, 1),
            (None, 2),
        ],
    )


def test_doublet_singlet_fixed_pair():
    left = fixed_pair_left()
    assert doublet_singlet_counts(left, 2) == (1, 2)
    assert doublet_singlet_counts(left, 1) == (0, 1)
    right = fixed_pair_right()
    # three 2s, none of them pairable with a lower 1
    assert doublet_singlet_counts(right, 2) == (0, 3)


def test_singlet_bound_matches_column_count():
    # c_{2,1} = 2 for (3,0;6,5,2): two singlets fine, three too many
    from superschur.superpartition import column_counts

    _, between = column_counts(parse("(3,0;6,5,2)"), 2)
    assert between == 2
    assert doublet_singlet_counts(fixed_pair_left(), 2)[1] <= between
    assert doublet_singlet_counts(fixed_pair_right(), 2)[1] > between


def test_chained_doublets():
    shape = parse("(2,1,0;4,4,4)")
    first = SuperTableau.build(
        shape, [(None,) * 4, (None,) * 4, (None, None, None, 3)]
    )
    assert doublet_singlet_counts(first, 3) == (0, 1)  # c_{3,2}=0: not allowed

    second = SuperTableau.build(
        shape, [(None,) * 4, (None, None, None, 3), (None, None, None, 2)]
    )
    assert doublet_singlet_counts(second, 3) == (1, 0)
    assert doublet_singlet_counts(second, 2) == (0, 1)  # c_{2,1}=0: not allowed

    third = SuperTableau.build(
        shape,
        [(None, None, None, 3), (None, None, None, 2), (None, None, None, 1)],
    )
    assert doublet_singlet_counts(third, 3) == (1, 0)
    assert doublet_singlet_counts(third, 2) == (1, 0)
    assert doublet_singlet_counts(third, 1) == (0, 1)


def test_chained_doublets_completion_validates():
    tab = SuperTableau.build(
        parse("(2,1,0;4,4,4)"),
        [(4, 4, 4, 3), (5, 5, 5, 2), (6, 6, 6, 1)],
    )
    ok, problems = validate(tab)
    assert ok, problems
    assert tab in enumerate_tableaux(
        parse("(2,1,0;4,4,4)"), content=parse("(3,2,1;3,3,3)")
    )


# -- the big worked filling --------------------------------------------------


def big_example():
    return SuperTableau.build(
        parse("(8,6,3,2,0;5,3)"),
        [(6, 6, 7, 8, 5), (7, 7, 8)],
    )


def test_big_example_validates():
    ok, problems = validate(big_example(), n_values=8)
    assert ok, problems


def test_big_example_mutations_fail():
    shape = parse("(8,6,3,2,0;5,3)")
    decreasing_row = SuperTableau.build(shape, [(6, 6, 7, 8, 5), (7, 8, 7)])
    assert not validate(decreasing_row)[0]
    bad_column = SuperTableau.build(shape, [(7, 7, 7, 8, 5), (7, 7, 8)])
    assert not validate(bad_column)[0]
    # a 4 at (3,5) would be a singlet, but c_{4,3} = 0
    lonely_four = SuperTableau.build(shape, [(6, 6, 7, 8, 4), (7, 7, 8)])
    ok, problems = validate(lonely_four)
    assert not ok
    assert any("singlet" in p for p in problems)


def test_validate_reports_unfilled():
    tab = fixed_pair_left()
    ok, problems = validate(tab)
    assert not ok
    assert problems == ["tableau has unfilled cells"]


def test_validate_position_rule():
    # a fermionic value left of its circle column is caught
    tab = SuperTableau.build(parse("(1;4)"), [(1, 2, 2, 2)])
    ok, problems = validate(tab)
    assert not ok
    assert any("right of its circle column" in p for p in problems)


# -- enumeration and Kostka coefficients -------------------------------------


def test_ten_tableaux_of_1_4():
    shape = parse("(1;4)")
    row_by_content = {
        "(1;4)": (2, 2, 2, 2),
        "(1;3,1)": (2, 2, 2, 3),
        "(1;2,2)": (2, 2, 3, 3),
        "(1;2,1,1)": (2, 2, 3, 4),
        "(1;1,1,1,1)": (2, 3, 4, 5),
        "(2;3)": (2, 2, 2, 1),
        "(2;2,1)": (2, 2, 3, 1),
        "(2;1,1,1)": (2, 3, 4, 1),
        "(3;2)": (2, 2, 1, 1),
        "(3;1,1)": (2, 3, 1, 1),
    }
    for content, row in row_by_content.items():
        tabs = enumerate_tableaux(shape, content=parse(content))
        assert len(tabs) == 1, content
        assert tabs[0].rows[0] == row
    assert len(enumerate_tableaux(shape, n_values=5)) == 65


def test_free_enumeration_is_label_blind():
    shape = parse("(1;4)")
    relabeled = enumerate_tableaux(shape, n_values=5, circle_values=(3,))
    assert len(relabeled) == 65


def test_schur_comb_1_4():
    comb = {str(k): v for k, v in schur_comb(parse("(1;4)")).items()}
    assert comb == {
        "(1;4)": 1,
        "(1;3,1)": 1,
        "(1;2,2)": 1,
        "(1;2,1,1)": 1,
        "(1;1,1,1,1)": 1,
        "(2;3)": 1,
        "(2;2,1)": 1,
        "(2;1,1,1)": 1,
        "(3;2)": 1,
        "(3;1,1)": 1,
    }


def test_schur_comb_3_0_4_1():
    comb = {str(k): v for k, v in schur_comb(parse("(3,0;4,1)")).items()}
    assert comb == {
        "(3,0;4,1)": 1,
        "(3,0;3,2)": 1,
        "(3,0;3,1,1)": 2,
        "(3,0;2,2,1)": 2,
        "(3,0;2,1,1,1)": 3,
        "(3,0;1,1,1,1,1)": 4,
        "(3,1;3,1)": 1,
        "(3,1;2,2)": 1,
        "(3,1;2,1,1)": 2,
        "(3,1;1,1,1,1)": 3,
        "(3,2;2,1)": 1,
        "(3,2;1,1,1)": 2,
    }


def test_kostka_goldens():
    assert kostka_bar(parse("(3,0;4,1)"), parse("(3,0;2,1,1,1)")) == 3
    assert kostka_bar(parse("(1;4)"), parse("(3;1,1)")) == 1
    assert kostka_bar(parse("(1;4)"), parse("(0;5)")) == 0


def test_purely_fermionic_schur_is_a_power_sum():
    for n in range(4):
        assert schur_comb(parse(f"({n};)")) == {parse(f"({n};)"): 1}
        assert schur_poly(parse(f"({n};)"), 3) == power_sum(n, True, 3)


def test_classical_reduction():
    for n in range(1, 6):
        for shape in partitions(n):
            lam = SuperPartition((), shape)
            comb = schur_comb(lam)
            for omega, count in comb.items():
                assert count == kostka_strip(shape, omega.bosonic)
            # and nothing is missed
            for content in partitions(n):
                want = kostka_strip(shape, content)
                assert comb.get(SuperPartition((), content), 0) == want


def test_triangularity_small_degrees():
    from superschur.superpartition import dominance_leq

    for n in range(5):
        for m in range(3):
            for lam in enumerate_superpartitions(n, m):
                comb = schur_comb(lam)
                assert comb.get(lam) == 1, lam
                for omega in comb:
                    assert dominance_leq(omega, lam), (lam, omega)


def test_schur_expand_round_trip():
    for text in ["(1;4)", "(3,0;4,1)", "(2,1;2)", "(;3,1)", "(0;2,2)"]:
        lam = parse(text)
        assert schur_expand(schur_comb(lam)) == {lam: 1}


def test_schur_expand_H_golden():
    H = multiplicative_basis(parse("(0;1,1,1)"), "H", 4)
    expansion = schur_expand(extract_expansion(H))
    assert {str(k): v for k, v in expansion.items()} == {
        "(3;)": 1,
        "(2;1)": 2,
        "(1;2)": 2,
        "(1;1,1)": 1,
        "(0;3)": 1,
        "(0;2,1)": 2,
        "(0;1,1,1)": 1,
    }


@st.composite
def small_shapes(draw, max_n=4, max_m=2):
    n = draw(st.integers(min_value=0, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    pool = enumerate_superpartitions(n, m)
    if not pool:
        return SuperPartition((), ())
    return draw(st.sampled_from(pool))


@given(small_shapes())
@settings(max_examples=30, deadline=None)
def test_every_enumerated_tableau_validates(lam):
    n, m = lam.degree
    for omega in enumerate_superpartitions(n, m):
        for tab in enumerate_tableaux(lam, content=omega):
            ok, problems = validate(tab)
            assert ok, (lam, omega, problems)


@given(small_shapes(max_n=3, max_m=2))
@settings(max_examples=20, deadline=None)
def test_schur_poly_is_symmetric(lam):
    # extract_expansion verifies the residual, which fails on asymmetric input
    n_vars = max(1, lam.length + 1)
    expansion = extract_expansion(schur_poly(lam, n_vars))
    assert expansion == schur_comb(lam) or {
        k: v for k, v in schur_comb(lam).items() if k.length <= n_vars
    } == expansion
