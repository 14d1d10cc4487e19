from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parallelo.linalg import (
    DimensionError,
    RatMatrix,
    as_rational,
    format_rational,
    in_row_space,
    integer_rank,
    inverse,
    nullspace,
    primitive_integer,
    rank,
    rank_mod_p,
    rref,
)

small = st.integers(-6, 6)
ratios = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def matrices(max_rows=6, max_cols=6, elems=small):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=0, max_size=max_rows).map(lambda rows: (rows, c))
    )


def test_empty_and_identity():
    assert rank(RatMatrix((), 0)) == 0
    assert rank(RatMatrix.identity(3)) == 3


def test_row_space_small_cases():
    assert in_row_space(RatMatrix.identity(2), (3, -5))
    assert not in_row_space([[1, 0]], (0, 1))
    with pytest.raises(DimensionError):
        in_row_space([[1, 0]], (1, 2, 3))


def test_ragged_rows_rejected():
    with pytest.raises(DimensionError):
        RatMatrix.from_rows([[1, 2], [3]])


def test_rational_parsing():
    assert as_rational("-3/2") == Fraction(-3, 2)
    assert as_rational("−3/2") == Fraction(-3, 2)
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_halves_do_not_lose_rank():
    m = [[Fraction(1, 2), Fraction(1, 2), 0, 0], [Fraction(1, 2), Fraction(-1, 2), 0, 0], [1, 0, 0, 0]]
    assert rank(m) == 2


def test_big_entries_stay_exact():
    big = 10**40
    assert rank([[big, big + 1], [big - 1, big]]) == 2
    assert rank([[big, 2 * big], [1, 2]]) == 1


def test_inverse_and_nullspace():
    m = RatMatrix.from_rows([[2, 1], [1, 1]])
    assert (m @ inverse(m)) == RatMatrix.identity(2)
    ns = nullspace([[1, 1, 1]])
    assert len(ns) == 2
    assert all(sum(x) == 0 for x in ns)
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])


def test_primitive_integer():
    assert primitive_integer([Fraction(-1, 2), 1, Fraction(3, 2)]) == (1, -2, -3)
    with pytest.raises(ValueError):
        primitive_integer([0, 0])


@given(matrices())
def test_rank_bounded_by_shape(mc):
    rows, c = mc
    assert rank(RatMatrix.from_rows(rows, c)) <= min(len(rows), c)


@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_shuffle(mc, rnd):
    rows, c = mc
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rank(RatMatrix.from_rows(rows, c)) == rank(RatMatrix.from_rows(shuffled, c))


@given(matrices(max_rows=5, max_cols=5, elems=ratios))
def test_rows_lie_in_row_space(mc):
    rows, c = mc
    m = RatMatrix.from_rows(rows, c)
    assert all(in_row_space(m, r) for r in m.rows)


@given(matrices(max_rows=5, max_cols=5, elems=ratios))
def test_rank_matches_rref_pivots(mc):
    rows, c = mc
    m = RatMatrix.from_rows(rows, c)
    assert rank(m) == len(rref(m)[1])


@given(matrices(max_rows=7, max_cols=7))
def test_modular_rank_is_a_lower_bound(mc):
    rows, c = mc
    assert rank_mod_p(rows, c) <= integer_rank(rows, c)
    assert rank_mod_p(rows, c) == integer_rank(rows, c)  # small entries: p never divides a minor


@given(ratios.filter(lambda q: q != 0))
def test_reciprocal_round_trip(q):
    assert q * (1 / q) == 1
    assert as_rational(format_rational(q)) == q
