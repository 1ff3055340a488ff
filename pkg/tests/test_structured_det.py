"""Structured determinant routes, cross-checked against a cofactor oracle."""

import random
from fractions import Fraction
from itertools import product
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from structdet import (
    DiagonalShifts,
    DomainError,
    det_bareiss,
    det_closed_form,
    det_elimination,
    det_expanded,
    materialize_matrix,
)


def det_cofactor(rows):
    """Laplace expansion along the first row; exponential, small oracles only."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = head * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def reference_pivot(shifts) -> Fraction:
    return Fraction(shifts[0]) * (1 + sum(Fraction(1, v) for v in shifts))


nonzero_ints = st.integers(-9, 9).filter(bool)


# ---------------------------------------------------------------- shifts type


def test_shifts_require_at_least_one_entry():
    with pytest.raises(DomainError):
        DiagonalShifts(())


def test_shifts_require_integers():
    with pytest.raises(DomainError):
        DiagonalShifts((1.5, 2))


def test_shifts_accept_lists_and_report_length():
    shifts = DiagonalShifts([3, -1, 0])
    assert shifts.n == 3
    assert tuple(shifts) == (3, -1, 0)


# ------------------------------------------------------------- materialize


def test_materialize_frozen_examples():
    assert materialize_matrix((1, 2)).entries == ((2, 1), (1, 3))
    assert materialize_matrix((5,)).entries == ((6,),)
    assert materialize_matrix((0, 0)).entries == ((1, 1), (1, 1))


def test_materialized_matrix_is_symmetric():
    entries = materialize_matrix((1, 2, 4, 6)).entries
    for i in range(4):
        for j in range(4):
            assert entries[i][j] == entries[j][i]


def test_render_rows_of_decimal_integers():
    assert materialize_matrix((1, 2)).render() == "2 1\n1 3"
    assert str(materialize_matrix((-3,))) == "-2"


# -------------------------------------------------------------- closed form


def test_closed_form_frozen_examples():
    assert det_cofactor([[3, 1], [1, 4]]) == 11  # oracle behind the (2, 3) value
    assert det_closed_form((1, 2, 4)) == 22
    assert det_closed_form((1, 1, 1, 1)) == 5
    assert det_closed_form((2, 3)) == 11


def test_closed_form_rejects_zero_shifts():
    with pytest.raises(DomainError, match="nonzero"):
        det_closed_form((0, 5))


# ----------------------------------------------------------------- expanded


def test_expanded_frozen_examples():
    assert det_expanded((1, 2, 4)) == 22
    assert det_expanded((0, 0)) == 0
    assert det_cofactor([[1, 1], [1, 6]]) == 5  # oracle behind the (0, 5) value
    assert det_expanded((0, 5)) == 5


def test_expanded_all_ones_gives_n_plus_one():
    for n in range(1, 1001):
        assert det_expanded((1,) * n) == n + 1


def test_expanded_equals_bareiss_exhaustively_on_small_grids():
    for n in (1, 2, 3):
        for shifts in product(range(-3, 4), repeat=n):
            assert det_expanded(shifts) == det_bareiss(materialize_matrix(shifts))


def test_expanded_equals_bareiss_on_random_medium_vectors():
    rng = random.Random(8128)
    for n in range(4, 9):
        for _ in range(500):
            shifts = [rng.randint(-3, 3) for _ in range(n)]
            assert det_expanded(shifts) == det_bareiss(materialize_matrix(shifts))


# -------------------------------------------------------------- elimination


def test_elimination_frozen_examples():
    value, trace = det_elimination((1, 2, 4))
    assert value == 22
    assert trace.pivot_b == Fraction(11, 4)
    assert trace.post_row_step == (2, -1, -1)

    value, trace = det_elimination((1,))
    assert value == 2
    assert trace.pivot_b == 2

    # b = a_1 * (1 + 1/2 + 1/3) = 11/3; times a_2 = 3 gives the determinant
    value, trace = det_elimination((2, 3))
    assert value == 11
    assert trace.pivot_b == reference_pivot((2, 3)) == Fraction(11, 3)


def test_elimination_rejects_zero_shifts():
    with pytest.raises(DomainError, match="divides"):
        det_elimination((1, 0, 3))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-20, 20).filter(bool), min_size=1, max_size=12))
def test_elimination_trace_invariants(shifts):
    value, trace = det_elimination(shifts)
    a1 = shifts[0]
    assert trace.post_row_step == tuple([1 + a1] + [-a1] * (len(shifts) - 1))
    assert trace.pivot_b == reference_pivot(shifts)
    assert trace.final_value == trace.pivot_b * prod(shifts[1:])
    assert value == trace.final_value


# ------------------------------------------------------------------ bareiss


def test_bareiss_identity_and_frozen_examples():
    identity = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert det_bareiss(identity) == 1
    assert det_bareiss([[3, 1], [1, 4]]) == 11
    assert det_bareiss(materialize_matrix((1, 2, 4))) == 22
    assert det_bareiss([[7]]) == 7


def test_bareiss_handles_zero_pivots_and_singularity():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0], [0, 0]]) == 0
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    swapped = [[0, 2, 1], [0, 1, 3], [5, 0, 0]]
    assert det_bareiss(swapped) == det_cofactor(swapped)


def test_bareiss_rejects_non_square_input():
    with pytest.raises(DomainError, match="square"):
        det_bareiss([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(DomainError):
        det_bareiss([])


def test_bareiss_rejects_non_integer_entries():
    with pytest.raises(DomainError, match="integer"):
        det_bareiss([[1.0, 2], [3, 4]])


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
)
def test_bareiss_matches_cofactor_expansion(rows):
    assert det_bareiss(rows) == det_cofactor(rows)


# --------------------------------------------------------------- properties


@settings(max_examples=250, deadline=None)
@given(st.lists(nonzero_ints, min_size=1, max_size=10))
def test_three_methods_agree_on_nonzero_shifts(shifts):
    expanded = det_expanded(shifts)
    assert det_closed_form(shifts) == expanded
    value, _ = det_elimination(shifts)
    assert value == expanded


@settings(max_examples=250, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=8))
def test_expanded_matches_bareiss_oracle(shifts):
    assert det_expanded(shifts) == det_bareiss(materialize_matrix(shifts))


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(-6, 6), min_size=1, max_size=8).flatmap(
        lambda a: st.tuples(st.just(a), st.permutations(a))
    )
)
def test_expanded_is_permutation_invariant(pair):
    shifts, shuffled = pair
    assert det_expanded(shifts) == det_expanded(list(shuffled))


@settings(max_examples=200, deadline=None)
@given(st.lists(nonzero_ints, min_size=1, max_size=9), st.integers(0, 9))
def test_single_zero_shift_reduces_to_leave_one_out_product(nonzero, raw_pos):
    pos = raw_pos % (len(nonzero) + 1)
    shifts = nonzero[:pos] + [0] + nonzero[pos:]
    assert det_expanded(shifts) == prod(nonzero)
