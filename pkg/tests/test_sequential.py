"""Indicator primitives, h products, deltas, and the literal sum."""

from __future__ import annotations

from fractions import Fraction
from math import floor

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from frobenius import (
    InvalidInputError,
    SequentialTrace,
    delta,
    delta_scan,
    f_indicator,
    frobenius_oracle,
    gcd_all,
    h_general,
    h_is_zero,
    h_two,
    has_rep,
    has_rep_two,
    n_indicator,
    normalize_basis,
    sequential_trace,
    sieve,
)


@st.composite
def small_bases(draw, max_element=30, max_arity=4):
    n = draw(st.integers(2, max_arity))
    raw = draw(st.sets(st.integers(2, max_element), min_size=n, max_size=n))
    assume(gcd_all(raw) == 1)
    return normalize_basis(raw)


def test_f_spot_values():
    assert f_indicator(3, 6) == 0
    assert f_indicator(3, 7) == -1
    assert f_indicator(5, 3) == -1  # below alpha: inner floor is 0
    assert f_indicator(2, 2) == 0


@given(st.integers(1, 400), st.integers(1, 400))
def test_f_is_a_divisibility_indicator(alpha, R):
    v = f_indicator(alpha, R)
    assert isinstance(v, int) and not isinstance(v, bool)
    assert v == (0 if R >= alpha and R % alpha == 0 else -1)


def test_f_validation():
    with pytest.raises(InvalidInputError):
        f_indicator(0, 5)
    with pytest.raises(InvalidInputError):
        f_indicator(3, 0)


def test_n_spot_values():
    assert n_indicator(0) == 1
    assert n_indicator(1) == 0
    assert n_indicator(-1) == 0
    assert n_indicator(Fraction(0, 7)) == 1
    assert n_indicator(Fraction(-2, 3)) == 0


@given(st.integers(-50, 50), st.integers(1, 50))
def test_n_agrees_with_its_floor_form(num, den):
    x = Fraction(num, den)
    assume(-1 <= x <= 1)
    assert n_indicator(x) == floor(-abs(x)) + 1


def test_n_rejects_floats_and_out_of_domain():
    with pytest.raises(InvalidInputError):
        n_indicator(0.0)
    with pytest.raises(InvalidInputError):
        n_indicator(2)
    with pytest.raises(InvalidInputError):
        n_indicator(Fraction(-3, 2))


def test_h_two_spot_values():
    assert h_two(7, 3, 5) == -2  # nonzero magnitude exceeds 1: not a +/-1 indicator
    assert h_two(8, 3, 5) == 0
    assert h_two(6, 3, 5) == 0
    assert h_two(1, 3, 5) == 1  # two -1 factors: f(5, 1) and the residue term
    assert isinstance(h_two(7, 3, 5), Fraction)


@given(st.integers(2, 25), st.integers(3, 26), st.integers(1, 200))
def test_h_two_zero_iff_representable(b1, b2, R):
    assume(b1 < b2)
    assert (h_two(R, b1, b2) == 0) == has_rep_two(R, b1, b2)


def test_h_two_validation():
    with pytest.raises(InvalidInputError):
        h_two(0, 3, 5)
    with pytest.raises(InvalidInputError):
        h_two(7, 5, 3)


@pytest.mark.parametrize(
    "elements",
    [(3, 5), (2, 5), (3, 5, 7), (6, 10, 15), (5, 7, 9, 11), (8, 9, 10, 11)],
)
def test_h_exact_value_zero_iff_oracle_bit(elements):
    basis = normalize_basis(elements)
    a1, a2 = basis.elements[0], basis.elements[1]
    upper = a1 * a2 - a1 - a2
    table = sieve(basis, upper)
    memo = {}
    for R in range(1, upper + 1):
        value = h_general(R, basis)
        assert isinstance(value, Fraction)
        assert (value == 0) == table[R], (elements, R, value)
        assert h_is_zero(R, basis, memo) == (value == 0), (elements, R)


def test_h_general_two_element_case_is_h_two():
    b = normalize_basis([3, 5])
    for R in range(1, 8):
        assert h_general(R, b) == h_two(R, 3, 5)


@settings(max_examples=60, deadline=None)
@given(small_bases(), st.integers(1, 120))
def test_zero_test_matches_membership(basis, R):
    assert h_is_zero(R, basis) == has_rep(R, basis)


def test_delta_polarity_and_range():
    b = normalize_basis([3, 5])
    assert [delta(i, b) for i in range(1, 8)] == [1, 1, 0, 1, 0, 0, 1]
    with pytest.raises(InvalidInputError):
        delta(0, b)
    with pytest.raises(InvalidInputError):
        delta(8, b)


def test_delta_scan_examples():
    assert delta_scan(normalize_basis([3, 5])) == (7, 1)
    assert delta_scan(normalize_basis([7, 11, 13])) == (30, 30)
    # Non-coprime smallest pair: scan starts at the telescoped bound 3.
    assert delta_scan(normalize_basis([2, 4, 5])) == (3, 1)


def test_trace_example():
    tr = sequential_trace(normalize_basis([3, 5]))
    assert tr.upper == 7
    assert tr.deltas == (1, 1, 0, 1, 0, 0, 1)
    assert tr.result == 7
    assert tr.h_values is None


def test_trace_with_h_values():
    tr = sequential_trace(normalize_basis([3, 5]), include_h_values=True)
    assert tr.h_values is not None
    assert len(tr.h_values) == 7
    assert tr.h_values[6] == -2  # h at R = 7
    assert tr.h_values[2] == 0  # h at R = 3
    assert all(isinstance(v, Fraction) for v in tr.h_values)


def test_trace_tiny_and_degenerate_bases():
    tr = sequential_trace(normalize_basis([2, 3]))
    assert (tr.upper, tr.deltas, tr.result) == (1, (1,), 1)
    tr = sequential_trace(normalize_basis([1, 9]))
    assert (tr.upper, tr.deltas, tr.result) == (-1, (), -1)


@settings(max_examples=50, deadline=None)
@given(small_bases(max_element=25, max_arity=3))
def test_trace_result_equals_scan_and_oracle(basis):
    tr = sequential_trace(basis)
    assert tr.result == delta_scan(basis)[0] == frobenius_oracle(basis)
    # The literal sum only keeps the largest non-representable index.
    assert tr.deltas[tr.result - 1] == 1
    assert all(d == 0 for d in tr.deltas[tr.result :])


def test_trace_validation():
    with pytest.raises(InvalidInputError):
        SequentialTrace(upper=3, deltas=(1, 0), result=1)
    with pytest.raises(InvalidInputError):
        SequentialTrace(upper=2, deltas=(1, 2), result=1)
    with pytest.raises(InvalidInputError):
        SequentialTrace(upper=2, deltas=(1, 0), result=1, h_values=(Fraction(1),))
