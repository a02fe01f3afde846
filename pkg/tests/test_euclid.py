"""Tests for the fixed-perimeter Euclidean area calculus."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyptile.errors import DomainError
from hyptile.euclid import (
    A_of_n,
    concavity_report,
    halving_inequality,
    jensen_audit,
)


def test_square_and_hexagon_closed_forms():
    # unit-side square: P = 4, A = 1; unit-side hexagon: P = 6, A = 1.5*sqrt(3)
    assert abs(A_of_n(4, 4.0) - 1.0) <= 1e-12
    assert abs(A_of_n(6, 6.0) - 1.5 * math.sqrt(3.0)) <= 1e-12


def test_area_vanishes_at_and_below_two():
    assert A_of_n(0.0, 1.0) == 0.0
    assert A_of_n(1.7, 1.0) == 0.0
    assert A_of_n(2.0, 1.0) == 0.0
    # continuity at the splice: just above 2 the area is tiny
    assert 0.0 < A_of_n(2.0 + 1e-9, 1.0) < 1e-9


def test_area_scales_with_perimeter_squared():
    assert abs(A_of_n(5, 2.0) - 4.0 * A_of_n(5, 1.0)) <= 1e-15


def test_domain_errors():
    with pytest.raises(DomainError):
        A_of_n(-1.0, 1.0)
    with pytest.raises(DomainError):
        A_of_n(4.0, 0.0)
    with pytest.raises(DomainError):
        halving_inequality(5)
    with pytest.raises(DomainError):
        concavity_report(2.0, 12.0, 1.0)
    with pytest.raises(DomainError):
        concavity_report(3.0, 12.0, -1.0)
    with pytest.raises(DomainError):
        jensen_audit([], 1.0, 0.0)
    with pytest.raises(DomainError):
        jensen_audit([4, -1], 1.0, 0.0)


def test_concavity_scan():
    rep = concavity_report(2.5, 40.0, 1.0)
    assert rep.samples >= 1000
    assert rep.all_concave
    assert rep.all_increasing
    assert rep.max_second < 0.0
    assert rep.min_first > 0.0


@given(st.floats(min_value=6.0, max_value=1000.0))
def test_halving_inequality_holds_from_six_up(n):
    assert halving_inequality(n)


@given(
    st.floats(min_value=2.1, max_value=500.0),
    st.floats(min_value=2.1, max_value=500.0),
)
def test_strict_monotonicity_pairs(a, b):
    if abs(a - b) < 1e-9:
        return
    lo, hi = sorted((a, b))
    assert A_of_n(lo, 1.0) < A_of_n(hi, 1.0)


def test_jensen_chain_on_a_mixed_multiset():
    rep = jensen_audit([7, 6, 5, 6], P=1.0, A_target=4 * A_of_n(5.9, 1.0))
    assert rep.hypothesis_ok  # mean 6
    assert rep.repairs == ()
    assert rep.chain_holds
    assert rep.slack_jensen >= 0.0
    assert rep.slack_six >= 0.0


def test_jensen_chain_tight_at_all_six():
    n = 24
    rep = jensen_audit([6] * n, P=1.0, A_target=n * A_of_n(6, 1.0))
    assert rep.all_six
    assert rep.repairs == ()
    # the whole chain collapses to equalities, and the fsum-based area
    # total must round identically to N * A(6)
    assert rep.slack_target == 0.0
    assert rep.slack_jensen == 0.0
    assert rep.slack_six == 0.0
    assert rep.chain_holds


def test_jensen_repairs_small_counts():
    rep = jensen_audit([1, 8, 6, 6], P=1.0, A_target=0.0)
    assert rep.repairs == ((1.0, 8.0),)
    assert rep.repaired == (4.0, 4.0, 6.0, 6.0)
    assert not rep.exhausted
    # the repair can only raise the area sum and lower the mean
    assert rep.repaired_mean <= rep.mean
    assert rep.chain_holds


def test_jensen_exhausted_when_no_donor_remains():
    rep = jensen_audit([1, 1, 5, 5], P=1.0, A_target=0.0)
    assert rep.exhausted
    # endpoint inequality still audited directly
    assert rep.chain_holds


def test_jensen_rejects_over_mean_six():
    rep = jensen_audit([7, 7, 7, 7], P=1.0, A_target=0.0)
    assert not rep.hypothesis_ok
    assert not rep.chain_holds
