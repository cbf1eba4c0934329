"""Monoid arithmetic, membership, enumeration and divisor sets."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from euclidlab import (
    BoundExceededError,
    Congruence,
    DivisibilityTable,
    InvalidInputError,
    MonoidMismatchError,
    Naturals,
    Quadratic,
    common_divisors,
    contains,
    divisors,
    enumerate_up_to,
    mul,
    try_divide,
)

NAT = Naturals()
C13 = Congruence(1, 3)
Q2 = Quadratic(2)

members_nat = st.integers(min_value=1, max_value=400)
members_c13 = st.integers(min_value=0, max_value=130).map(lambda k: 1 + 3 * k)
members_q2 = st.tuples(st.integers(0, 12), st.integers(0, 12)).filter(
    lambda p: p != (0, 0))


def elem(monoid, v):
    return monoid.element(*v) if isinstance(v, tuple) else monoid.element(v)


# -- construction and membership ----------------------------------------------

def test_congruence_requires_closure():
    with pytest.raises(InvalidInputError) as err:
        Congruence(2, 3)
    assert "not multiplicatively closed" in str(err.value)
    assert "product 4 has residue 1, expected 2" in str(err.value)


def test_congruence_closure_witness_mod_4():
    with pytest.raises(InvalidInputError) as err:
        Congruence(2, 4)
    assert "product 4 has residue 0, expected 2" in str(err.value)


def test_congruence_accepts_closed_classes():
    for r, m in [(1, 3), (1, 4), (3, 6), (4, 6), (5, 20), (1, 1)]:
        monoid = Congruence(r, m)
        s = [e.value for e in enumerate_up_to(monoid, 40)]
        for x in s:
            for y in s:
                assert monoid.contains(x * y)


def test_quadratic_requires_square_free_radicand():
    for d in (4, 8, 9, 12, 18, 1, 0, -2):
        with pytest.raises(InvalidInputError):
            Quadratic(d)
    for d in (2, 3, 5, 6, 7, 10):
        Quadratic(d)


def test_quadratic_default_radicand_is_two():
    assert Quadratic().radicand == 2
    assert Quadratic().spec_text() == "quadratic 2"


def test_membership_edges():
    assert not NAT.contains(0)
    assert NAT.contains(1)
    assert not C13.contains(5)
    assert C13.contains(1) and C13.contains(4)
    assert not Q2.contains(0, 0)
    assert Q2.contains(0, 1)
    # malformed raw components are errors, not non-members
    with pytest.raises(InvalidInputError):
        NAT.contains(-3)
    with pytest.raises(InvalidInputError):
        Q2.contains(-1, 2)
    with pytest.raises(InvalidInputError):
        NAT.contains(True)
    with pytest.raises(InvalidInputError):
        NAT.contains("4")


def test_element_constructor_validates():
    with pytest.raises(InvalidInputError):
        NAT.element(0)
    with pytest.raises(InvalidInputError):
        C13.element(6)
    with pytest.raises(InvalidInputError):
        Q2.element(0, 0)


def test_contains_module_level():
    assert contains(C13, 10)
    assert not contains(C13, 8)
    assert contains(Q2, 3, 8)


# -- multiplication ------------------------------------------------------------

def test_quadratic_product_example():
    x = Q2.element(3, 8)
    y = Q2.element(1, 2)
    assert (x * y).pair == (35, 14)
    assert (Q2.element(7, 0) * Q2.element(5, 2)).pair == (35, 14)


def test_mul_rejects_mixed_monoids():
    with pytest.raises(MonoidMismatchError):
        mul(NAT.element(2), C13.element(4))


@given(members_q2, members_q2)
def test_quadratic_mul_matches_oracle(x, y):
    assert mul(elem(Q2, x), elem(Q2, y)).pair == oracles.quad_mul(x, y, 2)


@given(members_c13, members_c13)
def test_closure_congruence(x, y):
    assert C13.contains(mul(elem(C13, x), elem(C13, y)).value)


@given(members_q2, members_q2, members_q2)
def test_mul_commutative_associative(x, y, z):
    ex, ey, ez = elem(Q2, x), elem(Q2, y), elem(Q2, z)
    assert ex * ey == ey * ex
    assert (ex * ey) * ez == ex * (ey * ez)


# -- division -------------------------------------------------------------------

def test_quadratic_division_example():
    q = try_divide(Q2.element(35, 14), Q2.element(1, 2))
    assert q is not None and q.pair == (3, 8)
    assert try_divide(Q2.element(35, 14), Q2.element(7, 0)).pair == (5, 2)
    assert try_divide(Q2.element(7, 0), Q2.element(1, 2)) is None


def test_division_requires_member_quotient():
    # 10/2 = 5 in the integers, but 2 and 5 are not members mod 3
    assert try_divide(C13.element(10), C13.element(10)).value == 1
    assert try_divide(C13.element(40), C13.element(4)).value == 10
    assert try_divide(C13.element(100), C13.element(40)) is None


@given(members_q2, members_q2)
def test_try_divide_mul_round_trip_quadratic(a, q):
    ea, eq = elem(Q2, a), elem(Q2, q)
    assert try_divide(ea * eq, ea) == eq


@given(members_nat, members_nat)
def test_try_divide_mul_round_trip_nat(a, q):
    ea, eq = elem(NAT, a), elem(NAT, q)
    assert try_divide(ea * eq, ea) == eq


@given(members_c13, members_c13)
def test_cancellation_by_construction(a, x):
    # a*x = a*y forces x = y: division recovers the cofactor uniquely
    ea, ex = elem(C13, a), elem(C13, x)
    assert try_divide(ea * ex, ea) == ex


@given(members_q2, members_q2)
def test_quadratic_divide_matches_oracle(b, a):
    got = try_divide(elem(Q2, b), elem(Q2, a))
    want = oracles.quad_try_divide(b, a, 2)
    assert (got.pair if got is not None else None) == want


# -- norm order and enumeration -------------------------------------------------

def test_enumeration_frozen_lists():
    assert [e.value for e in enumerate_up_to(NAT, 3)] == [1, 2, 3]
    assert [e.value for e in enumerate_up_to(C13, 13)] == [1, 4, 7, 10, 13]
    assert [e.pair for e in enumerate_up_to(Q2, 3)] == [
        (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0)]


def test_enumeration_matches_oracle_membership():
    got = {e.pair for e in enumerate_up_to(Q2, 12)}
    assert got == set(oracles.quad_members(2, (12, 0)))
    got = {e.value for e in enumerate_up_to(C13, 100)}
    assert got == set(oracles.congruence_members(1, 3, 100))


def test_enumeration_strictly_ordered_quadratic():
    elems = enumerate_up_to(Q2, 25)
    for prev, cur in zip(elems, elems[1:]):
        assert prev < cur  # no norm ties: sqrt(2) is irrational


def test_enumeration_bound_can_be_an_element():
    bound = Q2.element(3, 1)
    got = [e.pair for e in enumerate_up_to(Q2, bound)]
    assert got[-1] == (3, 1)
    assert set(got) == set(oracles.quad_members(2, (3, 1)))


@given(members_q2, members_q2)
def test_norm_monotone_under_mul(x, y):
    ex, ey = elem(Q2, x), elem(Q2, y)
    p = ex * ey
    assert p >= ex and p >= ey
    if p == ex:
        assert ey.is_identity()


def test_enumeration_ceiling_raises():
    with pytest.raises(BoundExceededError) as err:
        enumerate_up_to(NAT, 99_999_999)
    assert err.value.candidates == 99_999_999
    assert err.value.ceiling == 1_000_000
    with pytest.raises(BoundExceededError):
        enumerate_up_to(NAT, 100, ceiling=50)
    # a raised ceiling makes the same call legal
    assert len(enumerate_up_to(NAT, 100, ceiling=100)) == 100


def test_ceiling_guards_divisor_scans():
    with pytest.raises(BoundExceededError):
        divisors(NAT.element(30), ceiling=10)


# -- divisor sets ----------------------------------------------------------------

def test_divisors_frozen_congruence_40_100():
    assert [d.value for d in divisors(C13.element(40))] == [1, 4, 10, 40]
    assert [d.value for d in divisors(C13.element(100))] == [1, 4, 10, 25, 100]
    assert [d.value for d in divisors(C13.element(40), nontrivial=True)] == [4, 10, 40]


def test_common_divisors_frozen():
    got = common_divisors(C13.element(40), C13.element(100))
    assert [d.value for d in got] == [1, 4, 10]


def test_divisors_identity():
    assert [d.value for d in divisors(NAT.element(1))] == [1]
    assert divisors(C13.element(1), nontrivial=True) == []


@given(st.integers(min_value=1, max_value=300))
def test_nat_divisors_match_trial_division(n):
    assert {d.value for d in divisors(NAT.element(n))} == oracles.nat_divisors(n)


@given(st.integers(min_value=0, max_value=110).map(lambda k: 1 + 3 * k))
def test_congruence_divisors_match_oracle(n):
    got = {d.value for d in divisors(C13.element(n))}
    assert got == oracles.congruence_divisors(1, 3, n)


@given(st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda p: p != (0, 0)))
@settings(deadline=None)
def test_quadratic_divisors_match_oracle(pair):
    got = {d.pair for d in divisors(elem(Q2, pair))}
    assert got == oracles.quad_divisors(2, pair)


# -- the product-scan table agrees with the definitional route -------------------

@pytest.mark.parametrize("monoid,bound", [(NAT, 60), (C13, 250), (Q2, 20)])
def test_divisibility_table_agrees_with_divisors(monoid, bound):
    table = DivisibilityTable(monoid, bound)
    for i, x in enumerate(table.elements):
        via_table = {table.elements[j].parts for j in table.divisor_ids[i]}
        via_definition = {d.parts for d in divisors(x)}
        assert via_table == via_definition
    for (xi, ui), vi in table.quotient.items():
        assert table.elements[ui] * table.elements[vi] == table.elements[xi]


# -- element behaviour ------------------------------------------------------------

def test_element_rendering():
    assert NAT.element(7).render() == "7"
    assert Q2.element(35, 14).render() == "35+14*sqrt(2)"
    assert Q2.element(35, 14).to_payload() == [35, 14]
    assert C13.element(10).to_payload() == 10


def test_element_ordering_is_norm_order():
    assert Q2.element(1, 1) < Q2.element(0, 2)  # 1+sqrt2 < 2*sqrt2
    assert Q2.element(3, 0) > Q2.element(1, 1)
    assert NAT.element(2) < NAT.element(3)
    with pytest.raises(MonoidMismatchError):
        _ = NAT.element(2) < C13.element(4)


def test_element_value_pair_accessors():
    assert NAT.element(9).value == 9
    assert Q2.element(2, 5).pair == (2, 5)
    with pytest.raises(InvalidInputError):
        _ = Q2.element(2, 5).value
    with pytest.raises(InvalidInputError):
        _ = NAT.element(9).pair
