import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplicial_ideals import (
    BudgetExceededError,
    DimensionError,
    Monomial,
    MonomialIdeal,
    ParameterError,
    intersect_all,
)


def ideal_of(n, *exps):
    return MonomialIdeal(n, [Monomial(e) for e in exps])


# random ideals in P^2 with small exponents
gen_lists = st.lists(
    st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple),
    min_size=1, max_size=5)
ideals_p2 = gen_lists.map(lambda gl: ideal_of(2, *gl))
monos_p2 = st.lists(st.integers(0, 6), min_size=3, max_size=3).map(
    lambda e: Monomial(e))


def test_canonicalization_drops_multiples():
    ideal = ideal_of(1, (2, 0), (1, 0), (3, 1))
    assert ideal.gens == (Monomial((1, 0)),)


def test_canonicalization_is_idempotent_and_sorted():
    ideal = ideal_of(2, (2, 2, 0), (0, 2, 2), (1, 1, 1), (2, 0, 2))
    assert MonomialIdeal(2, ideal.gens) == ideal
    degrees = [g.degree for g in ideal.gens]
    assert degrees == sorted(degrees, reverse=True)
    # descending graded-lex throughout
    keys = [(g.degree, g.exps) for g in ideal.gens]
    assert keys == sorted(keys, reverse=True)


def test_zero_and_unit():
    zero = MonomialIdeal.zero(2)
    one = MonomialIdeal.unit(2)
    ideal = ideal_of(2, (1, 1, 0))
    assert zero.is_zero and not zero.is_unit
    assert one.is_unit and not one.is_zero
    assert ideal + zero == ideal
    assert ideal * zero == zero
    assert ideal + one == one
    assert ideal * one == ideal
    assert zero <= ideal <= one


def test_pow_basics():
    ideal = ideal_of(2, (1, 1, 0), (0, 1, 1))
    assert ideal ** 1 == ideal
    assert ideal ** 2 == ideal * ideal
    assert ideal ** 3 == ideal * ideal * ideal
    with pytest.raises(ParameterError):
        ideal ** 0


@given(ideals_p2, ideals_p2)
def test_sum_and_product_commute(I, J):
    assert I + J == J + I
    assert I * J == J * I
    assert I.intersect(J) == J.intersect(I)


@given(ideals_p2, ideals_p2, ideals_p2)
@settings(max_examples=40)
def test_associativity_and_distributivity(I, J, K):
    assert (I + J) + K == I + (J + K)
    assert (I * J) * K == I * (J * K)
    assert I * (J + K) == I * J + I * K


@given(ideals_p2, ideals_p2)
def test_containment_lattice(I, J):
    assert I * J <= I.intersect(J)
    assert I.intersect(J) <= I
    assert I <= I + J
    assert J <= I + J


@given(ideals_p2, ideals_p2, monos_p2)
@settings(max_examples=60)
def test_membership_laws(I, J, mono):
    assert ((mono in I) or (mono in J)) <= (mono in I + J)
    assert (mono in I.intersect(J)) == ((mono in I) and (mono in J))
    if mono in I * J:
        assert mono in I and mono in J


@given(ideals_p2, ideals_p2)
def test_product_generators_are_products(I, J):
    for gen in (I * J).gens:
        assert any((a * b).divides(gen) and gen.divides(a * b)
                   for a in I.gens for b in J.gens)


@given(ideals_p2)
def test_le_means_generator_membership(I):
    bigger = I + ideal_of(2, (1, 0, 0))
    assert I <= bigger
    assert bigger >= I
    if not I.is_zero:
        assert not bigger <= I or bigger == I


def test_comparison_requires_same_ring():
    with pytest.raises(DimensionError):
        ideal_of(1, (1, 0)).equals(ideal_of(2, (1, 0, 0)))
    with pytest.raises(DimensionError):
        ideal_of(1, (1, 0)) <= ideal_of(2, (1, 0, 0))
    # __eq__ stays pythonic
    assert ideal_of(1, (1, 0)) != ideal_of(2, (1, 0, 0))
    assert ideal_of(1, (1, 0)) != "not an ideal"


def test_generator_dimension_checked():
    with pytest.raises(DimensionError):
        MonomialIdeal(2, [Monomial((1, 0))])


def test_text_round_trip():
    ideal = ideal_of(2, (2, 2, 0), (1, 1, 1))
    text = ideal.to_text()
    parsed = MonomialIdeal(2, [Monomial.parse(line, 2)
                               for line in text.splitlines()])
    assert parsed == ideal


def test_json_round_trip():
    ideal = ideal_of(2, (2, 2, 0), (1, 1, 1), (0, 2, 2))
    payload = json.loads(ideal.to_json())
    assert MonomialIdeal.from_lists(2, payload) == ideal


@given(ideals_p2)
def test_lists_round_trip(I):
    assert MonomialIdeal.from_lists(2, I.to_lists()) == I


def test_intersect_all_matches_pairwise():
    I = ideal_of(2, (2, 0, 0), (0, 1, 0))
    J = ideal_of(2, (1, 1, 0))
    K = ideal_of(2, (0, 0, 1))
    assert intersect_all([I, J, K]) == I.intersect(J).intersect(K)


def test_intersect_all_budget():
    # antichain generators so nothing reduces away before the fold
    staircase = ideal_of(2, *[(i, 4 - i, 0) for i in range(5)])
    with pytest.raises(BudgetExceededError):
        intersect_all([staircase, staircase], max_gens=2)
    with pytest.raises(ParameterError):
        intersect_all([])


def test_hash_consistent_with_eq():
    a = ideal_of(2, (1, 1, 0), (2, 2, 0))
    b = ideal_of(2, (1, 1, 0))
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
