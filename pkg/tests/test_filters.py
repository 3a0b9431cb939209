from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CORPUS, SMALL, corpus_and_small, el, members
from rlkit.algebra import chain, direct_product
from rlkit.errors import AlgebraMismatch, EmptyGenerator, ImproperFilter, InputNotPseudoIrreducible
from rlkit.filters import (
    BLP_METHODS,
    PSEUDO_IRREDUCIBLE_METHODS,
    FilterSet,
    comaximal_intersection_test,
    enumerate_filters,
    extend,
    filter_arrow,
    filter_join,
    filter_lattice,
    filter_meet,
    generated_filter,
    has_blp,
    is_local,
    is_maximal,
    is_prime,
    is_pseudo_irreducible,
    maximal_filters,
    prime_filters,
    prime_witness,
    principal,
    trivial_filter,
    whole,
)
from rlkit.theorems import filter_identity_violations


def P(A, name):
    return principal(A, A.index(name))


# generated filters and lattice operations ----------------------------------------


def test_generated_filters_of_examples(ex):
    A = ex["example_2_2"]
    assert members(generated_filter(A, el(A, "a"))) == {"a", "c", "1"}
    B = ex["example_2_5"]
    assert members(generated_filter(B, el(B, "c", "d"))) == {"n", "c", "d", "1"}
    for X in (A, B):
        assert generated_filter(X, [X.top]) == trivial_filter(X)


def test_empty_generator_is_rejected(ex):
    with pytest.raises(EmptyGenerator):
        generated_filter(ex["example_2_2"], [])


def test_joins_and_meets_of_examples(ex):
    A = ex["example_2_2"]
    Fa, Fb, Fc = P(A, "a"), P(A, "b"), P(A, "c")
    assert filter_join(Fa, Fb) == whole(A)
    assert filter_meet(Fa, Fb) == Fc
    B = ex["example_2_5"]
    assert filter_join(P(B, "c"), P(B, "d")) == P(B, "n")
    assert members(P(B, "n")) == {"n", "c", "d", "1"}


def test_mixing_algebras_is_rejected(ex):
    with pytest.raises(AlgebraMismatch):
        filter_join(trivial_filter(ex["example_2_2"]), trivial_filter(ex["example_2_5"]))


@pytest.mark.parametrize("A", corpus_and_small())
def test_generated_filter_is_least_filter(A):
    for S in oracles.subsets(A.order):
        if S:
            assert set(generated_filter(A, S)) == oracles.closure(A, S)


@pytest.mark.parametrize("A", corpus_and_small())
def test_join_meet_arrow_match_oracle(A):
    fs = oracles.filters(A)
    for F, G in product(fs, repeat=2):
        FF, GG = FilterSet(A, sum(1 << x for x in F)), FilterSet(A, sum(1 << x for x in G))
        assert set(filter_join(FF, GG)) == oracles.fjoin(A, F, G)
        assert set(filter_meet(FF, GG)) == F & G
        arrow = {x for x in A.elements if F & oracles.closure(A, {x}) <= G}
        assert set(filter_arrow(FF, GG)) == arrow
        assert oracles.is_filter(A, frozenset(arrow))
        assert filter_join(FF, trivial_filter(A)) == FF


@pytest.mark.parametrize("A", corpus_and_small())
def test_principal_and_extension_identities(A):
    FL = filter_lattice(A)
    assert list(filter_identity_violations(A, list(FL), list(product(A.elements, repeat=2)))) == []
    for F in FL:
        for x in A.elements:
            assert extend(F, x) == filter_join(F, principal(A, x))


# enumeration ---------------------------------------------------------------------


def test_example_filter_lattices(ex):
    A = ex["example_2_2"]
    FL = filter_lattice(A)
    assert [members(F) for F in FL] == [
        {"1"},
        {"c", "1"},
        {"a", "c", "1"},
        {"b", "c", "1"},
        {"0", "a", "b", "c", "1"},
    ]
    B = ex["example_2_5"]
    got = {frozenset(F.names()) for F in filter_lattice(B)}
    for name in ("1", "c", "d", "n", "a", "b", "0"):
        assert frozenset(P(B, name).names()) in got
    assert len(filter_lattice(chain(2))) == 2


@pytest.mark.parametrize("A", corpus_and_small())
def test_enumeration_matches_powerset_oracle(A):
    want = sorted(oracles.filters(A), key=lambda F: (len(F), sum(1 << x for x in F)))
    principal_route = [set(F) for F in enumerate_filters(A, "principal")]
    powerset_route = [set(F) for F in enumerate_filters(A, "powerset")]
    assert principal_route == powerset_route == [set(F) for F in want]


@pytest.mark.parametrize("A", corpus_and_small())
def test_every_filter_is_principal_on_its_generator(A):
    for F in filter_lattice(A):
        assert principal(A, F.generator()) == F


# primes, maxima, locality ---------------------------------------------------------


def test_example_2_5_trivial_filter_is_not_prime(ex):
    A = ex["example_2_5"]
    one = trivial_filter(A)
    assert not is_prime(one)
    x, y = prime_witness(one)
    assert A.join[x][y] == A.top and {A.names[x], A.names[y]} == {"c", "d"}


def test_whole_algebra_is_not_prime(ex):
    for A in ex.values():
        assert not is_prime(whole(A)) and not is_maximal(whole(A))


def test_example_2_2_maxima(ex):
    A = ex["example_2_2"]
    assert [members(M) for M in maximal_filters(A)] == [{"a", "c", "1"}, {"b", "c", "1"}]
    assert not is_local(A)
    assert is_local(chain(4))


@pytest.mark.parametrize("A", corpus_and_small())
def test_prime_maximal_flags_match_oracle(A):
    maxima = set(oracles.maximal(A))
    for F in filter_lattice(A):
        S = frozenset(F)
        assert is_prime(F) == oracles.is_prime(A, S)
        assert is_maximal(F) == (S in maxima)
    assert is_local(A) == (len(maxima) == 1)


# pseudo-irreducibility ------------------------------------------------------------


def test_pseudo_irreducibility_of_examples(ex):
    A = ex["example_2_2"]
    for m in PSEUDO_IRREDUCIBLE_METHODS:
        assert not is_pseudo_irreducible(P(A, "c"), m)
        assert is_pseudo_irreducible(P(A, "a"), m)
    B = ex["example_2_5"]
    for m in PSEUDO_IRREDUCIBLE_METHODS:
        assert is_pseudo_irreducible(trivial_filter(B), m)


def test_pseudo_irreducibility_needs_a_proper_filter(ex):
    A = ex["example_2_2"]
    with pytest.raises(ImproperFilter):
        is_pseudo_irreducible(whole(A))
    with pytest.raises(ValueError):
        is_pseudo_irreducible(trivial_filter(A), "nonsense")


@pytest.mark.parametrize("A", corpus_and_small())
def test_pseudo_irreducible_methods_agree_with_oracle(A):
    for F in filter_lattice(A).proper:
        want = oracles.is_pseudo_irreducible(A, frozenset(F))
        assert {m: is_pseudo_irreducible(F, m) for m in PSEUDO_IRREDUCIBLE_METHODS} == dict.fromkeys(
            PSEUDO_IRREDUCIBLE_METHODS, want
        )


@pytest.mark.parametrize("A", corpus_and_small())
def test_prime_and_maximal_chain(A):
    B = A.boolean
    for F in filter_lattice(A).proper:
        if is_maximal(F):
            assert is_prime(F)
        if is_prime(F):
            assert is_pseudo_irreducible(F)
        if is_pseudo_irreducible(F):
            assert all(e in F or A.star(e) in F for e in B)
            assert has_blp(F)
    if A.order > 1:  # the trivial algebra has no proper filter at all
        every_pi = all(is_pseudo_irreducible(F) for F in filter_lattice(A).proper)
        assert is_local(A) == every_pi


@pytest.mark.parametrize("A", corpus_and_small())
def test_proper_filters_are_intersections_of_primes(A):
    primes = prime_filters(A)
    for F in filter_lattice(A).proper:
        mask = (1 << A.order) - 1
        for Q in primes:
            if F <= Q:
                mask &= Q.mask
        assert mask == F.mask


def test_comaximal_intersection_examples(ex):
    A = ex["example_2_2"]
    assert comaximal_intersection_test(P(A, "a"), P(A, "b")) is False
    assert not is_pseudo_irreducible(filter_meet(P(A, "a"), P(A, "b")))
    assert comaximal_intersection_test(P(A, "a"), P(A, "a")) is True
    B = ex["example_2_5"]
    assert comaximal_intersection_test(P(B, "c"), P(B, "d")) is True
    assert is_pseudo_irreducible(filter_meet(P(B, "c"), P(B, "d")))
    with pytest.raises(InputNotPseudoIrreducible):
        comaximal_intersection_test(P(A, "c"), P(A, "a"))


# Boolean lifting -----------------------------------------------------------------


def test_blp_on_trivial_and_whole_filters(ex):
    for A in list(ex.values()) + SMALL:
        for m in BLP_METHODS:
            assert has_blp(trivial_filter(A), m)
            assert has_blp(whole(A), m)


def test_blp_of_example_2_2_radical(ex):
    A = ex["example_2_2"]
    # L/[c) has four classes {0},{a},{b},{c,1}; a/[c) is complemented but has no Boolean lift
    assert oracles.has_blp(A, frozenset(P(A, "c"))) is False
    for m in BLP_METHODS:
        assert has_blp(P(A, "c"), m) is False


@pytest.mark.parametrize("A", corpus_and_small())
def test_blp_methods_agree_with_oracle(A):
    for F in filter_lattice(A):
        want = oracles.has_blp(A, frozenset(F))
        assert {m: has_blp(F, m) for m in BLP_METHODS} == dict.fromkeys(BLP_METHODS, want)


@pytest.mark.parametrize("A", corpus_and_small())
def test_blp_closure_properties(A):
    FL = filter_lattice(A)
    B = sorted(A.boolean)
    for mask in range(1 << len(B)):
        X = [e for k, e in enumerate(B) if mask >> k & 1]
        assert has_blp(generated_filter(A, X + [A.top]))
    for F, G in product(FL, repeat=2):
        if F.is_proper and is_pseudo_irreducible(F) and has_blp(G) and FL.join(F, G) != FL.whole:
            assert has_blp(filter_meet(F, G))
    if A.order > 1 and len(A.boolean) == 2:
        for F in FL.proper:
            assert has_blp(F) == is_pseudo_irreducible(F)


def test_product_of_chains_has_split_filters():
    A = direct_product(chain(2), chain(3))
    FL = filter_lattice(A)
    assert len(maximal_filters(A)) == 2
    assert all(has_blp(F) for F in FL)


# property-based closure ---------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL + list(CORPUS.values())), st.data())
def test_filter_lattice_is_distributive(A, data):
    FL = filter_lattice(A)
    F, G, H = (data.draw(st.sampled_from(FL.filters)) for _ in range(3))
    assert filter_meet(F, filter_join(G, H)) == filter_join(filter_meet(F, G), filter_meet(F, H))
    assert filter_join(F, filter_meet(F, G)) == F
    assert filter_meet(F, filter_arrow(F, G)) <= G


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL + list(CORPUS.values())), st.data())
def test_principal_filter_identities(A, data):
    x = data.draw(st.sampled_from(list(A.elements)))
    y = data.draw(st.sampled_from(list(A.elements)))
    Fx, Fy = principal(A, x), principal(A, y)
    assert filter_join(Fx, Fy) == principal(A, A.meet[x][y]) == principal(A, A.mon[x][y])
    assert filter_meet(Fx, Fy) == principal(A, A.join[x][y])
