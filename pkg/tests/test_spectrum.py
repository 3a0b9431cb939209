from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CORPUS, SMALL, corpus_and_small, members
from rlkit.algebra import chain, classify, direct_product
from rlkit.filters import filter_lattice, has_blp, is_pseudo_irreducible, principal, trivial_filter
from rlkit.radicals import radical_of_algebra
from rlkit.spectrum import build_spectrum, clopen_sets, generated_v, max_clopen_check, v_of
from rlkit.theorems import v_identity_violations


def test_example_2_2_points(ex):
    A = ex["example_2_2"]
    sp = build_spectrum(A, "spec")
    assert sorted(map(members, sp.points), key=len) == [{"1"}, {"a", "c", "1"}, {"b", "c", "1"}]
    mx = build_spectrum(A, "max")
    assert [members(P) for P in mx.points] == [{"a", "c", "1"}, {"b", "c", "1"}]


def test_two_element_chain_has_one_prime():
    sp = build_spectrum(chain(2))
    assert [members(P) for P in sp.points] == [{"1"}]


def test_v_sets_of_example_2_2(ex):
    A = ex["example_2_2"]
    sp = build_spectrum(A)
    names = lambda S: sorted(tuple(sorted(sp.points[k].names())) for k in S)
    assert names(v_of(A, [A.index("a")])) == [("1", "a", "c")]
    assert names(v_of(A, [A.index("c")])) == [("1", "a", "c"), ("1", "b", "c")]
    assert v_of(A, [A.top]) == sp.everything
    assert v_of(A, [A.bottom]) == frozenset()


def test_clopens_of_examples(ex):
    sp = build_spectrum(ex["example_2_5"])
    assert clopen_sets(sp) == {frozenset(), sp.everything}
    P = direct_product(chain(2), chain(2))
    assert len(clopen_sets(build_spectrum(P))) == 4


def test_connectedness_examples(ex):
    A = ex["example_2_2"]
    sp = build_spectrum(A)
    Vc = sp.v_of(principal(A, A.index("c")))
    assert len(Vc) == 2 and not sp.is_connected_subspace(Vc)
    for k in range(len(sp)):
        assert sp.is_connected_subspace({k})
    B = ex["example_2_5"]
    spb = build_spectrum(B)
    assert spb.is_connected_subspace(spb.v_of(trivial_filter(B)))


def test_max_clopen_examples(ex):
    assert max_clopen_check(ex["example_5_10"])
    assert max_clopen_check(chain(4))
    # criterion recomputed from the radical: see the ledger for the example_5_15 tables
    A = ex["example_5_15"]
    assert max_clopen_check(A) == has_blp(radical_of_algebra(A))


@pytest.mark.parametrize("A", corpus_and_small())
def test_points_and_v_sets_match_oracle(A):
    sp = build_spectrum(A)
    primes = [frozenset(F) for F in filter_lattice(A) if oracles.is_prime(A, frozenset(F))]
    assert [frozenset(P) for P in sp.points] == primes
    for S in oracles.subsets(A.order):
        want = frozenset(k for k, P in enumerate(primes) if S <= P)
        assert v_of(A, S) == want
        if S:
            assert generated_v(A, S) == frozenset(k for k, P in enumerate(primes) if S <= P)


@pytest.mark.parametrize("A", corpus_and_small())
def test_topology_laws(A):
    FL = filter_lattice(A)
    for variant in ("spec", "max"):
        sp = build_spectrum(A, variant)
        fam = sp.closed_family
        assert frozenset() in fam and sp.everything in fam
        for C, D in product(fam, repeat=2):
            assert C | D in fam and C & D in fam
        for F in FL:
            assert (sp.v_of(F) == frozenset()) == F.is_improper
    pairs = list(product(A.elements, repeat=2))
    assert list(v_identity_violations(A, list(FL), pairs)) == []


@pytest.mark.parametrize("A", corpus_and_small())
def test_clopens_are_boolean_v_sets(A):
    sp = build_spectrum(A)
    B = sorted(A.boolean)
    assert clopen_sets(sp) == {sp.v_of([e]) for e in B}
    assert len({sp.v_of([e]) for e in B}) == len(B)
    indecomposable = A.order >= 2 and len(B) == 2
    assert sp.is_connected() == (indecomposable or A.order == 1)


@pytest.mark.parametrize("A", corpus_and_small())
def test_topology_method_agrees_with_definition(A):
    sp = build_spectrum(A)
    for F in filter_lattice(A).proper:
        assert sp.is_connected_subspace(sp.v_of(F)) == is_pseudo_irreducible(F, "definition")


@pytest.mark.parametrize("A", corpus_and_small())
def test_max_clopen_iff_radical_blp(A):
    assert max_clopen_check(A) == has_blp(radical_of_algebra(A))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(SMALL + list(CORPUS.values())), st.data())
def test_closure_contains_and_is_closed(A, data):
    sp = build_spectrum(A)
    S = data.draw(st.frozensets(st.sampled_from(range(max(1, len(sp))))).filter(lambda s: s <= sp.everything))
    C = sp.closure(S)
    assert S <= C and sp.is_closed(C)
    assert sp.closure(C) == C
    if classify(A).directly_indecomposable:
        assert sp.is_connected()


def test_dot_output(ex):
    text = build_spectrum(ex["example_2_2"]).to_dot()
    assert text.startswith('digraph "example_2_2_spec"')
    assert "p0 -> " in text
