from __future__ import annotations

from itertools import combinations

import pytest

import oracles
from conftest import CORPUS, SMALL
from rlkit.algebra import classify, find_isomorphism, identity_suite
from rlkit.document import load
from rlkit.errors import OrderCapExceeded, UnknownPredicate
from rlkit.modelgen import (
    ModelQuery,
    algebras_up_to,
    canonical_lattice,
    enumerate_algebras,
    enumerate_lattices,
    evaluate,
    iter_mine,
    lattice_automorphisms,
    mine,
    parse_query,
    write_catalog,
)

LATTICE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}
ALGEBRA_COUNTS = {1: 1, 2: 1, 3: 2, 4: 7, 5: 26, 6: 129, 7: 723, 8: 4712}


def _tables(A):
    return A.leq, A.mon


# enumeration counts ---------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_lattice_counts(n):
    assert len(enumerate_lattices(n)) == LATTICE_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_algebra_counts(n):
    assert len(enumerate_algebras(n)) == ALGEBRA_COUNTS[n]


@pytest.mark.slow
def test_algebra_count_order_8():
    assert len(enumerate_algebras(8)) == ALGEBRA_COUNTS[8]


def test_small_pool_size():
    assert len(SMALL) == sum(ALGEBRA_COUNTS[n] for n in range(1, 6)) == 37


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_brute_force_oracle(n):
    assert len(oracles.lattice_classes(n)) == len(enumerate_lattices(n))
    assert oracles.algebra_classes(n) == len(enumerate_algebras(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_generated_algebras_are_pairwise_non_isomorphic(n):
    for A, B in combinations(enumerate_algebras(n), 2):
        assert find_isomorphism(A, B) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_lattices_are_canonical_and_have_identity_automorphism(n):
    for leq in enumerate_lattices(n):
        assert canonical_lattice(leq) == leq
        autos = lattice_automorphisms(leq)
        assert tuple(range(n)) in autos


@pytest.mark.parametrize("n", range(1, 7))
def test_generated_algebras_are_valid(n):
    for A in enumerate_algebras(n):
        assert identity_suite(A) == []
        assert A.order == n and A.source == "generated"
        if n > 1:
            assert A.names[A.bottom] == "0" and A.names[A.top] == "1"


def test_names_are_stable():
    assert [A.name for A in enumerate_algebras(3)] == ["rl3_0_0", "rl3_0_1"]


def test_algebras_up_to_is_ordered_by_size():
    orders = [A.order for A in algebras_up_to(5)]
    assert orders == sorted(orders)


@pytest.mark.parametrize("n", [0, 9, -1])
def test_order_cap(n):
    with pytest.raises(OrderCapExceeded):
        enumerate_algebras(n)
    with pytest.raises(OrderCapExceeded):
        enumerate_lattices(n)


def test_query_order_cap():
    with pytest.raises(OrderCapExceeded):
        ModelQuery(9, "mtl")


# corpus algebras appear among the generated ones ------------------------------------


@pytest.mark.parametrize("name", ["example_2_2", "example_2_5", "example_5_10", "example_5_7", "example_5_15"])
def test_corpus_algebra_is_generated(name):
    A = CORPUS[name]
    found = [B for B in enumerate_algebras(A.order) if find_isomorphism(A, B) is not None]
    assert len(found) == 1


# queries -----------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "nonsense",
        "mtl and bogus",
        "exists_filter(mtl)",
        "exists_filter(prime, maximal)",
        "sometimes(prime)",
        "mtl +",
        "1 + 1",
        "prime",
    ],
)
def test_unknown_predicates_are_rejected(text):
    with pytest.raises(UnknownPredicate):
        parse_query(text)


def test_query_accepts_logic_symbols():
    parse_query("¬mtl ∧ weak_mtl")
    parse_query("all_filters(blp or not proper) ∨ local")


def test_evaluate_on_examples():
    ok, wit = evaluate(CORPUS["example_5_10"], "weak_mtl and not mtl")
    assert ok and wit["mtl"] == "b,c"
    ok, wit = evaluate(CORPUS["example_2_5"], "exists_filter(pseudo_irreducible and not prime)")
    assert ok
    (label,) = wit
    assert set(wit[label]) == {"1"}
    ok, wit = evaluate(CORPUS["example_2_2"], "all_filters(blp)")
    assert not ok and set(wit["not all_filters(blp)"]) == {"c", "1"}


MINING = [
    ("exists_filter(pseudo_irreducible and not prime)", 7, 27),
    ("weak_mtl and not mtl", 7, 247),
    ("de_morgan and weak_mtl", 7, 694),
    ("exists_filter(pseudo_irreducible and not prime)", 6, 5),
    ("weak_mtl and not mtl", 6, 26),
    ("de_morgan and weak_mtl", 6, 141),
]


@pytest.mark.parametrize("where,order,count", MINING)
def test_mining_counts(where, order, count):
    hits = mine(ModelQuery(order, where))
    assert len(hits) == count
    for hit in hits:
        assert evaluate(hit.algebra, where)[0]


def test_first_pseudo_irreducible_non_prime_is_order_5():
    (hit,) = mine(ModelQuery(7, "exists_filter(pseudo_irreducible and not prime)", limit=1))
    assert hit.algebra.order == 5
    assert list(hit.witness.values()) == [["1"]]


def test_two_element_chain_is_de_morgan_weak_mtl():
    hits = mine(ModelQuery(2, "de_morgan and weak_mtl", min_order=2))
    assert [h.algebra.order for h in hits] == [2]


def test_mined_weak_mtl_witnesses_are_real():
    for hit in iter_mine(ModelQuery(7, "weak_mtl and not mtl", limit=20)):
        r = classify(hit.algebra)
        assert r.weak_mtl and not r.mtl
        assert hit.witness["mtl"] == hit.algebra.fmt(*r.witness("mtl"))


def test_corpus_mined_among_order_7_hits():
    hits = mine(ModelQuery(7, "weak_mtl and not mtl", min_order=7))
    A = CORPUS["example_5_10"]
    assert sum(find_isomorphism(A, h.algebra) is not None for h in hits) == 1
    hits = mine(ModelQuery(7, "exists_filter(pseudo_irreducible and not prime)", min_order=7))
    B = CORPUS["example_2_5"]
    assert sum(find_isomorphism(B, h.algebra) is not None for h in hits) == 1


@pytest.mark.slow
def test_no_order_8_algebra_has_every_filter_blp_without_locality_or_weak_mtl():
    # the property claimed for a six-element example; exhaustive search finds none
    assert mine(ModelQuery(8, "all_blp and not local and not weak_mtl")) == []


def test_limit_and_min_order():
    hits = mine(ModelQuery(6, "True", limit=3, min_order=4))
    assert [h.algebra.name for h in hits] == [A.name for A in enumerate_algebras(4)[:3]]


def test_catalog_round_trip(tmp_path):
    hits = mine(ModelQuery(6, "exists_filter(pseudo_irreducible and not prime)"))
    paths = write_catalog(hits, tmp_path / "out")
    assert [p.name for p in paths] == [f"{k:04d}_{h.algebra.name}.rl" for k, h in enumerate(hits)]
    for p, h in zip(paths, hits):
        B = load(p)
        assert _tables(B) == _tables(h.algebra)
