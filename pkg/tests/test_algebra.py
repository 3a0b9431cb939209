from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CORPUS, SMALL, corpus_and_small, el
from rlkit.algebra import (
    VARIETY_FLAGS,
    Algebra,
    boolean_algebra,
    chain,
    classify,
    derive_imp,
    direct_product,
    find_isomorphism,
    identity_suite,
    is_isomorphism,
    trivial,
    validate,
)
from rlkit.errors import ImpMismatch, NotALattice, NotMonoid, ResiduationFails, ResiduumMissing, ValidationError


def _tables(A: Algebra):
    return [list(r) for r in A.leq], [list(r) for r in A.mon], [list(r) for r in A.imp]


def relabel(A: Algebra, p) -> Algebra:
    """The same algebra with element x renamed to position p[x]."""
    n = A.order
    inv = [0] * n
    for x, v in enumerate(p):
        inv[v] = x
    names = [A.names[inv[k]] for k in range(n)]
    leq = [[A.leq[inv[a]][inv[b]] for b in range(n)] for a in range(n)]
    mon = [[p[A.mon[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
    return validate(names, leq, mon)


# validate ------------------------------------------------------------------------


def test_example_2_2_validates_with_order_five(ex):
    A = ex["example_2_2"]
    assert A.order == 5
    a, b, c = el(A, "a", "b", "c")
    assert A.mon[a][b] == A.bottom and A.mon[a][c] == a
    assert A.imp[a][A.bottom] == b


def test_two_chain_with_meet_is_boolean():
    A = boolean_algebra()
    assert A.order == 2 and len(A.boolean) == 2


def test_mutated_example_2_2_is_rejected_with_witness(ex):
    A = ex["example_2_2"]
    leq, mon, imp = _tables(A)
    a, b, c = el(A, "a", "b", "c")
    mon[a][b] = mon[b][a] = c
    with pytest.raises((ResiduationFails, NotMonoid)) as err:
        validate(A.names, leq, mon, imp)
    assert err.value.witness
    # without the printed residuum the derivation itself must fail
    with pytest.raises((ResiduationFails, NotMonoid, ResiduumMissing)) as err:
        validate(A.names, leq, mon)
    assert err.value.witness


def test_non_lattice_order_is_rejected():
    # 0 < a, b < c, d < 1 with a, b both below c and d: no join of a and b
    names = ["0", "a", "b", "c", "d", "1"]
    up = {0: {0, 1, 2, 3, 4, 5}, 1: {1, 3, 4, 5}, 2: {2, 3, 4, 5}, 3: {3, 5}, 4: {4, 5}, 5: {5}}
    leq = [[y in up[x] for y in range(6)] for x in range(6)]
    mon = [[min(x, y) if x == 5 or y == 5 else 0 for y in range(6)] for x in range(6)]
    for x in range(6):
        mon[x][5] = mon[5][x] = x
    with pytest.raises(NotALattice) as err:
        validate(names, leq, mon)
    assert set(err.value.witness) == {1, 2}


def test_non_associative_table_is_rejected():
    A = chain(4, "lukasiewicz")
    leq, mon, _ = _tables(A)
    mon[1][2] = mon[2][1] = 2  # 1⊙2 was 0
    with pytest.raises(NotMonoid) as err:
        validate(A.names, leq, mon)
    assert len(err.value.witness) in (2, 3)


def test_wrong_printed_residuum_is_rejected(ex):
    A = ex["example_2_5"]
    leq, mon, imp = _tables(A)
    imp[5][5] = 5  # d→d printed as d instead of 1
    with pytest.raises(ValidationError):
        validate(A.names, leq, mon, imp)
    with pytest.raises(ImpMismatch):
        derive_imp(leq, mon, imp)


def test_bad_names_and_shapes():
    with pytest.raises(ValidationError):
        validate(["0", "0"], [[True, True], [False, True]], [[0, 0], [0, 1]])
    with pytest.raises(ValidationError):
        validate(["0", "1"], [[True, True], [False, True]], [[0, 0]])
    with pytest.raises(ValidationError):
        validate([], [], [])


# derive_imp ----------------------------------------------------------------------


def test_three_chain_godel_residuum():
    A = chain(3)
    m = 1
    assert A.imp[m][0] == 0
    assert A.imp[A.top][m] == m
    assert derive_imp(A.leq, A.mon) == A.imp


@pytest.mark.parametrize("A", corpus_and_small())
def test_residuum_of_top_and_into_top(A):
    for x in A.elements:
        assert A.imp[A.top][x] == x
        assert A.imp[x][A.top] == A.top


@pytest.mark.parametrize("A", corpus_and_small())
def test_residuation_law_exhaustive(A):
    for x, y, z in product(A.elements, repeat=3):
        assert A.leq[A.mon[x][z]][y] == A.leq[z][A.imp[x][y]]


# derived operations --------------------------------------------------------------


def test_stars_of_example_5_7(ex):
    A = ex["example_5_7"]
    b, c = el(A, "b", "c")
    assert A.star(b) == c and A.star(A.star(b)) == b


def test_stars_of_example_2_2(ex):
    A = ex["example_2_2"]
    a, b, c = el(A, "a", "b", "c")
    assert (A.star(a), A.star(b), A.star(c)) == (b, a, A.bottom)


@pytest.mark.parametrize("A", corpus_and_small())
def test_star_of_bounds(A):
    if A.order > 1:
        assert A.star(A.bottom) == A.top and A.star(A.top) == A.bottom


def test_power_and_biimp():
    A = chain(4, "lukasiewicz")
    assert A.power(2, 0) == A.top
    assert A.power(2, 1) == 2
    assert A.power(2, 2) == 1 and A.power(2, 3) == 0
    assert A.biimp(1, 3) == 1 and A.biimp(2, 2) == A.top


# Boolean center ------------------------------------------------------------------


def test_boolean_center_of_example_2_2(ex):
    A = ex["example_2_2"]
    assert set(A.boolean) == oracles.boolean(A) == {A.bottom, A.top}


def test_boolean_center_of_products():
    B = direct_product(chain(2), chain(2))
    assert len(B.boolean) == 4
    assert not classify(B).directly_indecomposable
    A = CORPUS["example_2_2"]
    assert len(direct_product(A, A).boolean) == 4


@pytest.mark.parametrize("A", corpus_and_small())
def test_boolean_center_matches_oracle_and_stars(A):
    B = A.boolean
    assert set(B) == oracles.boolean(A)
    for e in B:
        assert B.complement[e] == A.star(e)
        assert B.complement[B.complement[e]] == e
    for x in A.elements:
        if A.join[x][A.star(x)] == A.top:
            assert x in B


# classify ------------------------------------------------------------------------


def test_classify_example_5_10(ex):
    A = ex["example_5_10"]
    r = classify(A)
    assert r.weak_mtl and not r.mtl and not r.semi_g and not r.involution
    assert A.fmt(*r.witness("mtl")) == "b,c"
    assert A.fmt(*r.witness("semi_g")) == "n"
    assert A.fmt(*r.witness("involution")) == "a"


def test_classify_example_5_11(ex):
    A = ex["example_5_11"]
    r = classify(A)
    assert r.de_morgan and not r.weak_mtl and not r.semi_g
    assert A.fmt(*r.witness("weak_mtl")) == "a"
    # the lexicographic first semi-G witness is n; b is also a genuine one
    assert A.fmt(*r.witness("semi_g")) == "n"
    assert (A.index("b"),) in r.violations["semi_g"]


def test_classify_example_5_7(ex):
    A = ex["example_5_7"]
    r = classify(A)
    assert r.involution and not r.weak_mtl
    assert A.fmt(*r.witness("weak_mtl")) == "b"


def test_classify_example_5_15(ex):
    A = ex["example_5_15"]
    r = classify(A)
    assert r.semi_g and not r.weak_mtl and not r.stonean
    assert A.fmt(*r.witness("weak_mtl")) == "b"


def test_chains_are_mtl():
    for n in range(2, 6):
        for kind in ("godel", "lukasiewicz"):
            r = classify(chain(n, kind))
            assert r.mtl and r.weak_mtl and r.directly_indecomposable
    assert classify(chain(4, "lukasiewicz")).involution
    assert not classify(trivial()).directly_indecomposable


def _star(A, x):
    return A.imp[x][A.bottom]


def _holds(A, key, args):
    """Defining identities, written directly against the tables."""
    s = lambda x: _star(A, x)
    j, m, i, mon = A.join, A.meet, A.imp, A.mon
    t = A.top
    if key == "semi_g":
        (x,) = args
        return s(mon[x][x]) == s(x)
    if key == "godel":
        (x,) = args
        return mon[x][x] == x
    if key == "involution":
        (x,) = args
        return s(s(x)) == x
    if key == "mtl":
        x, y = args
        return j[i[x][y]][i[y][x]] == t
    if key == "de_morgan":
        x, y = args
        return s(m[x][y]) == j[s(x)][s(y)]
    if key == "stonean":
        (x,) = args
        return j[s(x)][s(s(x))] == t
    if key == "weak_mtl":
        (x,) = args
        return j[i[s(x)][s(s(x))]][i[s(s(x))][s(x)]] == t
    raise KeyError(key)


@pytest.mark.parametrize("A", corpus_and_small())
def test_flags_agree_with_identities_and_witnesses(A):
    r = classify(A)
    arity = {"mtl": 2, "de_morgan": 2}
    for key in VARIETY_FLAGS:
        if key == "directly_indecomposable":
            assert r.directly_indecomposable == (A.order >= 2 and len(oracles.boolean(A)) == 2)
            continue
        k = arity.get(key, 1)
        bad = [args for args in product(A.elements, repeat=k) if not _holds(A, key, args)]
        assert getattr(r, key) == (not bad)
        if bad:
            assert r.witness(key) == bad[0]
            assert tuple(r.violations[key]) == tuple(bad)
        else:
            assert r.witness(key) is None


@pytest.mark.parametrize("A", corpus_and_small())
def test_semi_g_meet_criterion_and_weak_mtl_chain(A):
    r = classify(A)
    meet_criterion = all(A.meet[x][A.star(x)] == A.bottom for x in A.elements)
    assert r.semi_g == meet_criterion
    if r.semi_g and r.stonean:
        assert r.weak_mtl
    if r.mtl or r.stonean:
        assert r.weak_mtl


# identity suite ------------------------------------------------------------------


@pytest.mark.parametrize("A", corpus_and_small())
def test_identity_suite_is_clean(A):
    assert identity_suite(A) == []


def test_identity_suite_names_item_on_corrupted_table(ex):
    A = ex["example_2_5"]
    # bypass validation to build a deliberately broken algebra
    mon = [list(r) for r in A.mon]
    a = A.index("a")
    mon[a][a] = A.bottom
    broken = Algebra(A.names, A.leq, mon, A.imp, name="broken")
    bad = identity_suite(broken)
    assert bad
    assert all(v.item >= 1 for v in bad)
    assert "fails at" in bad[0].render(broken)


def test_distributivity_over_joins_on_example_5_15(ex):
    A = ex["example_5_15"]
    m, j = A.mon, A.join
    triples = list(product(A.elements, repeat=3))
    assert len(triples) == 216
    assert all(m[x][j[y][z]] == j[m[x][y]][m[x][z]] for x, y, z in triples)


# products and isomorphisms -------------------------------------------------------


def test_isomorphism_basics(ex):
    A = ex["example_2_2"]
    assert find_isomorphism(A, A) is not None
    assert find_isomorphism(A, ex["example_5_7"]) is None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL + list(CORPUS.values())), st.randoms(use_true_random=False))
def test_relabelled_copy_is_isomorphic(A, rnd):
    p = list(A.elements)
    rnd.shuffle(p)
    B = relabel(A, p)
    f = find_isomorphism(A, B)
    assert f is not None and is_isomorphism(A, B, f)
    g = find_isomorphism(B, A)
    assert g is not None and is_isomorphism(B, A, g)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([A for A in SMALL if A.order <= 4]), st.sampled_from([A for A in SMALL if A.order <= 3]))
def test_products_validate_and_split_boolean_center(A, B):
    P = direct_product(A, B)
    assert P.order == A.order * B.order
    assert len(P.boolean) == len(A.boolean) * len(B.boolean)
    assert identity_suite(P) == []
