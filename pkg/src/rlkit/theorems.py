"""Machine checks of the structural theorems on a concrete algebra.

Each check is a generator over one algebra that yields a message for every
counterexample it finds. :func:`verify` runs a selection of them and
collects the results; a :class:`~rlkit.errors.TheoremViolation` raised by a
library routine while a check runs is recorded as a counterexample too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Optional

from .algebra import Algebra, classify, identity_suite, is_isomorphism
from .errors import PreconditionBooleanSplit, TheoremViolation
from .filters import (
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
    is_filter_mask,
    is_local,
    is_pseudo_irreducible,
    trivial_filter,
    whole,
)
from .fractions import (
    FULL_SYSTEM_CAP,
    boolean_system,
    booleanization,
    fraction_filter,
    fraction_pi_elementwise,
    in_fraction_filter,
    indecomposable_localization,
    localization_criteria,
    localize,
    relevant_closed_systems,
    verify_fraction_iso,
)
from .quotients import image_of_boolean_center, pull_filter, push_filter, quotient, verify_second_iso
from .radicals import blp_transfer_report, comaximal_rigidity, has_tprd, rad, radical_of_algebra
from .spectrum import build_spectrum, max_clopen_check

POWERSET_ORACLE_CAP = 14


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    run: Callable[[Algebra], Iterable[str]]


CHECKS: dict[str, Check] = {}


def check(name: str, statement: str):
    def register(fn):
        CHECKS[name] = Check(name, statement, fn)
        return fn

    return register


@dataclass
class CheckResult:
    name: str
    statement: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class VerifyReport:
    algebra: Algebra
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def run_check(A: Algebra, name: str, limit: int = 20) -> CheckResult:
    c = CHECKS[name]
    res = CheckResult(c.name, c.statement)
    try:
        for msg in c.run(A):
            res.violations.append(msg)
            if len(res.violations) >= limit:
                break
    except TheoremViolation as exc:
        res.violations.append(f"raised: {exc}")
    return res


def verify(A: Algebra, names: Optional[Iterable[str]] = None) -> VerifyReport:
    """Run the named checks (all of them by default) on ``A``."""
    selected = list(CHECKS) if names is None else list(names)
    unknown = [n for n in selected if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    return VerifyReport(A, [run_check(A, n) for n in selected])


def _filters(A: Algebra) -> tuple[FilterSet, ...]:
    return filter_lattice(A).filters


def _proper(A: Algebra) -> tuple[FilterSet, ...]:
    return filter_lattice(A).proper


def _nested(A: Algebra) -> Iterator[tuple[FilterSet, FilterSet]]:
    fs = _filters(A)
    for F in fs:
        for G in fs:
            if F <= G:
                yield F, G


# algebra level ---------------------------------------------------------------


@check("residuation", "x⊙z ≤ y ⇔ z ≤ x→y for all x, y, z")
def _residuation(A: Algebra):
    for x, y, z in product(A.elements, repeat=3):
        if A.leq[A.mon[x][z]][y] != A.leq[z][A.imp[x][y]]:
            yield f"adjunction fails at x,y,z = {A.fmt(x, y, z)}"


@check("identities", "the 24 standard identities hold")
def _identities(A: Algebra):
    for v in identity_suite(A):
        yield v.render(A)


@check("boolean_center", "e ∈ B(L) ⇔ e∨e* = 1 and e∧e* = 0; complement is an involution")
def _boolean_center(A: Algebra):
    B = A.boolean
    s = A.stars
    for x in A.elements:
        expected = A.join[x][s[x]] == A.top and A.meet[x][s[x]] == A.bottom
        if (x in B) != expected:
            yield f"Boolean membership of {A.names[x]} disagrees with x∨x*, x∧x*"
    for e in B:
        if B.complement[B.complement[e]] != e:
            yield f"complement is not involutive at {A.names[e]}"
    for e in (A.bottom, A.top):
        if e not in B:
            yield f"{A.names[e]} missing from the Boolean center"


@check("semi_g_weak_mtl", "semi-G together with De Morgan or Stonean implies weak MTL")
def _semi_g_weak_mtl(A: Algebra):
    r = classify(A)
    s, m, mt = A.stars, A.mon, A.meet
    sg_meet = all(mt[x][s[x]] == A.bottom for x in A.elements)
    if sg_meet != r.semi_g:
        yield "(x²)* = x* and x∧x* = 0 disagree"
    if r.semi_g and r.de_morgan and not r.weak_mtl:
        yield "semi-G De Morgan algebra is not weak MTL"
    if r.semi_g and r.stonean and not r.weak_mtl:
        yield "semi-G Stonean algebra is not weak MTL"
    if r.mtl and not r.weak_mtl:
        yield "MTL algebra is not weak MTL"
    if r.stonean and not r.weak_mtl:
        yield "Stonean algebra is not weak MTL"


# filters ---------------------------------------------------------------------


@check("filter_enumeration", "closure-based and powerset enumerations agree; lattice is closed")
def _filter_enumeration(A: Algebra):
    FL = filter_lattice(A)
    if A.order <= POWERSET_ORACLE_CAP:
        masks = [F.mask for F in enumerate_filters(A, "powerset")]
        if masks != [F.mask for F in FL]:
            yield "principal and powerset enumerations differ"
    for F in FL:
        if not is_filter_mask(A, F.mask):
            yield f"{F!r} is not a filter"
    if FL.trivial != trivial_filter(A) or FL.whole != whole(A):
        yield "filter lattice does not start at {1} and end at L"
    for F, G in product(FL, repeat=2):
        J = filter_join(F, G)
        if FL.join(F, G) != J:
            yield f"lattice join of {F!r}, {G!r} differs from the generated join"
        if FL.meet(F, G) != filter_meet(F, G):
            yield f"meet of {F!r}, {G!r} is not the intersection"


@check("generated_filters", "F(x)∨F(y) = F(x∧y) = F(x⊙y), F(x)∩F(y) = F(x∨y), join and arrow formulas")
def _generated_filters(A: Algebra):
    yield from filter_identity_violations(A, _filters(A), product(A.elements, repeat=2))


def filter_identity_violations(A: Algebra, filters, pairs) -> Iterator[str]:
    """Generated-filter, join and arrow identities for the given filters and element pairs."""
    FL = filter_lattice(A)
    fs = list(filters)
    pairs = list(pairs)
    for F in fs:
        for x, y in pairs:
            Fx, Fy = extend(F, x), extend(F, y)
            j = filter_join(Fx, Fy)
            if not (j == extend(F, A.meet[x][y]) == extend(F, A.mon[x][y])):
                yield f"F(x)∨F(y), F(x∧y), F(x⊙y) differ for F={F!r}, x,y={A.fmt(x, y)}"
            if filter_meet(Fx, Fy) != extend(F, A.join[x][y]):
                yield f"F(x)∩F(y) ≠ F(x∨y) for F={F!r}, x,y={A.fmt(x, y)}"
    for F, G in product(fs, repeat=2):
        J = filter_join(F, G)
        formula = 0
        for z in A.elements:
            if any(A.leq[A.mon[a][b]][z] for a in F for b in G):
                formula |= 1 << z
        if formula != J.mask:
            yield f"F∨G ≠ {{x : a⊙b ≤ x}} for F={F!r}, G={G!r}"
        arrow = filter_arrow(F, G)
        if not is_filter_mask(A, arrow.mask):
            yield f"F→G is not a filter for F={F!r}, G={G!r}"
            continue
        for H in FL:
            if ((F.mask & H.mask) & ~G.mask == 0) != (H <= arrow):
                yield f"F→G is not the relative pseudocomplement at F={F!r}, G={G!r}, H={H!r}"
                break


@check("prime_intersection", "every proper filter is the intersection of the primes above it")
def _prime_intersection(A: Algebra):
    primes = filter_lattice(A).prime
    for F in _proper(A):
        mask = (1 << A.order) - 1
        for P in primes:
            if F <= P:
                mask &= P.mask
        if mask != F.mask:
            yield f"⋂V({F!r}) ≠ {F!r}"
        for a in A.elements:
            if a not in F and not any(F <= P and a not in P for P in primes):
                yield f"no prime separates {A.names[a]} from {F!r}"


@check("local_iff_all_pseudo_irreducible", "L is local ⇔ every proper filter is pseudo-irreducible")
def _local(A: Algebra):
    if A.order < 2:
        return
    every = all(is_pseudo_irreducible(F) for F in _proper(A))
    if every != is_local(A):
        yield f"local={is_local(A)} but all proper filters pseudo-irreducible={every}"


@check("prime_pseudo_irreducible", "maximal ⇒ prime ⇒ pseudo-irreducible")
def _prime_pi(A: Algebra):
    FL = filter_lattice(A)
    primes = set(FL.prime)
    for M in FL.maximal:
        if M not in primes:
            yield f"maximal {M!r} is not prime"
    for P in primes:
        if not is_pseudo_irreducible(P):
            yield f"prime {P!r} is not pseudo-irreducible"


@check("pseudo_irreducible_methods", "the five pseudo-irreducibility criteria agree")
def _pi_methods(A: Algebra):
    for F in _proper(A):
        vals = {m: is_pseudo_irreducible(F, m) for m in PSEUDO_IRREDUCIBLE_METHODS}
        if len(set(vals.values())) != 1:
            yield f"{F!r}: {vals}"


@check("pseudo_irreducible_boolean", "a pseudo-irreducible F contains e or e* for every Boolean e")
def _pi_boolean(A: Algebra):
    s = A.stars
    for F in _proper(A):
        if is_pseudo_irreducible(F):
            for e in A.boolean:
                if e not in F and s[e] not in F:
                    yield f"{F!r} contains neither {A.names[e]} nor its complement"


@check("pseudo_irreducible_meet", "for pseudo-irreducible G, H: G∩H pseudo-irreducible ⇔ G∨H ≠ L")
def _pi_meet(A: Algebra):
    pis = [F for F in _proper(A) if is_pseudo_irreducible(F)]
    for G, H in product(pis, repeat=2):
        comaximal_intersection_test(G, H)
    return iter(())


@check("blp_methods", "the BLP criteria agree on every filter")
def _blp_methods(A: Algebra):
    for F in _filters(A):
        vals = {m: has_blp(F, m) for m in BLP_METHODS}
        if len(set(vals.values())) != 1:
            yield f"{F!r}: {vals}"
    for F in (trivial_filter(A), whole(A)):
        if not has_blp(F):
            yield f"{F!r} lacks BLP"


@check("pseudo_irreducible_blp", "every pseudo-irreducible filter has BLP")
def _pi_blp(A: Algebra):
    for F in _proper(A):
        if is_pseudo_irreducible(F) and not has_blp(F):
            yield f"pseudo-irreducible {F!r} lacks BLP"


@check("indecomposable_blp", "non-trivial L is indecomposable ⇔ proper BLP filters are pseudo-irreducible")
def _indecomposable_blp(A: Algebra):
    if A.order < 2:
        return
    indec = len(A.boolean) == 2
    every = all(is_pseudo_irreducible(F) for F in _proper(A) if has_blp(F))
    if indec != every:
        yield f"indecomposable={indec} but BLP ⇒ pseudo-irreducible is {every}"


@check("blp_meet", "F pseudo-irreducible, G BLP, F∨G ≠ L ⇒ F∩G has BLP")
def _blp_meet(A: Algebra):
    FL = filter_lattice(A)
    for F in _proper(A):
        if not is_pseudo_irreducible(F):
            continue
        for G in FL:
            if has_blp(G) and FL.join(F, G) != FL.whole and not has_blp(filter_meet(F, G)):
                yield f"F={F!r}, G={G!r}: F∩G lacks BLP"


@check("nested_filters", "lifting properties along F ⊆ G and through L/F")
def _nested_filters(A: Algebra):
    for F, G in _nested(A):
        if not G.is_proper:
            continue
        if is_pseudo_irreducible(F) and has_blp(G) and not is_pseudo_irreducible(G):
            yield f"F={F!r} pseudo-irreducible, G={G!r} BLP but not pseudo-irreducible"
        GF = push_filter(G, F)
        if not GF.is_proper:
            yield f"G/F is improper for proper G={G!r}"
            continue
        if is_pseudo_irreducible(G) != is_pseudo_irreducible(GF):
            yield f"pseudo-irreducibility of G={G!r} and G/F disagree (F={F!r})"
        bg, bgf = has_blp(G), has_blp(GF)
        if bg and not bgf:
            yield f"G={G!r} has BLP but G/F does not (F={F!r})"
        if has_blp(F) and bgf and not bg:
            yield f"F={F!r}, G/F have BLP but G={G!r} does not"


# quotients -------------------------------------------------------------------


@check("quotient_laws", "θ_F classes, order and membership in L/F; projection is a homomorphism")
def _quotient_laws(A: Algebra):
    tables = (("∧", A.meet), ("∨", A.join), ("⊙", A.mon), ("→", A.imp))
    for F in _filters(A):
        q = quotient(F)
        Q, p = q.algebra, q.projection
        for label, tab in tables:
            qt = {"∧": Q.meet, "∨": Q.join, "⊙": Q.mon, "→": Q.imp}[label]
            for x, y in product(A.elements, repeat=2):
                if p[tab[x][y]] != qt[p[x]][p[y]]:
                    yield f"projection does not preserve {label} at {A.fmt(x, y)} (F={F!r})"
                    break
        if p[A.top] != Q.top or p[A.bottom] != Q.bottom or len(set(p)) != Q.order:
            yield f"projection is not a surjective bounded map (F={F!r})"
        for x in A.elements:
            if (p[x] == Q.top) != (x in F):
                yield f"x/F = 1/F ⇔ x ∈ F fails at {A.names[x]} (F={F!r})"
            if (p[x] == Q.bottom) != (A.stars[x] in F):
                yield f"x/F = 0/F ⇔ x* ∈ F fails at {A.names[x]} (F={F!r})"
            for y in A.elements:
                if (p[x] == p[y]) != (A.biimp(x, y) in F):
                    yield f"θ_F disagrees with x↔y ∈ F at {A.fmt(x, y)}"
                if Q.leq[p[x]][p[y]] != (A.imp[x][y] in F):
                    yield f"x/F ≤ y/F ⇔ x→y ∈ F fails at {A.fmt(x, y)} (F={F!r})"
        if not image_of_boolean_center(F) <= Q.boolean.elements:
            yield f"Boolean center does not project into B(L/F) (F={F!r})"


@check("push_pull", "G ↦ G/F is a bijection onto Filt(L/F); second isomorphism L/G ≅ (L/F)/(G/F)")
def _push_pull(A: Algebra):
    for F in _filters(A):
        q = quotient(F)
        above = [G for G in _filters(A) if F <= G]
        pushed = set()
        for G in above:
            GF = push_filter(G, F)
            if not is_filter_mask(q.algebra, GF.mask):
                yield f"G/F is not a filter (F={F!r}, G={G!r})"
            pushed.add(GF.mask)
            if pull_filter(GF, F) != G:
                yield f"pull(push(G)) ≠ G for F={F!r}, G={G!r}"
            for x in A.elements:
                if (q.projection[x] in GF) != (x in G):
                    yield f"x/F ∈ G/F ⇔ x ∈ G fails at {A.names[x]}"
                    break
            if not verify_second_iso(F, G):
                yield f"L/G ≇ (L/F)/(G/F) for F={F!r}, G={G!r}"
        targets = {Q.mask for Q in filter_lattice(q.algebra)}
        if pushed != targets:
            yield f"push is not onto Filt(L/F) for F={F!r}"
        for Q in filter_lattice(q.algebra):
            if push_filter(pull_filter(Q, F), F) != Q:
                yield f"push(pull(Q)) ≠ Q in L/F for F={F!r}"
    ident = quotient(trivial_filter(A))
    if not is_isomorphism(A, ident.algebra, ident.projection):
        yield "L/{1} is not isomorphic to L via the projection"


# spectrum --------------------------------------------------------------------


@check("v_sets", "closed-set identities of V and V_Max")
def _v_sets(A: Algebra):
    yield from v_identity_violations(A, _filters(A), product(A.elements, repeat=2))


def v_identity_violations(A: Algebra, filters, pairs) -> Iterator[str]:
    sp, sm = build_spectrum(A, "spec"), build_spectrum(A, "max")
    fs = list(filters)
    W = whole(A)
    for F in fs:
        empties = (not sp.v_of(F), not sm.v_of(F), F == W)
        if len(set(empties)) != 1:
            yield f"V(F)=∅, V_Max(F)=∅, F=L disagree for F={F!r}"
    for S in (sp, sm):
        for F, G in product(fs, repeat=2):
            if S.v_of(F) | S.v_of(G) != S.v_of(filter_meet(F, G)):
                yield f"V(F)∪V(G) ≠ V(F∩G) ({S.variant}) for F={F!r}, G={G!r}"
            if S.v_of(F) & S.v_of(G) != S.v_of(list(F) + list(G)):
                yield f"V(F∪G) ≠ V(F)∩V(G) ({S.variant}) for F={F!r}, G={G!r}"
        for x, y in pairs:
            if S.v_of([x]) | S.v_of([y]) != S.v_of([A.join[x][y]]):
                yield f"V(x)∪V(y) ≠ V(x∨y) ({S.variant}) at {A.fmt(x, y)}"
            if S.v_of([x, y]) != S.v_of(generated_filter(A, [x, y])):
                yield f"V(X) ≠ V([X)) ({S.variant}) at {A.fmt(x, y)}"


@check("closed_family", "closed sets contain ∅ and everything and are closed under ∪ and ∩")
def _closed_family(A: Algebra):
    for variant in ("spec", "max"):
        sp = build_spectrum(A, variant)
        fam = sp.closed_family
        if frozenset() not in fam or sp.everything not in fam:
            yield f"{variant}: ∅ or the whole space is not closed"
        for C, D in product(fam, repeat=2):
            if C | D not in fam or C & D not in fam:
                yield f"{variant}: closed family not closed under ∪/∩"
                break


@check("clopen_boolean", "clopen sets of the prime spectrum are exactly the V(e), e Boolean")
def _clopen_boolean(A: Algebra):
    sp = build_spectrum(A, "spec")
    if sp.clopen_sets() != sp.boolean_clopens:
        yield "Clop(Spec) ≠ {V(e) : e ∈ B(L)}"
    vs = [sp.v_of([e]) for e in A.boolean]
    if len(set(vs)) != len(vs):
        yield "e ↦ V(e) is not injective on B(L)"


@check("indecomposable_connected", "L is directly indecomposable ⇔ the prime spectrum is connected")
def _connected(A: Algebra):
    if A.order < 2:
        return
    indec = len(A.boolean) == 2
    if indec != build_spectrum(A, "spec").is_connected():
        yield f"indecomposable={indec} but connectedness differs"


# fractions -------------------------------------------------------------------


def _systems(A: Algebra):
    return relevant_closed_systems(A)


@check("fraction_filters", "F[S] laws: filters of L[S], membership, properness, intersections")
def _fraction_filters(A: Algebra):
    fs = _filters(A)
    s = A.stars
    for S in _systems(A):
        fa = localize(A, S)
        cls = fa.class_of
        E = S.boolean_part
        images = {}
        for F in fs:
            FS = fraction_filter(F, S)
            images[F.mask] = FS.mask
            proper_pred = not any(s[e] in F for e in E)
            if FS.is_proper != proper_pred:
                yield f"F[S] = L[S] ⇔ ∃e: e* ∈ F fails for F={F!r}, S={S!r}"
        got = set(images.values())
        want = {G.mask for G in filter_lattice(fa.algebra)}
        if got != want:
            yield f"filters of L[S] are not all of the form F[S] for S={S!r}"
        for F, G in product(fs, repeat=2):
            if images[F.mask] & images[G.mask] != images[F.mask & G.mask]:
                yield f"F[S]∩G[S] ≠ (F∩G)[S] for F={F!r}, G={G!r}, S={S!r}"
        for x in A.elements:
            zero = cls[x] == cls[A.bottom]
            if zero != any(A.leq[x][s[e]] for e in E):
                yield f"x/S = 0/S ⇔ ∃e: x ≤ e* fails at {A.names[x]}, S={S!r}"
            for F in fs:
                via_meet = any(A.meet[x][e] == A.meet[a][e] for e in E for a in F)
                if via_meet != in_fraction_filter(F, S, x):
                    yield f"membership tests for F[S] disagree at {A.names[x]}, F={F!r}"


@check("fraction_pseudo_irreducible", "elementwise and intrinsic tests on F[S] agree; F[S] inherits PI and BLP")
def _fraction_pi(A: Algebra):
    for S in _systems(A):
        for F in _proper(A):
            FS = fraction_filter(F, S)
            bf = has_blp(F)
            if bf and not has_blp(FS):
                yield f"F={F!r} has BLP but F[S] does not (S={S!r})"
            if not FS.is_proper:
                continue
            pi = is_pseudo_irreducible(FS)
            if fraction_pi_elementwise(F, S) != pi:
                yield f"elementwise PI test for F[S] disagrees (F={F!r}, S={S!r})"
            if is_pseudo_irreducible(F) and not pi:
                yield f"pseudo-irreducible F={F!r} has non-PI F[S] (S={S!r})"


@check("fraction_isomorphism", "L/(F∨[S∩B(L))) ≅ L[S]/F[S] for every proper F and system S")
def _fraction_iso(A: Algebra):
    for S in _systems(A):
        for F in _proper(A):
            if not verify_fraction_iso(F, S):
                yield f"no isomorphism for F={F!r}, S={S!r}"


@check("boolean_components", "e ≤ x∨x* with e Boolean puts e∧x, e∧x*, e*∨x*, e*∨x** in B(L)")
def _boolean_components(A: Algebra):
    B = A.boolean
    s, mt, j = A.stars, A.meet, A.join
    for e in B:
        for x in A.elements:
            if A.leq[e][j[x][s[x]]]:
                for v in (mt[e][x], mt[e][s[x]], j[s[e]][s[x]], j[s[e]][s[s[x]]]):
                    if v not in B:
                        yield f"e={A.names[e]}, x={A.names[x]}: {A.names[v]} is not Boolean"


@check("indecomposable_localization", "L[S_F] is directly indecomposable when F splits every Boolean pair")
def _indecomposable_localization(A: Algebra):
    s = A.stars
    for F in _proper(A):
        splits = all(e in F or s[e] in F for e in A.boolean)
        try:
            indecomposable_localization(F)
        except PreconditionBooleanSplit:
            if splits:
                yield f"precondition wrongly rejected for {F!r}"
            continue
        if not splits:
            yield f"precondition wrongly accepted for {F!r}"


@check("booleanization", "F′∨G′ = L ⇔ ∃e ∈ B(L): e ∈ F, e* ∈ G; F′ = L ⇔ F = L")
def _booleanization(A: Algebra):
    fs = _filters(A)
    W = whole(A)
    s = A.stars
    for F in fs:
        if (booleanization(F) == W) != (F == W):
            yield f"F′ = L ⇔ F = L fails for {F!r}"
    for F, G in product(fs, repeat=2):
        lhs = filter_join(booleanization(F), booleanization(G)) == W
        rhs = any(e in F and s[e] in G for e in A.boolean)
        if lhs != rhs:
            yield f"F={F!r}, G={G!r}: F′∨G′ = L is {lhs}, Boolean split is {rhs}"


@check("localization_criteria", "the BLP criteria through S_M agree (maximal and prime M)")
def _localization_criteria(A: Algebra):
    for F in _proper(A):
        for points in ("max", "spec"):
            crit = localization_criteria(F, points)
            if not crit.agree:
                yield f"{F!r} ({points}): {crit.values()}"


def _boolean_subsets(A: Algebra):
    B = list(A.boolean)
    if len(B) <= FULL_SYSTEM_CAP:
        for k in range(len(B) + 1):
            yield from combinations(B, k)
    else:
        yield ()
        for e in B:
            yield (e,)
        yield tuple(B)


@check("boolean_joins_blp", "F with BLP keeps it under F∨[X), X ⊆ B(L); every [X) has BLP")
def _boolean_joins(A: Algebra):
    for X in _boolean_subsets(A):
        gen = generated_filter(A, list(X) + [A.top])
        if not has_blp(gen):
            yield f"[{A.fmt(*X)}) lacks BLP"
        for F in _filters(A):
            if has_blp(F) and not has_blp(filter_join(F, gen)):
                yield f"F={F!r} has BLP but F∨[{A.fmt(*X)}) does not"


# radicals --------------------------------------------------------------------


@check("radical_closure", "rad is extensive, monotone and idempotent; rad(M) = M")
def _radical_closure(A: Algebra):
    FL = filter_lattice(A)
    for F in FL:
        R = rad(F)
        if not F <= R or rad(R) != R:
            yield f"rad is not extensive/idempotent at {F!r}"
    for F, G in _nested(A):
        if not rad(F) <= rad(G):
            yield f"rad is not monotone at {F!r} ⊆ {G!r}"
    for M in FL.maximal:
        if rad(M) != M:
            yield f"rad({M!r}) ≠ M"


@check("radical_decompositions", "comaximal splits pass to radicals; radical parts are radical")
def _radical_decompositions(A: Algebra):
    FL = filter_lattice(A)
    for F in FL:
        for G, H in FL.decompositions(F):
            if filter_meet(rad(G), rad(H)) != rad(F):
                yield f"rad(F) ≠ rad(G)∩rad(H) for F={F!r}, G={G!r}, H={H!r}"
            if FL.join(rad(G), rad(H)) != FL.whole:
                yield f"rad(G)∨rad(H) ≠ L for G={G!r}, H={H!r}"
        for G, H in FL.decompositions(rad(F)):
            if rad(G) != G or rad(H) != H:
                yield f"rad(F)=G∩H, G∨H=L but G or H is not radical (F={F!r})"


@check("radical_boolean", "a Boolean element in rad(F) already lies in F")
def _radical_boolean(A: Algebra):
    for F in _proper(A):
        R = rad(F)
        for e in A.boolean:
            if e in R and e not in F:
                yield f"{A.names[e]} ∈ rad({F!r}) but not in F"


@check("radical_blp", "BLP descends from rad(F) to F; with TPRD they coincide")
def _radical_blp(A: Algebra):
    for F in _filters(A):
        blp_transfer_report(F)
    return iter(())


@check("comaximal_rigidity", "pairwise comaximal F_i ⊆ G_i with equal intersections force F_i = G_i")
def _comaximal_rigidity(A: Algebra):
    FL = filter_lattice(A)
    P = FL.proper
    supers = {F: [G for G in FL if F <= G] for F in P}
    for k in (1, 2, 3):
        for Fs in combinations(P, k):
            if any(FL.join(X, Y) != FL.whole for X, Y in combinations(Fs, 2)):
                continue
            for Gs in product(*(supers[F] for F in Fs)):
                comaximal_rigidity(list(Fs), list(Gs))
    return iter(())


@check("weak_mtl_tprd", "weak MTL ⇒ TPRD ⇒ rad of the algebra has BLP")
def _weak_mtl_tprd(A: Algebra):
    tprd = has_tprd(A)
    if classify(A).weak_mtl and not tprd:
        F, G, H = tprd.counterexample
        yield f"weak MTL but TPRD fails at F={F!r}, G={G!r}, H={H!r}"
    if tprd and not has_blp(radical_of_algebra(A)):
        yield "TPRD holds but rad(L) lacks BLP"


@check("max_clopen", "Clop(Max) = {V_Max(e)} ⇔ rad of the algebra has BLP")
def _max_clopen(A: Algebra):
    lhs = max_clopen_check(A)
    rhs = has_blp(radical_of_algebra(A))
    if lhs != rhs:
        yield f"clopen characterization {lhs} but rad BLP {rhs}"


@check("boolean_systems", "F ∩ B(L) is a ∧-closed system for every filter F")
def _boolean_systems(A: Algebra):
    for F in _filters(A):
        S = boolean_system(F)
        if A.top not in S:
            yield f"S_F misses 1 for {F!r}"
        for x, y in product(S, repeat=2):
            if A.meet[x][y] not in S:
                yield f"S_F is not ∧-closed for {F!r}"
