"""Residuated lattices of fractions ``L[S]`` relative to ∧-closed systems.

``θ_S`` relates ``x`` and ``y`` when ``x ∧ e = y ∧ e`` for some Boolean
``e ∈ S``; it only depends on ``S ∩ B(L)``, which is what the cache keys on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Union

from .algebra import Algebra, find_isomorphism
from .errors import ImproperFilter, NotClosedSystem, PreconditionBooleanSplit, TheoremViolation
from .filters import (
    FilterSet,
    bits,
    filter_lattice,
    filter_join,
    generated_filter,
    has_blp,
    is_filter_mask,
    is_pseudo_irreducible,
)
from .quotients import Congruence, congruence_from_relation, quotient, quotient_by

FULL_SYSTEM_CAP = 8


@dataclass(frozen=True)
class ClosedSystem:
    algebra: Algebra
    mask: int

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __repr__(self) -> str:
        return "S{" + ", ".join(self.algebra.names[x] for x in self) + "}"

    @property
    def boolean_part(self) -> tuple[int, ...]:
        B = self.algebra.boolean.elements
        return tuple(e for e in self if e in B)


def closed_system(A: Algebra, elements: Union[Iterable[int], int]) -> ClosedSystem:
    mask = elements if isinstance(elements, int) else sum(1 << A.check(x) for x in set(elements))
    if not mask >> A.top & 1:
        raise NotClosedSystem("a ∧-closed system must contain 1")
    xs = list(bits(mask))
    for x, y in product(xs, repeat=2):
        if not mask >> A.meet[x][y] & 1:
            raise NotClosedSystem(
                f"{A.names[x]} ∧ {A.names[y]} = {A.names[A.meet[x][y]]} is missing", (x, y)
            )
    return ClosedSystem(A, mask)


def all_closed_systems(A: Algebra) -> list[ClosedSystem]:
    """Every ∧-closed system of ``A`` (exponential; capped at order 8)."""
    if A.order > FULL_SYSTEM_CAP:
        raise ValueError(f"full enumeration of closed systems is capped at order {FULL_SYSTEM_CAP}")
    others = [x for x in A.elements if x != A.top]
    out = []
    for sub in range(1 << len(others)):
        mask = 1 << A.top
        for k, x in enumerate(others):
            if sub >> k & 1:
                mask |= 1 << x
        xs = list(bits(mask))
        if all(mask >> A.meet[x][y] & 1 for x in xs for y in xs):
            out.append(ClosedSystem(A, mask))
    return out


def boolean_system(F: FilterSet) -> ClosedSystem:
    """``S_F = F ∩ B(L)`` (also used as ``S_M`` for a maximal or prime ``M``)."""
    A = F.algebra
    return ClosedSystem(A, sum(1 << e for e in A.boolean.elements if e in F))


def relevant_closed_systems(A: Algebra) -> list[ClosedSystem]:
    """All systems for small orders; otherwise the ones the theorems quantify over."""
    if A.order <= FULL_SYSTEM_CAP:
        return all_closed_systems(A)
    FL = filter_lattice(A)
    masks = {1 << A.top, sum(1 << e for e in A.boolean.elements)}
    for F in FL:
        masks.add(boolean_system(F).mask)
    return [ClosedSystem(A, m) for m in sorted(masks)]


@dataclass(frozen=True)
class FractionAlgebra:
    system: ClosedSystem
    congruence: Congruence
    algebra: Algebra

    @property
    def class_of(self) -> tuple[int, ...]:
        return self.congruence.block_of


def localize(A: Algebra, S: ClosedSystem) -> FractionAlgebra:
    """Build ``L[S]`` and check which of its classes are Boolean."""
    if S.algebra is not A:
        raise NotClosedSystem("closed system belongs to another algebra")
    closed_system(A, S.mask)
    witnesses = S.boolean_part
    key = ("fractions", sum(1 << e for e in witnesses))
    if key in A._cache:
        cached = A._cache[key]
        return FractionAlgebra(S, cached.congruence, cached.algebra)
    cong = congruence_from_relation(
        A, lambda x, y: any(A.meet[x][e] == A.meet[y][e] for e in witnesses)
    )
    Q = quotient_by(A, cong, "S").algebra
    fa = FractionAlgebra(S, cong, Q)
    cls = fa.class_of
    s = A.stars
    for x in A.elements:
        predicted = any(A.leq[e][A.join[x][s[x]]] for e in witnesses)
        if (cls[x] in Q.boolean.elements) != predicted:
            raise TheoremViolation(
                f"Boolean classes of L[S] disagree with the e ≤ x∨x* test at {A.names[x]}"
            )
    for e in witnesses:
        if cls[e] != cls[A.top]:
            raise TheoremViolation(f"{A.names[e]}/S differs from 1/S")
    A._cache[key] = fa
    return fa


def in_fraction_filter(F: FilterSet, S: ClosedSystem, x: int) -> bool:
    """Elementwise membership test: ``x/S ∈ F[S]`` iff ``x ∨ e* ∈ F`` for a Boolean ``e ∈ S``."""
    A = F.algebra
    return any(A.join[x][A.stars[e]] in F for e in S.boolean_part)


def fraction_filter(F: FilterSet, S: ClosedSystem) -> FilterSet:
    """``F[S] = {x/S : x ∈ F}`` as a filter of ``L[S]``."""
    A = F.algebra
    fa = localize(A, S)
    cls = fa.class_of
    mask = 0
    for x in F:
        mask |= 1 << cls[x]
    if not is_filter_mask(fa.algebra, mask):
        raise TheoremViolation(f"image of {F!r} in L[S] is not a filter")
    for x in A.elements:
        if bool(mask >> cls[x] & 1) != in_fraction_filter(F, S, x):
            raise TheoremViolation(f"membership of {A.names[x]}/S in F[S] disagrees with x∨e* ∈ F")
    return FilterSet(fa.algebra, mask)


def verify_fraction_iso(F: FilterSet, S: ClosedSystem) -> bool:
    """``L/(F ∨ [S ∩ B(L))) ≅ L[S]/F[S]``, decided by isomorphism search."""
    if not F.is_proper:
        raise ImproperFilter("the fraction isomorphism is stated for proper filters")
    A = F.algebra
    left_kernel = filter_join(F, generated_filter(A, list(S.boolean_part) + [A.top]))
    left = quotient(left_kernel).algebra
    right = quotient(fraction_filter(F, S)).algebra
    return find_isomorphism(left, right) is not None


def booleanization(F: FilterSet) -> FilterSet:
    """``F′ = [F ∩ B(L))``."""
    A = F.algebra
    return generated_filter(A, [e for e in A.boolean.elements if e in F] + [A.top])


def fraction_pi_elementwise(F: FilterSet, S: ClosedSystem) -> bool:
    """Elementwise test for pseudo-irreducibility of ``F[S]`` (when ``F[S]`` is proper):
    ``e* ∨ x ∨ x* ∈ F`` for a Boolean ``e ∈ S`` forces ``f* ∨ x ∈ F`` or ``f* ∨ x* ∈ F``
    for some Boolean ``f ∈ S``."""
    A = F.algebra
    s, j = A.stars, A.join
    E = S.boolean_part
    for x in A.elements:
        xx = j[x][s[x]]
        if any(j[s[e]][xx] in F for e in E):
            if not any(j[s[f]][x] in F or j[s[f]][s[x]] in F for f in E):
                return False
    return True


@dataclass(frozen=True)
class LocalizationCriteria:
    """The equivalent BLP criteria evaluated for one proper filter."""

    blp: bool
    fractions_blp: bool
    fractions_pseudo_irreducible: bool
    join_pseudo_irreducible: bool
    elementwise: bool
    join_pseudo_irreducible_literal: bool
    divergent_points: tuple

    def values(self) -> tuple[bool, ...]:
        return (
            self.blp,
            self.fractions_blp,
            self.fractions_pseudo_irreducible,
            self.join_pseudo_irreducible,
            self.elementwise,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.values())) == 1


def localization_criteria(F: FilterSet, points: str = "max") -> LocalizationCriteria:
    """Evaluate every BLP criterion that goes through ``S_M = M ∩ B(L)``.

    ``points`` selects maximal (``"max"``) or prime (``"spec"``) filters M.
    For the join criterion the guard is evaluated three ways: ``F[S_M] ≠ L[S_M]``,
    ``F ∨ [S_M) ≠ L`` and ``F ∩ B(L) ⊆ M`` must coincide (a mismatch raises);
    the literal guard ``F ⊆ S_M`` is evaluated separately and M where it
    differs are reported in ``divergent_points``.
    """
    if not F.is_proper:
        raise ImproperFilter("criteria are stated for proper filters")
    A = F.algebra
    FL = filter_lattice(A)
    Ms = FL.maximal if points == "max" else FL.prime
    s, j = A.stars, A.join
    c2 = c3 = c4 = c5 = c4_literal = True
    divergent = []
    for M in Ms:
        S = boolean_system(M)
        E = S.boolean_part
        FS = fraction_filter(F, S)
        fs_proper = FS.is_proper
        joined = filter_join(F, generated_filter(A, list(E) + [A.top]))
        join_proper = joined.is_proper
        bool_guard = all(e in M for e in A.boolean.elements if e in F)
        if not (fs_proper == join_proper == bool_guard):
            raise TheoremViolation(f"properness tests for F[S_M] disagree at M={M!r}")
        literal_guard = F.mask & ~S.mask == 0
        if literal_guard != join_proper:
            divergent.append(M)
        if not has_blp(FS):
            c2 = False
        if fs_proper and not is_pseudo_irreducible(FS):
            c3 = False
        pi_join = join_proper and is_pseudo_irreducible(joined)
        if join_proper and not pi_join:
            c4 = False
        if literal_guard and not pi_join:
            c4_literal = False
        if join_proper:
            for x in A.elements:
                xx = j[x][s[x]]
                if any(j[s[e]][xx] in F for e in E) and not any(
                    j[s[f]][x] in F or j[s[f]][s[x]] in F for f in E
                ):
                    c5 = False
                    break
    return LocalizationCriteria(
        blp=has_blp(F),
        fractions_blp=c2,
        fractions_pseudo_irreducible=c3,
        join_pseudo_irreducible=c4,
        elementwise=c5,
        join_pseudo_irreducible_literal=c4_literal,
        divergent_points=tuple(divergent),
    )


def blp_by_localization(F: FilterSet) -> bool:
    """BLP through localizations: for each maximal M with ``F ∨ [S_M) ≠ L`` the
    filter ``F ∨ [S_M)`` must be pseudo-irreducible. Cross-checked against
    :func:`has_blp`."""
    crit = localization_criteria(F, "max")
    if crit.join_pseudo_irreducible != crit.blp:
        raise TheoremViolation(f"localization criterion disagrees with BLP for {F!r}")
    return crit.join_pseudo_irreducible


def indecomposable_localization(F: FilterSet) -> FractionAlgebra:
    """``L[S_F]`` for a proper ``F`` that contains ``e`` or ``e*`` for each Boolean ``e``."""
    if not F.is_proper:
        raise ImproperFilter("F must be proper")
    A = F.algebra
    for e in sorted(A.boolean.elements):
        if e not in F and A.stars[e] not in F:
            raise PreconditionBooleanSplit(
                f"neither {A.names[e]} nor its complement lies in {F!r}", (e,)
            )
    fa = localize(A, boolean_system(F))
    Q = fa.algebra
    if Q.order < 2 or len(Q.boolean) != 2:
        raise TheoremViolation(f"L[S_F] is not directly indecomposable for {F!r}")
    return fa
