"""Radicals of filters, the radical-decomposition transfer property and BLP transfer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import Algebra
from .errors import NotComaximal, NotNested, TheoremViolation
from .filters import FilterSet, filter_lattice, has_blp, trivial_filter, whole


def rad(F: FilterSet) -> FilterSet:
    """Intersection of the maximal filters containing ``F``; ``rad(L) = L`` by convention."""
    A = F.algebra
    if F.is_improper:
        return F
    mask = (1 << A.order) - 1
    for M in filter_lattice(A).maximal:
        if F <= M:
            mask &= M.mask
    return FilterSet(A, mask)


def radical_of_algebra(A: Algebra) -> FilterSet:
    return rad(trivial_filter(A))


def tprd_witness(F: FilterSet, G: FilterSet, H: FilterSet) -> Optional[tuple[FilterSet, FilterSet]]:
    """Smallest ``(G0, H0)`` with ``G0 ⊆ G``, ``H0 ⊆ H``, ``rad(G0) = G``,
    ``rad(H0) = H``, ``G0 ∩ H0 = F`` and ``G0 ∨ H0 = L``."""
    FL = filter_lattice(F.algebra)
    top = FL.whole
    Gs = [G0 for G0 in FL if G0 <= G and rad(G0) == G]
    Hs = [H0 for H0 in FL if H0 <= H and rad(H0) == H]
    for G0 in Gs:
        for H0 in Hs:
            if G0.mask & H0.mask == F.mask and FL.join(G0, H0) == top:
                return G0, H0
    return None


@dataclass(frozen=True)
class TPRDResult:
    holds: bool
    counterexample: Optional[tuple[FilterSet, FilterSet, FilterSet]] = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds


def radical_decompositions(F: FilterSet):
    """Pairs ``(G, H)`` with ``rad(F) = G ∩ H`` and ``G ∨ H = L``."""
    return filter_lattice(F.algebra).decompositions(rad(F))


def has_tprd(A: Algebra) -> TPRDResult:
    key = "tprd"
    if key in A._cache:
        return A._cache[key]
    checked = 0
    result = None
    for F in filter_lattice(A):
        for G, H in radical_decompositions(F):
            checked += 1
            if tprd_witness(F, G, H) is None:
                result = TPRDResult(False, (F, G, H), checked)
                break
        if result is not None:
            break
    if result is None:
        result = TPRDResult(True, None, checked)
    A._cache[key] = result
    return result


@dataclass(frozen=True)
class RadicalReport:
    filter: FilterSet
    radical: FilterSet
    blp_filter: bool
    blp_radical: bool
    tprd_witnesses: list = field(default_factory=list)


def blp_transfer_report(F: FilterSet) -> RadicalReport:
    """BLP of ``F`` and of ``rad(F)``, checking that BLP descends from the radical
    always and ascends to it when the algebra has the transfer property."""
    A = F.algebra
    R = rad(F)
    bf, br = has_blp(F), has_blp(R)
    witnesses = [(F, G, H) + (tprd_witness(F, G, H) or (None, None)) for G, H in radical_decompositions(F)]
    if br and not bf:
        raise TheoremViolation(f"rad({F!r}) has BLP but {F!r} does not")
    if has_tprd(A) and bf != br:
        raise TheoremViolation(f"TPRD holds but BLP of {F!r} and its radical differ")
    return RadicalReport(F, R, bf, br, witnesses)


def comaximal_rigidity(Fs: Sequence[FilterSet], Gs: Sequence[FilterSet]) -> bool:
    """For pairwise comaximal proper ``F_i ⊆ G_i``: if ``⋂F_i = ⋂G_i`` then each ``F_i = G_i``.

    Returns whether the intersection hypothesis held.
    """
    if len(Fs) != len(Gs) or not Fs:
        raise ValueError("need equally many (and at least one) F_i and G_i")
    A = Fs[0].algebra
    FL = filter_lattice(A)
    for i, F in enumerate(Fs):
        if not F.is_proper:
            raise NotComaximal(f"F_{i + 1} = {F!r} is not proper")
        if not F <= Gs[i]:
            raise NotNested(f"F_{i + 1} is not contained in G_{i + 1}")
        for j in range(i + 1, len(Fs)):
            if FL.join(F, Fs[j]) != FL.whole:
                raise NotComaximal(f"F_{i + 1} and F_{j + 1} are not comaximal")
    meet_f = meet_g = whole(A).mask
    for F, G in zip(Fs, Gs):
        meet_f &= F.mask
        meet_g &= G.mask
    if meet_f != meet_g:
        return False
    for i, (F, G) in enumerate(zip(Fs, Gs)):
        if F != G:
            raise TheoremViolation(f"F_{i + 1} ≠ G_{i + 1} although the intersections agree")
    return True
