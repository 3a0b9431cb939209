"""Filters of a finite residuated lattice, encoded as bit masks over element indices.

Every filter of a finite residuated lattice is principal: the product of all
its members is its least element ``m`` and the filter equals ``[m)``. The
default enumeration therefore closes each element, and a powerset scan is
kept as an independent route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Optional

from .algebra import Algebra
from .errors import (
    AlgebraMismatch,
    EmptyGenerator,
    ImproperFilter,
    InputNotPseudoIrreducible,
    TheoremViolation,
)

PSEUDO_IRREDUCIBLE_METHODS = ("definition", "pair", "star", "quotient", "topology")
BLP_METHODS = ("definition", "star_witness", "decomposition", "cover")


def up_masks(A: Algebra) -> tuple[int, ...]:
    """``up_masks(A)[x]`` is the bit mask of ``{y : x ≤ y}``."""
    try:
        return A._cache["up"]
    except KeyError:
        pass
    out = tuple(
        sum(1 << y for y in A.elements if A.leq[x][y]) for x in A.elements
    )
    A._cache["up"] = out
    return out


def bits(mask: int) -> Iterator[int]:
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


class FilterSet:
    """A filter of ``algebra`` stored as a bit mask.

    Equality and hashing are by (algebra identity, mask). ``<=`` is inclusion.
    """

    __slots__ = ("algebra", "mask")

    def __init__(self, algebra: Algebra, mask: int):
        self.algebra = algebra
        self.mask = mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FilterSet)
            and other.algebra is self.algebra
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __le__(self, other: "FilterSet") -> bool:
        _same(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "FilterSet") -> bool:
        return self <= other and self.mask != other.mask

    def __repr__(self) -> str:
        return "{" + ", ".join(self.algebra.names[x] for x in self) + "}"

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def names(self) -> list[str]:
        return [self.algebra.names[x] for x in self]

    @property
    def is_proper(self) -> bool:
        return self.algebra.bottom not in self

    @property
    def is_improper(self) -> bool:
        return not self.is_proper

    @property
    def sort_key(self) -> tuple[int, int]:
        return (len(self), self.mask)

    def generator(self) -> int:
        """Least element ``m`` with ``self == [m)``."""
        A = self.algebra
        m = A.top
        for x in self:
            m = A.mon[m][x]
        return m


def _same(F: FilterSet, G: FilterSet) -> Algebra:
    if F.algebra is not G.algebra:
        raise AlgebraMismatch("filters belong to different algebras")
    return F.algebra


def mask_of(A: Algebra, elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << A.check(x)
    return m


def is_filter_mask(A: Algebra, mask: int) -> bool:
    """Definition check: contains 1, upward closed, closed under ⊙."""
    if not mask >> A.top & 1:
        return False
    up = up_masks(A)
    xs = list(bits(mask))
    for x in xs:
        if up[x] & ~mask:
            return False
    return all(mask >> A.mon[x][y] & 1 for x in xs for y in xs)


def generated_filter(A: Algebra, S: Iterable[int]) -> FilterSet:
    """Least filter containing ``S``: upward closure of the ⊙-closure of ``S``."""
    closed = set(A.check(x) for x in S)
    if not closed:
        raise EmptyGenerator("cannot generate a filter from an empty set")
    frontier = list(closed)
    while frontier:
        new = []
        for x in frontier:
            for y in list(closed):
                z = A.mon[x][y]
                if z not in closed:
                    closed.add(z)
                    new.append(z)
        frontier = new
    up = up_masks(A)
    mask = 0
    for x in closed:
        mask |= up[x]
    return FilterSet(A, mask)


def principal(A: Algebra, x: int) -> FilterSet:
    """``[x) = {z : xⁿ ≤ z for some n ≥ 1}``."""
    up = up_masks(A)
    mask, p = 0, A.check(x)
    while not mask >> p & 1:
        mask |= up[p]
        p = A.mon[p][x]
    return FilterSet(A, mask)


def filter_of(A: Algebra, elements: Iterable[int]) -> FilterSet:
    """Wrap an explicit member set, refusing anything that is not a filter."""
    mask = mask_of(A, elements)
    if not is_filter_mask(A, mask):
        raise ValueError(f"{sorted(bits(mask))} is not a filter")
    return FilterSet(A, mask)


def trivial_filter(A: Algebra) -> FilterSet:
    return FilterSet(A, 1 << A.top)


def whole(A: Algebra) -> FilterSet:
    return FilterSet(A, (1 << A.order) - 1)


def filter_meet(F: FilterSet, G: FilterSet) -> FilterSet:
    A = _same(F, G)
    return FilterSet(A, F.mask & G.mask)


def filter_join(F: FilterSet, G: FilterSet) -> FilterSet:
    A = _same(F, G)
    return generated_filter(A, list(F) + list(G))


def filter_arrow(F: FilterSet, G: FilterSet) -> FilterSet:
    """``F → G = {x : F ∩ [x) ⊆ G}``."""
    A = _same(F, G)
    mask = 0
    for x in A.elements:
        if (F.mask & principal(A, x).mask) & ~G.mask == 0:
            mask |= 1 << x
    return FilterSet(A, mask)


def extend(F: FilterSet, x: int) -> FilterSet:
    """``F(x) = [F ∪ {x})``."""
    return generated_filter(F.algebra, list(F) + [x])


# the filter lattice -------------------------------------------------------


@dataclass(frozen=True)
class FilterFlags:
    proper: bool
    prime: bool
    maximal: bool
    pseudo_irreducible: bool
    blp: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


class FilterLattice:
    """All filters of an algebra, sorted by (size, mask)."""

    def __init__(self, algebra: Algebra, masks: Iterable[int]):
        self.algebra = algebra
        ordered = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
        self.filters: tuple[FilterSet, ...] = tuple(FilterSet(algebra, m) for m in ordered)
        self._pos = {F.mask: k for k, F in enumerate(self.filters)}

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self) -> Iterator[FilterSet]:
        return iter(self.filters)

    def __getitem__(self, k: int) -> FilterSet:
        return self.filters[k]

    def position(self, F: FilterSet) -> int:
        return self._pos[F.mask]

    @property
    def trivial(self) -> FilterSet:
        return self.filters[0]

    @property
    def whole(self) -> FilterSet:
        return self.filters[-1]

    @cached_property
    def proper(self) -> tuple[FilterSet, ...]:
        return tuple(F for F in self.filters if F.is_proper)

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        fs = self.filters
        return tuple(tuple(self._pos[F.mask & G.mask] for G in fs) for F in fs)

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        """Join of filters: least filter containing both (computed via the lattice)."""
        fs = self.filters
        out = []
        for F in fs:
            row = []
            for G in fs:
                want = F.mask | G.mask
                # filters are sorted by size, so the first superset is the least
                row.append(next(k for k, H in enumerate(fs) if want & ~H.mask == 0))
            out.append(tuple(row))
        return tuple(out)

    def join(self, F: FilterSet, G: FilterSet) -> FilterSet:
        return self.filters[self.join_table[self._pos[F.mask]][self._pos[G.mask]]]

    def meet(self, F: FilterSet, G: FilterSet) -> FilterSet:
        return self.filters[self.meet_table[self._pos[F.mask]][self._pos[G.mask]]]

    @cached_property
    def maximal(self) -> tuple[FilterSet, ...]:
        P = self.proper
        return tuple(F for F in P if not any(F < G for G in P))

    @cached_property
    def prime(self) -> tuple[FilterSet, ...]:
        return tuple(F for F in self.proper if is_prime(F))

    def decompositions(self, F: FilterSet) -> Iterator[tuple[FilterSet, FilterSet]]:
        """Pairs ``(G, H)`` with ``G ∩ H = F`` and ``G ∨ H = L``."""
        top = self.whole.mask
        k = self._pos[F.mask]
        fs = self.filters
        for g, G in enumerate(fs):
            if F.mask & ~G.mask:
                continue
            for h, H in enumerate(fs):
                if self.meet_table[g][h] == k and fs[self.join_table[g][h]].mask == top:
                    yield G, H

    @cached_property
    def flags(self) -> dict[FilterSet, FilterFlags]:
        maxset = set(self.maximal)
        out = {}
        for F in self.filters:
            proper = F.is_proper
            out[F] = FilterFlags(
                proper=proper,
                prime=proper and is_prime(F),
                maximal=F in maxset,
                pseudo_irreducible=proper and is_pseudo_irreducible(F, "definition"),
                blp=has_blp(F, "definition"),
            )
        return out


def enumerate_filters(A: Algebra, method: str = "principal") -> FilterLattice:
    """Build (and cache) the lattice of all filters of ``A``.

    ``principal`` closes each element (complete for finite algebras);
    ``powerset`` tests every subset against the definition and is meant as an
    oracle for orders up to about 20.
    """
    key = ("filters", method)
    if key in A._cache:
        return A._cache[key]
    if method == "principal":
        masks = {principal(A, x).mask for x in A.elements}
    elif method == "powerset":
        top = 1 << A.top
        masks = set()
        for m in range(1 << A.order):
            if m & top and is_filter_mask(A, m):
                masks.add(m)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    FL = FilterLattice(A, masks)
    A._cache[key] = FL
    return FL


def filter_lattice(A: Algebra) -> FilterLattice:
    return enumerate_filters(A)


# classification -------------------------------------------------------------


def prime_witness(F: FilterSet) -> Optional[tuple[int, int]]:
    """First pair ``(x, y)`` with ``x ∨ y ∈ F`` but ``x, y ∉ F``."""
    A = F.algebra
    for x, y in product(A.elements, repeat=2):
        if A.join[x][y] in F and x not in F and y not in F:
            return (x, y)
    return None


def is_prime(F: FilterSet) -> bool:
    return F.is_proper and prime_witness(F) is None


def is_maximal(F: FilterSet) -> bool:
    return F in filter_lattice(F.algebra).maximal


def maximal_filters(A: Algebra) -> tuple[FilterSet, ...]:
    return filter_lattice(A).maximal


def prime_filters(A: Algebra) -> tuple[FilterSet, ...]:
    return filter_lattice(A).prime


def is_local(A: Algebra) -> bool:
    return len(maximal_filters(A)) == 1


def _require_proper(F: FilterSet) -> None:
    if not F.is_proper:
        raise ImproperFilter("pseudo-irreducibility is only defined for proper filters")


def is_pseudo_irreducible(F: FilterSet, method: str = "definition") -> bool:
    """Decide whether the proper filter ``F`` is pseudo-irreducible.

    Methods: ``definition`` (no comaximal decomposition into proper filters),
    ``pair`` (x∨y ∈ F and x⊙y = 0 force x ∈ F or y ∈ F), ``star`` (the same
    with y = x*), ``quotient`` (L/F non-trivial and directly indecomposable),
    ``topology`` (V(F) connected in the prime spectrum).
    """
    _require_proper(F)
    A = F.algebra
    if method == "definition":
        L = filter_lattice(A)
        W = L.whole
        return all(G == W or H == W for G, H in L.decompositions(F))
    if method == "pair":
        for x, y in product(A.elements, repeat=2):
            if A.join[x][y] in F and A.mon[x][y] == A.bottom and x not in F and y not in F:
                return False
        return True
    if method == "star":
        s = A.stars
        return all(
            x in F or s[x] in F for x in A.elements if A.join[x][s[x]] in F
        )
    if method == "quotient":
        from .quotients import quotient

        Q = quotient(F).algebra
        return Q.order > 1 and len(Q.boolean) == 2
    if method == "topology":
        from .spectrum import build_spectrum

        sp = build_spectrum(A, "spec")
        return sp.is_connected_subspace(sp.v_of(F))
    raise ValueError(f"unknown method {method!r}; choose from {PSEUDO_IRREDUCIBLE_METHODS}")


def has_blp(F: FilterSet, method: str = "definition") -> bool:
    """Boolean lifting property of ``F`` (proper or not).

    ``definition`` lifts every Boolean class of L/F; ``star_witness`` asks for
    e ∈ B(L) with x↔e ∈ F whenever x∨x* ∈ F; ``decomposition`` asks for
    e ∈ G, e* ∈ H for every comaximal decomposition F = G ∩ H; ``cover`` is
    the variant with G ∩ H ⊆ F and e ∈ F∨G, e* ∈ F∨H.
    """
    A = F.algebra
    B = sorted(A.boolean.elements)
    s = A.stars
    if method == "definition":
        from .quotients import quotient

        q = quotient(F)
        lifted = {q.projection[e] for e in B}
        return all(alpha in lifted for alpha in q.algebra.boolean.elements)
    if method == "star_witness":
        for x in A.elements:
            if A.join[x][s[x]] in F and not any(A.biimp(x, e) in F for e in B):
                return False
        return True
    if method == "decomposition":
        L = filter_lattice(A)
        return all(
            any(e in G and s[e] in H for e in B) for G, H in L.decompositions(F)
        )
    if method == "cover":
        L = filter_lattice(A)
        top = L.whole.mask
        for G in L:
            for H in L:
                if (G.mask & H.mask) & ~F.mask or L.join(G, H).mask != top:
                    continue
                FG, FH = L.join(F, G), L.join(F, H)
                if not any(e in FG and s[e] in FH for e in B):
                    return False
        return True
    raise ValueError(f"unknown method {method!r}; choose from {BLP_METHODS}")


def comaximal_intersection_test(G: FilterSet, H: FilterSet) -> bool:
    """For pseudo-irreducible ``G, H``: return ``G ∨ H ≠ L``.

    The intersection ``G ∩ H`` is pseudo-irreducible exactly in that case;
    the agreement is checked here.
    """
    A = _same(G, H)
    for X in (G, H):
        if not X.is_proper or not is_pseudo_irreducible(X):
            raise InputNotPseudoIrreducible(f"{X!r} is not pseudo-irreducible")
    L = filter_lattice(A)
    answer = L.join(G, H) != L.whole
    if answer != is_pseudo_irreducible(filter_meet(G, H)):
        raise TheoremViolation(
            f"comaximality of {G!r}, {H!r} disagrees with pseudo-irreducibility of the meet"
        )
    return answer
