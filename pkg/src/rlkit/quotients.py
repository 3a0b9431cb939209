"""Congruences induced by filters and the quotient algebras they define."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .algebra import Algebra, find_isomorphism, validate
from .errors import CompatibilityFailure, NotAboveKernel
from .filters import FilterSet


@dataclass(frozen=True)
class Congruence:
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]


@dataclass(frozen=True)
class QuotientAlgebra:
    """``algebra`` is the block algebra; ``projection[x]`` is the block of ``x``."""

    parent: Algebra
    algebra: Algebra
    congruence: Congruence
    kernel: Optional[FilterSet] = None

    @property
    def projection(self) -> tuple[int, ...]:
        return self.congruence.block_of

    def cls(self, x: int) -> int:
        return self.congruence.block_of[x]


def congruence_from_relation(A: Algebra, related) -> Congruence:
    """Partition ``A`` by a relation and check it is a congruence."""
    n = A.order
    block_of = [-1] * n
    blocks: list[tuple[int, ...]] = []
    for x in range(n):
        if block_of[x] >= 0:
            continue
        members = tuple(y for y in range(n) if related(x, y))
        if x not in members:
            raise CompatibilityFailure(f"relation is not reflexive at {A.names[x]}", (x,))
        for y in members:
            if block_of[y] >= 0:
                raise CompatibilityFailure("relation is not an equivalence", (x, y))
            block_of[y] = len(blocks)
        blocks.append(members)
    for x, y in product(range(n), repeat=2):
        if (block_of[x] == block_of[y]) != bool(related(x, y)):
            raise CompatibilityFailure("relation is not an equivalence", (x, y))
    cong = Congruence(tuple(block_of), tuple(blocks))
    _check_compatible(A, cong)
    return cong


def _check_compatible(A: Algebra, cong: Congruence) -> None:
    b = cong.block_of
    reps = [blk[0] for blk in cong.blocks]
    tables = (("∧", A.meet), ("∨", A.join), ("⊙", A.mon), ("→", A.imp))
    for label, tab in tables:
        for x, y in product(range(A.order), repeat=2):
            if b[tab[x][y]] != b[tab[reps[b[x]]][reps[b[y]]]]:
                raise CompatibilityFailure(
                    f"{label} is not well defined on blocks", (x, y)
                )


def quotient_by(A: Algebra, cong: Congruence, suffix: str, kernel: Optional[FilterSet] = None) -> QuotientAlgebra:
    """Block algebra with least-index representatives, revalidated from scratch."""
    reps = [blk[0] for blk in cong.blocks]
    b = cong.block_of
    k = len(reps)
    names = [f"{A.names[r]}/{suffix}" for r in reps]
    leq = [[b[A.meet[reps[i]][reps[j]]] == i for j in range(k)] for i in range(k)]
    mon = [[b[A.mon[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    imp = [[b[A.imp[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    base = A.name or "L"
    Q = validate(names, leq, mon, imp, name=f"{base}/{suffix}")
    return QuotientAlgebra(A, Q, cong, kernel)


def theta_of_filter(F: FilterSet) -> Congruence:
    """``x θ_F y`` iff ``x ↔ y ∈ F``."""
    A = F.algebra
    return congruence_from_relation(A, lambda x, y: A.biimp(x, y) in F)


def _label(F: FilterSet) -> str:
    A = F.algebra
    if F.is_improper:
        return "L"
    gen = F.generator()
    return f"[{A.names[gen]})"


def quotient(F: FilterSet) -> QuotientAlgebra:
    """``L/F``; cached on the parent algebra so repeated calls share one object."""
    A = F.algebra
    key = ("quotient", F.mask)
    if key not in A._cache:
        A._cache[key] = quotient_by(A, theta_of_filter(F), "F", kernel=F)
    return A._cache[key]


def push_filter(G: FilterSet, F: FilterSet) -> FilterSet:
    """``G/F`` as a filter of ``L/F``; requires ``F ⊆ G``."""
    if not F <= G:
        raise NotAboveKernel(f"{F!r} is not contained in {G!r}")
    q = quotient(F)
    mask = 0
    for x in G:
        mask |= 1 << q.projection[x]
    return FilterSet(q.algebra, mask)


def pull_filter(Q: FilterSet, F: FilterSet) -> FilterSet:
    """Preimage in ``L`` of a filter of ``L/F``."""
    q = quotient(F)
    if Q.algebra is not q.algebra:
        raise NotAboveKernel("filter does not live in the quotient by this kernel")
    A = F.algebra
    mask = 0
    for x in A.elements:
        if q.projection[x] in Q:
            mask |= 1 << x
    return FilterSet(A, mask)


def verify_second_iso(F: FilterSet, G: FilterSet) -> bool:
    """Build ``L/G`` and ``(L/F)/(G/F)`` and search for an isomorphism."""
    if not F <= G:
        raise NotAboveKernel(f"{F!r} is not contained in {G!r}")
    left = quotient(G).algebra
    right = quotient(push_filter(G, F)).algebra
    return find_isomorphism(left, right) is not None


def image_of_boolean_center(F: FilterSet) -> set[int]:
    q = quotient(F)
    return {q.projection[e] for e in F.algebra.boolean.elements}
