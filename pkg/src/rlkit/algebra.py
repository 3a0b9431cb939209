"""Finite residuated lattices: construction, validation and derived operations.

Elements are dense integer indices ``0..n-1`` in the order of ``names``.
Tables are tuples of tuples so an :class:`Algebra` can be shared freely once
built; modules that derive heavier structure (filter lattices, spectra) park
it in ``Algebra._cache``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    ElementError,
    ImpMismatch,
    NotALattice,
    NotMonoid,
    ResiduationFails,
    ResiduumMissing,
    ValidationError,
)

Table = tuple[tuple[int, ...], ...]

VARIETY_FLAGS = (
    "semi_g",
    "godel",
    "involution",
    "mtl",
    "de_morgan",
    "stonean",
    "weak_mtl",
    "directly_indecomposable",
)


def _freeze(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _bounds(n: int, leq) -> tuple[int, int]:
    bottoms = [x for x in range(n) if all(leq[x][y] for y in range(n))]
    tops = [x for x in range(n) if all(leq[y][x] for y in range(n))]
    if not bottoms or not tops:
        raise NotALattice("order has no least or no greatest element")
    return bottoms[0], tops[0]


def _lattice_tables(n: int, leq) -> tuple[Table, Table]:
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            ub = [z for z in range(n) if leq[x][z] and leq[y][z]]
            lub = [z for z in ub if all(leq[z][w] for w in ub)]
            lb = [z for z in range(n) if leq[z][x] and leq[z][y]]
            glb = [z for z in lb if all(leq[w][z] for w in lb)]
            if not lub or not glb:
                raise NotALattice(
                    f"elements {x} and {y} have no {'join' if not lub else 'meet'}",
                    (x, y),
                )
            join[x][y] = join[y][x] = lub[0]
            meet[x][y] = meet[y][x] = glb[0]
    return _freeze(join), _freeze(meet)


class Algebra:
    """A finite algebra ``(L, ∧, ∨, ⊙, →, 0, 1)`` given by its tables.

    The constructor only checks shapes and computes the lattice caches; use
    :func:`validate` to obtain an algebra whose residuated-lattice axioms
    have been verified.
    """

    def __init__(
        self,
        names: Sequence[str],
        leq,
        mon,
        imp,
        *,
        name: Optional[str] = None,
        source: Optional[str] = None,
    ):
        n = len(names)
        if n == 0:
            raise ValidationError("an algebra needs at least one element")
        self.names: tuple[str, ...] = tuple(str(s) for s in names)
        self.order = n
        self.leq: tuple[tuple[bool, ...], ...] = tuple(
            tuple(bool(v) for v in row) for row in leq
        )
        self.mon: Table = _freeze(mon)
        self.imp: Table = _freeze(imp)
        for label, tab in (("leq", self.leq), ("mon", self.mon), ("imp", self.imp)):
            if len(tab) != n or any(len(row) != n for row in tab):
                raise ValidationError(f"{label} table must be {n}x{n}")
        for label, tab in (("mon", self.mon), ("imp", self.imp)):
            for x, row in enumerate(tab):
                for y, v in enumerate(row):
                    if not 0 <= v < n:
                        raise ValidationError(
                            f"{label}[{self.names[x]}][{self.names[y]}] out of range", (x, y)
                        )
        self.bottom, self.top = _bounds(n, self.leq)
        self.join, self.meet = _lattice_tables(n, self.leq)
        self.name = name
        self.source = source
        self._index = {s: i for i, s in enumerate(self.names)}
        self._cache: dict = {}

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Algebra{label} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ElementError(f"unknown element {name!r}") from None

    def check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise ElementError(f"element index {x} out of range for order {self.order}")
        return x

    def fmt(self, *xs: int) -> str:
        return ",".join(self.names[x] for x in xs)

    # derived operations

    @cached_property
    def stars(self) -> tuple[int, ...]:
        return tuple(self.imp[x][self.bottom] for x in range(self.order))

    def star(self, x: int) -> int:
        return self.stars[self.check(x)]

    def biimp(self, x: int, y: int) -> int:
        self.check(x), self.check(y)
        return self.meet[self.imp[x][y]][self.imp[y][x]]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            raise ValueError("exponent must be non-negative")
        self.check(x)
        out = self.top
        for _ in range(k):
            out = self.mon[out][x]
        return out

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        n = self.order
        h = [0] * n
        for x in sorted(range(n), key=lambda v: sum(self.leq[u][v] for u in range(n))):
            below = [u for u in range(n) if u != x and self.leq[u][x]]
            h[x] = 1 + max((h[u] for u in below), default=-1)
        return tuple(h)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(x, y)`` with ``y`` covering ``x``."""
        n = self.order
        out = []
        for x in range(n):
            for y in range(n):
                if x != y and self.leq[x][y] and not any(
                    z not in (x, y) and self.leq[x][z] and self.leq[z][y] for z in range(n)
                ):
                    out.append((x, y))
        return tuple(out)

    @cached_property
    def boolean(self) -> "BooleanCenter":
        return boolean_center(self)

    def is_trivial(self) -> bool:
        return self.order == 1


def derive_imp(leq, mon, imp=None) -> Table:
    """Residuum ``x → y = max{z : x ⊙ z ≤ y}`` computed from the order and ⊙.

    The candidate set must be the whole down-set of its maximum, otherwise
    the adjunction fails. If ``imp`` is supplied it must agree with the
    derived table.
    """
    n = len(leq)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            cand = [z for z in range(n) if leq[mon[x][z]][y]]
            best = [z for z in cand if all(leq[w][z] for w in cand)]
            if not best:
                raise ResiduumMissing(f"no maximum z with {x}⊙z ≤ {y}", (x, y))
            out[x][y] = best[0]
            for z in range(n):
                if leq[z][best[0]] and not leq[mon[x][z]][y]:
                    raise ResiduationFails(
                        f"{z} ≤ max{{z : {x}⊙z ≤ {y}}} but {x}⊙{z} ≰ {y}", (x, y, z)
                    )
            if imp is not None and imp[x][y] != best[0]:
                raise ImpMismatch(
                    f"supplied {x}→{y} = {imp[x][y]}, derived {best[0]}", (x, y)
                )
    return _freeze(out)


def _check_partial_order(n: int, leq) -> None:
    for x in range(n):
        if not leq[x][x]:
            raise NotALattice(f"order is not reflexive at {x}", (x,))
    for x, y in product(range(n), repeat=2):
        if x != y and leq[x][y] and leq[y][x]:
            raise NotALattice("order is not antisymmetric", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if leq[x][y] and leq[y][z] and not leq[x][z]:
            raise NotALattice("order is not transitive", (x, y, z))


def validate(
    names: Sequence[str],
    leq,
    mon,
    imp=None,
    *,
    name: Optional[str] = None,
    source: Optional[str] = None,
) -> Algebra:
    """Build an :class:`Algebra` after checking every residuated-lattice axiom.

    ``imp`` may be omitted, in which case it is derived from ``leq`` and
    ``mon``; otherwise the residuation law is checked against it.
    Errors carry element indices in ``witness``.
    """
    names = [str(s) for s in names]
    n = len(names)
    if n == 0:
        raise ValidationError("an algebra needs at least one element")
    if len(set(names)) != n or any(not s for s in names):
        raise ValidationError("element names must be distinct and non-empty")
    if len(leq) != n or any(len(row) != n for row in leq):
        raise ValidationError(f"leq table must be {n}x{n}")
    if len(mon) != n or any(len(row) != n for row in mon):
        raise ValidationError(f"mon table must be {n}x{n}")
    for row in mon:
        for v in row:
            if not 0 <= v < n:
                raise ValidationError(f"mon entry {v} out of range")
    _check_partial_order(n, leq)
    bottom, top = _bounds(n, leq)
    _lattice_tables(n, leq)

    for x in range(n):
        if mon[top][x] != x or mon[x][top] != x:
            raise NotMonoid(f"top is not a unit for {x}", (top, x))
    for x, y in product(range(n), repeat=2):
        if mon[x][y] != mon[y][x]:
            raise NotMonoid("⊙ is not commutative", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if mon[mon[x][y]][z] != mon[x][mon[y][z]]:
            raise NotMonoid("⊙ is not associative", (x, y, z))

    if imp is None:
        imp = derive_imp(leq, mon)
    else:
        if len(imp) != n or any(len(row) != n for row in imp):
            raise ValidationError(f"imp table must be {n}x{n}")
        for row in imp:
            for v in row:
                if not 0 <= v < n:
                    raise ValidationError(f"imp entry {v} out of range")
        for x, y, z in product(range(n), repeat=3):
            if bool(leq[mon[x][z]][y]) != bool(leq[z][imp[x][y]]):
                raise ResiduationFails(
                    "x⊙z ≤ y does not match z ≤ x→y", (x, y, z)
                )
    return Algebra(names, leq, mon, imp, name=name, source=source)


def from_algebra(A: Algebra, **kw) -> Algebra:
    """Re-run :func:`validate` on an existing algebra's tables."""
    return validate(A.names, A.leq, A.mon, A.imp, name=kw.get("name", A.name), source=A.source)


@dataclass(frozen=True)
class BooleanCenter:
    elements: frozenset
    complement: Mapping[int, int]

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)


def boolean_center(A: Algebra) -> BooleanCenter:
    comp = {}
    for e in A.elements:
        for f in A.elements:
            if A.meet[e][f] == A.bottom and A.join[e][f] == A.top:
                comp[e] = f
                break
    return BooleanCenter(frozenset(comp), comp)


# variety predicates ------------------------------------------------------


def _first_violations(A: Algebra, arity: int, holds: Callable) -> tuple:
    return tuple(xs for xs in product(A.elements, repeat=arity) if not holds(*xs))


def _variety_checks(A: Algebra) -> dict[str, tuple[int, Callable]]:
    s, m, i, j, mt, top, bot = A.stars, A.mon, A.imp, A.join, A.meet, A.top, A.bottom
    return {
        "semi_g": (1, lambda x: s[m[x][x]] == s[x]),
        "godel": (1, lambda x: m[x][x] == x),
        "involution": (1, lambda x: s[s[x]] == x),
        "mtl": (2, lambda x, y: j[i[x][y]][i[y][x]] == top),
        "de_morgan": (2, lambda x, y: s[mt[x][y]] == j[s[x]][s[y]]),
        "stonean": (1, lambda x: j[s[x]][s[s[x]]] == top),
        "weak_mtl": (1, lambda x: j[i[s[x]][s[s[x]]]][i[s[s[x]]][s[x]]] == top),
        "semi_g_meet": (1, lambda x: mt[x][s[x]] == bot),
    }


@dataclass(frozen=True)
class VarietyReport:
    """Membership of one algebra in the varieties the toolkit knows about.

    ``witnesses`` maps each failed predicate to its lexicographically first
    violating element tuple; ``violations`` lists all of them.
    """

    semi_g: bool
    godel: bool
    involution: bool
    mtl: bool
    de_morgan: bool
    stonean: bool
    weak_mtl: bool
    directly_indecomposable: bool
    witnesses: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    violations: Mapping[str, tuple[tuple[int, ...], ...]] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in VARIETY_FLAGS}

    def witness(self, predicate: str) -> Optional[tuple[int, ...]]:
        return self.witnesses.get(predicate)


def classify(A: Algebra) -> VarietyReport:
    checks = _variety_checks(A)
    flags, witnesses, violations = {}, {}, {}
    for key, (arity, holds) in checks.items():
        bad = _first_violations(A, arity, holds)
        if key == "semi_g_meet":
            if bool(bad) != bool(violations.get("semi_g")):
                raise AssertionError("semi-G criteria (x²)*=x* and x∧x*=0 disagree")
            continue
        flags[key] = not bad
        if bad:
            witnesses[key] = bad[0]
            violations[key] = bad
    B = A.boolean
    nontrivial_boolean = tuple((e,) for e in sorted(B.elements) if e not in (A.bottom, A.top))
    if A.order < 2:
        flags["directly_indecomposable"] = False
        witnesses["directly_indecomposable"] = (A.top,)
        violations["directly_indecomposable"] = ((A.top,),)
    else:
        flags["directly_indecomposable"] = not nontrivial_boolean
        if nontrivial_boolean:
            witnesses["directly_indecomposable"] = nontrivial_boolean[0]
            violations["directly_indecomposable"] = nontrivial_boolean
    return VarietyReport(**flags, witnesses=witnesses, violations=violations)


# identity suite ------------------------------------------------------------


@dataclass(frozen=True)
class IdentityViolation:
    item: int
    statement: str
    args: tuple[int, ...]

    def render(self, A: Algebra) -> str:
        return f"({self.item}) {self.statement} fails at {A.fmt(*self.args)}"


def _identity_items(A: Algebra):
    n, m, i, j, mt, s = A.order, A.mon, A.imp, A.join, A.meet, A.stars
    le, top, bot = A.leq, A.top, A.bottom
    bic = lambda x, y: mt[i[x][y]][i[y][x]]
    B = sorted(A.boolean.elements)
    comp = A.boolean.complement
    X = range(n)

    def pw(x, k):
        out = top
        for _ in range(k):
            out = m[out][x]
        return out

    # (item, statement, domains, predicate); E marks a Boolean-element slot
    E = "E"
    return [
        (1, "x≤y ⇔ x→y=1", (X, X), lambda x, y: le[x][y] == (i[x][y] == top)),
        (2, "x≤y ⇒ y*≤x*", (X, X), lambda x, y: not le[x][y] or le[s[y]][s[x]]),
        (3, "x⊙x*=0", (X,), lambda x: m[x][s[x]] == bot),
        (4, "x⊙y=0 ⇔ x≤y*", (X, X), lambda x, y: (m[x][y] == bot) == le[x][s[y]]),
        (5, "x≤x** and x***=x*", (X,), lambda x: le[x][s[s[x]]] and s[s[s[x]]] == s[x]),
        (6, "x→(y→z)=y→(x→z)=(x⊙y)→z", (X, X, X),
         lambda x, y, z: i[x][i[y][z]] == i[y][i[x][z]] == i[m[x][y]][z]),
        (7, "1→x=x and x→1=1", (X,), lambda x: i[top][x] == x and i[x][top] == top),
        (8, "x⊙(x→y)≤y", (X, X), lambda x, y: le[m[x][i[x][y]]][y]),
        (9, "x=x↔1 and x*=x↔0", (X,), lambda x: bic(x, top) == x and bic(x, bot) == s[x]),
        (10, "(x∨y)*=x*∧y*", (X, X), lambda x, y: s[j[x][y]] == mt[s[x]][s[y]]),
        (11, "x∨(y⊙z)≥(x∨y)⊙(x∨z)", (X, X, X),
         lambda x, y, z: le[m[j[x][y]][j[x][z]]][j[x][m[y][z]]]),
        (12, "x⊙(y∨z)=(x⊙y)∨(x⊙z)", (X, X, X),
         lambda x, y, z: m[x][j[y][z]] == j[m[x][y]][m[x][z]]),
        (13, "e'=e*, e∧e*=e⊙e*=0, e**=e", (E,),
         lambda e: comp[e] == s[e] and mt[e][s[e]] == bot and m[e][s[e]] == bot and s[s[e]] == e),
        (14, "e⊙f=e∧f∈B(L)", (E, E), lambda e, f: m[e][f] == mt[e][f] and mt[e][f] in comp),
        (15, "e⊙x=e∧x", (E, X), lambda e, x: m[e][x] == mt[e][x]),
        (16, "e∧(x⊙y)=(e∧x)⊙(e∧y)", (E, X, X),
         lambda e, x, y: mt[e][m[x][y]] == m[mt[e][x]][mt[e][y]]),
        (17, "e∨(x⊙y)=(e∨x)⊙(e∨y)", (E, X, X),
         lambda e, x, y: j[e][m[x][y]] == m[j[e][x]][j[e][y]]),
        (18, "e∧(x∨y)=(e∧x)∨(e∧y)", (E, X, X),
         lambda e, x, y: mt[e][j[x][y]] == j[mt[e][x]][mt[e][y]]),
        (19, "e∨(x∧y)=(e∨x)∧(e∨y)", (E, X, X),
         lambda e, x, y: j[e][mt[x][y]] == mt[j[e][x]][j[e][y]]),
        (20, "(x∧e)*=x*∨e*", (X, E), lambda x, e: s[mt[x][e]] == j[s[x]][s[e]]),
        (21, "e→x=e*∨x and x→e=x*∨e", (E, X),
         lambda e, x: i[e][x] == j[s[e]][x] and i[x][e] == j[s[x]][e]),
        (22, "e⊙(e→x)=e∧x and x⊙(x→e)=e∧x", (E, X),
         lambda e, x: m[e][i[e][x]] == mt[e][x] and m[x][i[x][e]] == mt[e][x]),
        (23, "eⁿ=e for n≥1", (E,), lambda e: all(pw(e, k) == e for k in range(1, n + 2))),
        (24, "x∨x*=1 ⇒ x∈B(L)", (X,), lambda x: j[x][s[x]] != top or x in comp),
    ], B


def identity_suite(A: Algebra) -> list[IdentityViolation]:
    """Exhaustively check the standard residuated-lattice identities.

    Returns the violations; an algebra accepted by :func:`validate` yields
    an empty list.
    """
    items, B = _identity_items(A)
    out = []
    for item, text, domains, pred in items:
        doms = [B if d == "E" else d for d in domains]
        for args in product(*doms):
            if not pred(*args):
                out.append(IdentityViolation(item, text, tuple(args)))
    return out


# products and isomorphisms -------------------------------------------------


def direct_product(A: Algebra, B: Algebra) -> Algebra:
    """Componentwise product; element ``(a, b)`` has index ``a * |B| + b``."""
    nb = B.order
    pairs = [(a, b) for a in A.elements for b in B.elements]
    names = [f"({A.names[a]},{B.names[b]})" for a, b in pairs]
    idx = lambda a, b: a * nb + b
    leq = [[A.leq[a][c] and B.leq[b][d] for (c, d) in pairs] for (a, b) in pairs]
    mon = [[idx(A.mon[a][c], B.mon[b][d]) for (c, d) in pairs] for (a, b) in pairs]
    imp = [[idx(A.imp[a][c], B.imp[b][d]) for (c, d) in pairs] for (a, b) in pairs]
    label = f"{A.name or 'A'}x{B.name or 'B'}"
    return validate(names, leq, mon, imp, name=label)


def element_profile(A: Algebra, x: int) -> tuple:
    """Isomorphism-invariant fingerprint of ``x``."""
    n = A.order
    below = sum(A.leq[u][x] for u in range(n))
    above = sum(A.leq[x][u] for u in range(n))
    s = A.stars
    zero_div = sum(A.mon[x][u] == A.bottom for u in range(n))
    fixed = sum(A.mon[x][u] == u for u in range(n))
    orbit = (x == s[x], x == s[s[x]], A.heights[s[x]])
    return (A.heights[x], below, above, A.mon[x][x] == x, zero_div, fixed, orbit)


def iter_isomorphisms(A: Algebra, B: Algebra, *, order_only: bool = False) -> Iterator[tuple[int, ...]]:
    """All bijections ``A → B`` preserving the order and (unless
    ``order_only``) ⊙ and →. Bounds are preserved automatically."""
    if A.order != B.order:
        return
    n = A.order
    if order_only:
        prof = lambda C, x: (C.heights[x], sum(C.leq[u][x] for u in range(n)),
                             sum(C.leq[x][u] for u in range(n)))
    else:
        prof = element_profile
    pa = [prof(A, x) for x in range(n)]
    pb = [prof(B, y) for y in range(n)]
    if sorted(pa) != sorted(pb):
        return
    cls_size = {p: pb.count(p) for p in pb}
    order = sorted(range(n), key=lambda x: (cls_size[pa[x]], A.heights[x], x))
    cand = {x: [y for y in range(n) if pb[y] == pa[x]] for x in range(n)}
    f = [-1] * n
    used = [False] * n

    def consistent(x: int, y: int) -> bool:
        for u in range(n):
            v = f[u]
            if v < 0:
                continue
            if A.leq[x][u] != B.leq[y][v] or A.leq[u][x] != B.leq[v][y]:
                return False
            if order_only:
                continue
            for p, q in ((x, u), (u, x), (x, x)):
                fp = y if p == x else v
                fq = y if q == x else v
                r = A.mon[p][q]
                if f[r] >= 0 and f[r] != B.mon[fp][fq]:
                    return False
                r = A.imp[p][q]
                if f[r] >= 0 and f[r] != B.imp[fp][fq]:
                    return False
        return True

    def full_check() -> bool:
        if order_only:
            return True
        return all(
            f[A.mon[x][z]] == B.mon[f[x]][f[z]] and f[A.imp[x][z]] == B.imp[f[x]][f[z]]
            for x in range(n)
            for z in range(n)
        )

    def bt(k: int):
        if k == n:
            if full_check():
                yield tuple(f)
            return
        x = order[k]
        for y in cand[x]:
            if used[y] or not consistent(x, y):
                continue
            f[x], used[y] = y, True
            yield from bt(k + 1)
            f[x], used[y] = -1, False

    yield from bt(0)


def find_isomorphism(A: Algebra, B: Algebra) -> Optional[tuple[int, ...]]:
    """Return an isomorphism ``A → B`` as a tuple ``f`` with ``f[x]`` the image of ``x``, or None."""
    return next(iter_isomorphisms(A, B), None)


def is_isomorphism(A: Algebra, B: Algebra, f: Sequence[int]) -> bool:
    n = A.order
    if B.order != n or sorted(f) != list(range(n)):
        return False
    return all(
        A.leq[x][y] == B.leq[f[x]][f[y]]
        and f[A.mon[x][y]] == B.mon[f[x]][f[y]]
        and f[A.imp[x][y]] == B.imp[f[x]][f[y]]
        for x in range(n)
        for y in range(n)
    )


def chain(n: int, mon: str = "godel") -> Algebra:
    """The ``n``-element chain ``0 < 1 < ... < n-1`` with ⊙ either ``min``
    (``"godel"``) or truncated addition (``"lukasiewicz"``)."""
    leq = [[x <= y for y in range(n)] for x in range(n)]
    top = n - 1
    if mon == "godel":
        table = [[min(x, y) for y in range(n)] for x in range(n)]
    elif mon == "lukasiewicz":
        table = [[max(0, x + y - top) for y in range(n)] for x in range(n)]
    else:
        raise ValueError(f"unknown chain monoid {mon!r}")
    names = [str(k) for k in range(n)]
    return validate(names, leq, table, name=f"{mon}_chain_{n}")


def trivial() -> Algebra:
    return validate(["0"], [[True]], [[0]], name="trivial")


def boolean_algebra() -> Algebra:
    return validate(["0", "1"], [[True, True], [False, True]], [[0, 0], [0, 1]], name="boolean_2")


def leq_from_covers(n: int, covers: Iterable[tuple[int, int]]) -> list[list[bool]]:
    leq = [[x == y for y in range(n)] for x in range(n)]
    for x, y in covers:
        leq[x][y] = True
    for k in range(n):
        for x in range(n):
            if leq[x][k]:
                row_k = leq[k]
                row_x = leq[x]
                for y in range(n):
                    if row_k[y]:
                        row_x[y] = True
    return leq
