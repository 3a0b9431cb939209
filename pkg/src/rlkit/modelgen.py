"""Exhaustive generation of small residuated lattices and property mining.

Lattices are built as naturally labelled bounded posets (every element's
strict down-set is an order ideal of the earlier elements) and deduplicated
by a canonical relabelling. Residuated multiplications on a fixed lattice
are found by backtracking over the table entries of the middle elements; a
finite lattice admits all residua exactly when ⊙ is monotone and distributes
over binary joins, so that is what the search enforces.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .algebra import Algebra, classify, validate
from .errors import OrderCapExceeded, UnknownPredicate

ORDER_CAP = 8

Leq = tuple[tuple[bool, ...], ...]


# lattices ----------------------------------------------------------------------


def _ideals(down: list[int], k: int) -> Iterator[int]:
    """Order ideals of the poset on ``0..k-1`` that contain the bottom 0."""
    for sub in range(1 << (k - 1)):
        mask = 1 | (sub << 1)
        if all(down[i] & ~mask == 0 for i in range(1, k) if mask >> i & 1):
            yield mask


def _natural_posets(n: int) -> Iterator[list[int]]:
    """Strict down-set masks of naturally labelled posets with bottom 0 and top n-1."""
    down = [0] * n

    def rec(k: int):
        if k == n - 1:
            down[k] = (1 << (n - 1)) - 1
            yield list(down)
            return
        for ideal in _ideals(down, k):
            down[k] = ideal
            yield from rec(k + 1)

    if n == 1:
        yield [0]
    else:
        yield from rec(1)


def _leq_from_down(down: Sequence[int]) -> Leq:
    n = len(down)
    return tuple(tuple(x == y or bool(down[y] >> x & 1) for y in range(n)) for x in range(n))


def _is_lattice(leq: Leq) -> bool:
    n = len(leq)
    for x in range(n):
        for y in range(x + 1, n):
            ub = [z for z in range(n) if leq[x][z] and leq[y][z]]
            if not any(all(leq[u][w] for w in ub) for u in ub):
                return False
            lb = [z for z in range(n) if leq[z][x] and leq[z][y]]
            if not any(all(leq[w][u] for w in lb) for u in lb):
                return False
    return True


def _profile(leq: Leq, x: int) -> tuple:
    n = len(leq)
    below = sum(leq[u][x] for u in range(n))
    above = sum(leq[x][u] for u in range(n))
    lower = sum(1 for u in range(n) if u != x and leq[u][x]
                and not any(w not in (u, x) and leq[u][w] and leq[w][x] for w in range(n)))
    upper = sum(1 for u in range(n) if u != x and leq[x][u]
                and not any(w not in (u, x) and leq[x][w] and leq[w][u] for w in range(n)))
    return (_rank(leq, x), below, above, lower, upper)


def _rank(leq: Leq, x: int) -> int:
    n = len(leq)
    below = [u for u in range(n) if u != x and leq[u][x]]
    return 0 if not below else 1 + max(_rank(leq, u) for u in below)


def _class_permutations(keys: Sequence) -> Iterator[tuple[int, ...]]:
    """Relabellings ``p`` (old → new) that list elements in ``keys`` order,
    permuting freely inside each class of equal keys."""
    n = len(keys)
    order = sorted(range(n), key=lambda x: keys[x])
    groups = []
    for x in order:
        if groups and keys[groups[-1][0]] == keys[x]:
            groups[-1].append(x)
        else:
            groups.append([x])
    for choice in product(*(permutations(g) for g in groups)):
        seq = [x for g in choice for x in g]
        p = [0] * n
        for new, old in enumerate(seq):
            p[old] = new
        yield tuple(p)


def _relabel_leq(leq: Leq, p: Sequence[int]) -> Leq:
    n = len(leq)
    inv = [0] * n
    for old, new in enumerate(p):
        inv[new] = old
    return tuple(tuple(leq[inv[a]][inv[b]] for b in range(n)) for a in range(n))


def canonical_lattice(leq: Leq) -> Leq:
    """Least relabelling (as a 0/1 string) among profile-respecting relabellings."""
    keys = [_profile(leq, x) for x in range(len(leq))]
    return min((_relabel_leq(leq, p) for p in _class_permutations(keys)), key=_leq_key)


def _leq_key(leq: Leq) -> tuple:
    return tuple(v for row in leq for v in row)


def _check_order(n: int) -> None:
    if not 1 <= n <= ORDER_CAP:
        raise OrderCapExceeded(f"order must be between 1 and {ORDER_CAP}, got {n}")


@lru_cache(maxsize=None)
def enumerate_lattices(n: int) -> tuple[Leq, ...]:
    """All bounded lattices of order ``n`` up to isomorphism.

    Each is returned as a ``leq`` matrix with bottom 0, top n-1 and a
    natural labelling (x ≤ y implies x's index ≤ y's index).
    """
    _check_order(n)
    seen = set()
    for down in _natural_posets(n):
        leq = _leq_from_down(down)
        if _is_lattice(leq):
            seen.add(canonical_lattice(leq))
    return tuple(sorted(seen, key=_leq_key))


def lattice_automorphisms(leq: Leq) -> list[tuple[int, ...]]:
    """Order automorphisms, searched within classes of equal profile."""
    n = len(leq)
    keys = [_profile(leq, x) for x in range(n)]
    groups: dict = {}
    for x in range(n):
        groups.setdefault(keys[x], []).append(x)
    classes = list(groups.values())
    out = []
    for choice in product(*(permutations(g) for g in classes)):
        p = [0] * n
        for g, img in zip(classes, choice):
            for x, y in zip(g, img):
                p[x] = y
        if all(leq[x][y] == leq[p[x]][p[y]] for x in range(n) for y in range(n)):
            out.append(tuple(p))
    return out


# residuations -------------------------------------------------------------------


def _meet_join(leq: Leq):
    n = len(leq)
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ub = [z for z in range(n) if leq[x][z] and leq[y][z]]
            join[x][y] = next(u for u in ub if all(leq[u][w] for w in ub))
            lb = [z for z in range(n) if leq[z][x] and leq[z][y]]
            meet[x][y] = next(u for u in lb if all(leq[w][u] for w in lb))
    return join, meet


def residuated_tables(leq: Leq) -> list[tuple[tuple[int, ...], ...]]:
    """Every commutative, associative, monotone ⊙ with unit top that
    distributes over ∨ (hence is residuated), before isomorphism reduction."""
    n = len(leq)
    bot, top = 0, n - 1
    if n == 1:
        return [((0,),)]
    join, meet = _meet_join(leq)
    m = [[-1] * n for _ in range(n)]
    for x in range(n):
        m[bot][x] = m[x][bot] = bot
        m[top][x] = m[x][top] = x
    mids = list(range(1, n - 1))
    cells = [(x, y) for x in mids for y in mids if x <= y]
    below = [[z for z in range(n) if leq[z][v]] for v in range(n)]
    out = []

    def ok_mono(x, y, v):
        for a in range(n):
            for b in range(n):
                w = m[a][b]
                if w < 0:
                    continue
                if leq[a][x] and leq[b][y] and not leq[w][v]:
                    return False
                if leq[x][a] and leq[y][b] and not leq[v][w]:
                    return False
        return True

    def ok_distrib(x, y):
        # every distributivity instance now fully determined and touching (x, y)
        for a in (x, y):
            for b in range(n):
                for c in range(n):
                    r1, r2, r3 = m[a][join[b][c]], m[a][b], m[a][c]
                    if r1 >= 0 and r2 >= 0 and r3 >= 0 and r1 != join[r2][r3]:
                        return False
        return True

    def ok_assoc():
        for a in mids:
            for b in mids:
                ab = m[a][b]
                if ab < 0:
                    continue
                for c in mids:
                    bc = m[b][c]
                    if bc < 0:
                        continue
                    l, r = m[ab][c], m[a][bc]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in m))
            return
        x, y = cells[k]
        for v in below[meet[x][y]]:
            if not ok_mono(x, y, v):
                continue
            m[x][y] = m[y][x] = v
            if ok_distrib(x, y) and ok_assoc():
                rec(k + 1)
            m[x][y] = m[y][x] = -1

    rec(0)
    return out


def _relabel_table(t, p: Sequence[int]):
    n = len(t)
    inv = [0] * n
    for old, new in enumerate(p):
        inv[new] = old
    return tuple(tuple(p[t[inv[a]][inv[b]]] for b in range(n)) for a in range(n))


def element_names(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    letters = "abcdefghijklmnopqrstuvwxyz"
    return ["0"] + [letters[k] for k in range(n - 2)] + ["1"]


def enumerate_residuations(leq: Leq, *, name_prefix: Optional[str] = None) -> list[Algebra]:
    """All residuated lattices on the lattice ``leq`` up to isomorphism."""
    leq = tuple(tuple(bool(v) for v in row) for row in leq)
    n = len(leq)
    auts = lattice_automorphisms(leq) if n > 1 else [(0,)]
    reps = {}
    for t in residuated_tables(leq):
        key = min(_relabel_table(t, p) for p in auts)
        reps.setdefault(key, key)
    names = element_names(n)
    prefix = f"rl{n}" if name_prefix is None else name_prefix
    out = []
    for k, t in enumerate(sorted(reps)):
        out.append(validate(names, leq, t, name=f"{prefix}_{k}", source="generated"))
    return out


@lru_cache(maxsize=None)
def enumerate_algebras(n: int) -> tuple[Algebra, ...]:
    """All residuated lattices of order ``n`` up to isomorphism, in a fixed order."""
    _check_order(n)
    out = []
    for li, leq in enumerate(enumerate_lattices(n)):
        out.extend(enumerate_residuations(leq, name_prefix=f"rl{n}_{li}"))
    return tuple(out)


def algebras_up_to(max_order: int) -> Iterator[Algebra]:
    for n in range(1, max_order + 1):
        yield from enumerate_algebras(n)


# mining -----------------------------------------------------------------------

FILTER_ATOMS = ("proper", "prime", "maximal", "pseudo_irreducible", "blp", "radical", "trivial")
ALGEBRA_ATOMS = (
    "semi_g", "godel", "involution", "mtl", "de_morgan", "stonean", "weak_mtl",
    "directly_indecomposable", "local", "tprd", "rad_blp", "max_clopen", "connected", "boolean",
    "all_blp",
)
QUANTIFIERS = ("exists_filter", "all_filters")


def _check_expr(node: ast.AST, atoms: Sequence[str], allow_calls: bool) -> None:
    if isinstance(node, ast.BoolOp):
        for v in node.values:
            _check_expr(v, atoms, allow_calls)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
        _check_expr(node.operand, atoms, allow_calls)
    elif isinstance(node, ast.Name):
        if node.id not in atoms:
            kind = "algebra" if allow_calls else "filter"
            raise UnknownPredicate(f"unknown {kind} predicate {node.id!r}; known: {', '.join(atoms)}")
    elif isinstance(node, ast.Call) and allow_calls:
        if not isinstance(node.func, ast.Name) or node.func.id not in QUANTIFIERS:
            raise UnknownPredicate(f"unknown function; use {' or '.join(QUANTIFIERS)}")
        if len(node.args) != 1 or node.keywords:
            raise UnknownPredicate(f"{node.func.id} takes exactly one filter expression")
        _check_expr(node.args[0], FILTER_ATOMS, False)
    elif isinstance(node, ast.Constant) and isinstance(node.value, bool):
        pass
    else:
        raise UnknownPredicate(f"unsupported syntax in query: {ast.dump(node)[:60]}")


def parse_query(text: str) -> ast.Expression:
    try:
        tree = ast.parse(text.replace("∧", " and ").replace("¬", " not ").replace("∨", " or ").strip(), mode="eval")
    except SyntaxError as exc:
        raise UnknownPredicate(f"cannot parse query {text!r}: {exc.msg}") from None
    _check_expr(tree.body, ALGEBRA_ATOMS, True)
    return tree


@dataclass
class ModelQuery:
    max_order: int
    where: str
    limit: Optional[int] = None
    min_order: int = 1

    def __post_init__(self):
        _check_order(self.max_order)
        self.tree = parse_query(self.where)


@dataclass
class Hit:
    algebra: Algebra
    witness: dict = field(default_factory=dict)


class _Evaluator:
    def __init__(self, A: Algebra):
        self.A = A
        self.witness: dict = {}
        self._report = None
        self._flon = None

    @property
    def report(self):
        if self._report is None:
            self._report = classify(self.A)
        return self._report

    def algebra_atom(self, name: str) -> bool:
        from .filters import filter_lattice, has_blp, is_local
        from .radicals import has_tprd, radical_of_algebra
        from .spectrum import build_spectrum, max_clopen_check

        A = self.A
        if name in self.report.flags():
            val = self.report.flags()[name]
            if not val:
                self.witness.setdefault(name, A.fmt(*self.report.witness(name)))
            return val
        if name == "local":
            return is_local(A)
        if name == "tprd":
            return bool(has_tprd(A))
        if name == "rad_blp":
            return has_blp(radical_of_algebra(A))
        if name == "max_clopen":
            return max_clopen_check(A)
        if name == "connected":
            return build_spectrum(A, "spec").is_connected()
        if name == "boolean":
            return len(A.boolean) == A.order
        if name == "all_blp":
            return all(has_blp(F) for F in filter_lattice(A))
        raise UnknownPredicate(name)

    def filter_atom(self, F, name: str) -> bool:
        from .filters import is_prime, has_blp, is_maximal, is_pseudo_irreducible
        from .radicals import rad

        if name == "proper":
            return F.is_proper
        if name == "trivial":
            return F.mask == 1 << self.A.top
        if name == "prime":
            return is_prime(F)
        if name == "maximal":
            return is_maximal(F)
        if name == "pseudo_irreducible":
            return F.is_proper and is_pseudo_irreducible(F)
        if name == "blp":
            return has_blp(F)
        if name == "radical":
            return rad(F) == F
        raise UnknownPredicate(name)

    def eval(self, node, F=None) -> bool:
        if isinstance(node, ast.BoolOp):
            if isinstance(node.op, ast.And):
                return all(self.eval(v, F) for v in node.values)
            return any(self.eval(v, F) for v in node.values)
        if isinstance(node, ast.UnaryOp):
            return not self.eval(node.operand, F)
        if isinstance(node, ast.Constant):
            return bool(node.value)
        if isinstance(node, ast.Name):
            return self.algebra_atom(node.id) if F is None else self.filter_atom(F, node.id)
        if isinstance(node, ast.Call):
            from .filters import filter_lattice

            label = ast.unparse(node)
            inner = node.args[0]
            if node.func.id == "exists_filter":
                for G in filter_lattice(self.A):
                    if self.eval(inner, G):
                        self.witness.setdefault(label, G.names())
                        return True
                return False
            for G in filter_lattice(self.A):
                if not self.eval(inner, G):
                    self.witness.setdefault(f"not {label}", G.names())
                    return False
            return True
        raise UnknownPredicate(ast.dump(node))


def evaluate(A: Algebra, where: str) -> tuple[bool, dict]:
    """Evaluate a query on one algebra; returns the verdict and witnesses."""
    ev = _Evaluator(A)
    return ev.eval(parse_query(where).body), ev.witness


def iter_mine(query: ModelQuery) -> Iterator[Hit]:
    found = 0
    for n in range(query.min_order, query.max_order + 1):
        for A in enumerate_algebras(n):
            ev = _Evaluator(A)
            if ev.eval(query.tree.body):
                yield Hit(A, ev.witness)
                found += 1
                if query.limit is not None and found >= query.limit:
                    return


def mine(query: ModelQuery) -> list[Hit]:
    return list(iter_mine(query))


def write_hit(hit: Hit, k: int, directory) -> Path:
    """Write one hit as ``{k:04d}_{name}.rl`` under ``directory``."""
    from .document import serialize

    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    p = root / f"{k:04d}_{hit.algebra.name}.rl"
    p.write_text(serialize(hit.algebra), encoding="utf-8")
    return p


def write_catalog(hits, directory) -> list[Path]:
    """Write one ``.rl`` document per hit; returns the paths."""
    return [write_hit(hit, k, directory) for k, hit in enumerate(hits)]
