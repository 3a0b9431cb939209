"""Stone topology on the prime and maximal spectra.

Point sets are frozensets of point indices into ``Spectrum.points``. Closed
sets are materialised: every closed set is ``V(F)`` for some filter ``F``
because ``V(X) = V([X))``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Union

from .algebra import Algebra
from .filters import FilterSet, filter_lattice, generated_filter

PointSet = frozenset


class Spectrum:
    def __init__(self, algebra: Algebra, variant: str = "spec"):
        if variant not in ("spec", "max"):
            raise ValueError("variant must be 'spec' or 'max'")
        FL = filter_lattice(algebra)
        self.algebra = algebra
        self.variant = variant
        self.points: tuple[FilterSet, ...] = FL.prime if variant == "spec" else FL.maximal
        self.closed_family: frozenset = frozenset(self.v_of(F) for F in FL) | {frozenset()}

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"<Spectrum {self.variant} of {self.algebra!r}: {len(self.points)} points>"

    @property
    def everything(self) -> PointSet:
        return frozenset(range(len(self.points)))

    def v_of(self, X: Union[FilterSet, Iterable[int]]) -> PointSet:
        """``V(X) = {P : X ⊆ P}`` as a set of point indices."""
        if isinstance(X, FilterSet):
            mask = X.mask
        else:
            mask = 0
            for x in X:
                mask |= 1 << self.algebra.check(x)
        return frozenset(k for k, P in enumerate(self.points) if mask & ~P.mask == 0)

    def point_filters(self, S: PointSet) -> list[FilterSet]:
        return [self.points[k] for k in sorted(S)]

    def is_closed(self, S: PointSet) -> bool:
        return frozenset(S) in self.closed_family

    def is_open(self, S: PointSet) -> bool:
        return self.everything - frozenset(S) in self.closed_family

    def clopen_sets(self) -> set:
        return {C for C in self.closed_family if self.is_open(C)}

    def is_connected_subspace(self, Y: PointSet) -> bool:
        """No subset of ``Y`` other than ∅ and ``Y`` is clopen in the trace topology."""
        Y = frozenset(Y)
        traces = {C & Y for C in self.closed_family}
        return not any(T and T != Y and (Y - T) in traces for T in traces)

    def is_connected(self) -> bool:
        return self.is_connected_subspace(self.everything)

    @cached_property
    def boolean_clopens(self) -> set:
        return {self.v_of([e]) for e in self.algebra.boolean.elements}

    def closure(self, S: PointSet) -> PointSet:
        S = frozenset(S)
        return min((C for C in self.closed_family if S <= C), key=len)

    def to_dot(self) -> str:
        """Graphviz rendering of the specialization order (``P → Q`` when ``Q`` covers ``P``)."""
        A = self.algebra
        label = lambda P: "{" + ",".join(A.names[x] for x in P) + "}"
        lines = [f'digraph "{A.name or "L"}_{self.variant}" {{']
        for k, P in enumerate(self.points):
            lines.append(f'  p{k} [label="{label(P)}"];')
        for i, P in enumerate(self.points):
            for j, Q in enumerate(self.points):
                if P < Q and not any(P < R < Q for R in self.points):
                    lines.append(f"  p{i} -> p{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_spectrum(algebra: Algebra, variant: str = "spec") -> Spectrum:
    key = ("spectrum", variant)
    if key not in algebra._cache:
        algebra._cache[key] = Spectrum(algebra, variant)
    return algebra._cache[key]


def v_of(algebra: Algebra, X, variant: str = "spec") -> PointSet:
    return build_spectrum(algebra, variant).v_of(X)


def clopen_sets(spectrum: Spectrum) -> set:
    return spectrum.clopen_sets()


def max_clopen_check(algebra: Algebra) -> bool:
    """Clopen sets of the maximal spectrum are exactly the ``V_Max(e)``, e Boolean."""
    sp = build_spectrum(algebra, "max")
    return sp.clopen_sets() == sp.boolean_clopens


def generated_v(algebra: Algebra, X: Iterable[int], variant: str = "spec") -> PointSet:
    """``V([X))``, which must equal ``V(X)``."""
    return build_spectrum(algebra, variant).v_of(generated_filter(algebra, X))
