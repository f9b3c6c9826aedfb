"""Hereditary and saturated vertex sets, breaking vertices, quotient graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import EnumerationBoundError, PreconditionError, UnknownVertexError
from .graph import (
    OMEGA,
    PRIME_MARK,
    HeadVertex,
    PresentedGraph,
    Vertex,
    add_mult,
    base_descendants,
    out_degree,
)


class _All:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL"

    def __reduce__(self):
        return (_All, ())


ALL = _All()
"""Head portion covering the entire chain.  A positive int k means the prefix (v,1..k)."""


@dataclass(frozen=True, eq=False)
class VertexSet:
    """A subset of the vertices of a presented graph.

    ``base`` holds base vertex ids.  ``heads`` maps a head-flagged vertex to
    the part of its chain included: an int ``k`` for ``(v,1), ..., (v,k)`` or
    :data:`ALL`.  Missing keys mean none of the chain.
    """

    base: frozenset = frozenset()
    heads: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        portions = {}
        for v, p in dict(self.heads).items():
            if p is None or p == 0:
                continue
            if p is not ALL and (isinstance(p, bool) or not isinstance(p, int) or p < 0):
                raise ValueError(f"bad head portion {p!r} at {v!r}")
            portions[v] = p
        object.__setattr__(self, "heads", portions)

    def __contains__(self, v: Vertex) -> bool:
        if isinstance(v, HeadVertex):
            p = self.heads.get(v.attach)
            return p is ALL or (p is not None and v.index <= p)
        return v in self.base

    def _key(self):
        return (tuple(sorted(self.base)),
                tuple(sorted((v, -1 if p is ALL else p) for v, p in self.heads.items())))

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        heads = {v: p for v, p in sorted(self.heads.items())}
        return f"VertexSet(base={sorted(self.base)}, heads={heads})"

    def __len__(self):
        """Number of base vertices; head portions are not counted."""
        return len(self.base)

    def issubset(self, other: "VertexSet") -> bool:
        if not self.base <= other.base:
            return False
        for v, p in self.heads.items():
            q = other.heads.get(v)
            if q is None:
                return False
            if q is not ALL and (p is ALL or p > q):
                return False
        return True


EMPTY = VertexSet()


def vertex_set(base: Iterable[str] = (), heads: Mapping | None = None) -> VertexSet:
    return VertexSet(frozenset(base), heads or {})


def _check_set(g: PresentedGraph, X: VertexSet):
    for v in X.base:
        if v not in g.vertex_set:
            raise UnknownVertexError(f"unknown vertex {v!r} in vertex set")
    for v in X.heads:
        if v not in g.heads:
            raise UnknownVertexError(f"head portion at {v!r}, which carries no head")


def is_hereditary(g: PresentedGraph, X: VertexSet) -> bool:
    _check_set(g, X)
    for v in X.base:
        if any(w not in X.base for w in g.successors[v]):
            return False
    # chain edges point down towards the attach vertex
    return all(v in X.base for v in X.heads)


def hereditary_closure(g: PresentedGraph, X: VertexSet) -> VertexSet:
    _check_set(g, X)
    base = base_descendants(g, set(X.base) | set(X.heads))
    return VertexSet(base, X.heads)


def _require_hereditary(g, H):
    if not is_hereditary(g, H):
        raise PreconditionError(f"{H!r} is not hereditary")


def is_saturated(g: PresentedGraph, H: VertexSet) -> bool:
    _require_hereditary(g, H)
    for v in g.vertices:
        if v in H.base:
            continue
        d = out_degree(g, v)
        if d is not OMEGA and d > 0 and all(w in H.base for w in g.successors[v]):
            return False
    # (v,k+1) emits only into (v,k) / v, so an attach vertex in H drags in its chain
    return all(H.heads.get(v) is ALL for v in H.base & g.heads)


def saturation_stages(g: PresentedGraph, H: VertexSet) -> dict:
    """Run the inductive saturation from ``H``.

    Returns ``{base vertex: n}`` where n is the first stage H_n containing the
    vertex.  Head chains are not listed; a chain is absorbed as soon as its
    attach vertex enters.
    """
    _require_hereditary(g, H)
    stage = {v: 0 for v in H.base}
    n = 0
    while True:
        n += 1
        fresh = []
        for v in g.vertices:
            if v in stage:
                continue
            d = out_degree(g, v)
            if d is OMEGA or d == 0:
                continue
            if all(w in stage for w in g.successors[v]):
                fresh.append(v)
        if not fresh:
            return stage
        for v in fresh:
            stage[v] = n


def saturate(g: PresentedGraph, H: VertexSet) -> VertexSet:
    base = set(saturation_stages(g, H))
    return VertexSet(base, {v: ALL for v in base & g.heads})


def _require_saturated(g, H):
    if not is_saturated(g, H):
        raise PreconditionError(f"{H!r} is not saturated hereditary")


def breaking_vertices(g: PresentedGraph, H: VertexSet) -> set:
    _require_saturated(g, H)
    found = set()
    for v in g.vertices:
        if out_degree(g, v) is not OMEGA:
            continue
        outside = 0
        for w, m in g.successors[v].items():
            if w not in H.base:
                outside = add_mult(outside, m)
        if outside is not OMEGA and outside > 0:
            found.add(v)
    return found


def _fresh_names(g: PresentedGraph, vs: Iterable[str]) -> dict:
    taken = set(g.vertices)
    names = {}
    for v in sorted(vs):
        name = v + PRIME_MARK
        while name in taken:
            name += PRIME_MARK
        taken.add(name)
        names[v] = name
    return names


def prime_names(g: PresentedGraph, H: VertexSet, S: Iterable[str] = ()) -> dict:
    """Map each breaking vertex v outside S to the id of its copy v' in the quotient.

    The copy is named ``v + "'"``, with further marks appended on collision.
    """
    S = set(S)
    breaking = breaking_vertices(g, H)
    if not S <= breaking:
        raise PreconditionError(f"S contains non-breaking vertices {sorted(S - breaking)}")
    return _fresh_names(g, breaking - S)


def quotient_graph(g: PresentedGraph, H: VertexSet, S: Iterable[str] = ()) -> PresentedGraph:
    """The quotient graph for the admissible pair (H, S).

    Vertices of H are deleted together with every edge into them; each
    breaking vertex v not in S gets a fresh sink copy v' that receives a
    duplicate of every surviving edge into v.
    """
    primes = prime_names(g, H, S)
    keep = [v for v in g.vertices if v not in H.base]
    edges = []
    for (s, d), m in g.mult.items():
        if d in H.base:
            continue
        edges.append((s, d, m))
        if d in primes:
            edges.append((s, primes[d], m))
    vertices = keep + [primes[v] for v in sorted(primes)]
    heads = g.heads - H.base
    return PresentedGraph(vertices, edges, heads)


def enumerate_saturated_hereditary(g: PresentedGraph, bound: int = 12) -> list:
    """Every saturated hereditary subset, smallest first."""
    n = len(g.vertices)
    if n > bound:
        raise EnumerationBoundError(f"{n} base vertices exceeds enumeration bound {bound}")
    order = sorted(g.vertices)
    found = []
    for size in range(n + 1):
        for combo in combinations(order, size):
            base = frozenset(combo)
            H = VertexSet(base, {v: ALL for v in base & g.heads})
            if is_hereditary(g, H) and is_saturated(g, H):
                found.append(H)
    return found


def quotient_is_unital(g: PresentedGraph, H: VertexSet, S: Iterable[str] = ()) -> bool:
    """Whether the quotient graph has finitely many vertices."""
    q = quotient_graph(g, H, S)
    return not q.heads
