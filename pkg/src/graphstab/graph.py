"""Presented graphs: a finite base multigraph plus attached infinite heads.

A :class:`PresentedGraph` denotes a countable directed graph.  Its base part
is finite; parallel edges are stored as a multiplicity, which is either a
positive integer or :data:`OMEGA` (countably many edges).  A vertex ``v``
listed in ``heads`` additionally carries a chain ``... -> (v,2) -> (v,1) -> v``
of infinitely many fresh vertices.

Vertices of the denoted graph are addressed either by their base id (a
string) or by a :class:`HeadVertex` ``(attach, index)`` with index >= 1,
where index 1 is the chain vertex adjacent to the base.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import UnknownVertexError, ValidationError

HEAD_MARK = "#"
PRIME_MARK = "'"


class _Omega:
    """Countably infinite multiplicity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Multiplicity = Union[int, _Omega]


def add_mult(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a + b


class HeadVertex(NamedTuple):
    attach: str
    index: int

    def __str__(self):
        return f"{self.attach}{HEAD_MARK}{self.index}"


Vertex = Union[str, HeadVertex]


def vertex_sort_key(v: Vertex):
    if isinstance(v, HeadVertex):
        return (1, v.attach, v.index)
    return (0, v, 0)


@dataclass(frozen=True, eq=False)
class PresentedGraph:
    """Finite presentation of a countable directed graph.

    ``edges`` is a sequence of ``(src, dst, mult)`` triples.  Duplicate pairs
    are kept as given so that :func:`validate` can report them; every other
    operation reads :attr:`mult`, where a later duplicate wins.
    """

    vertices: tuple = ()
    edges: tuple = ()
    heads: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = self.edges
        if isinstance(edges, Mapping):
            edges = [(s, d, m) for (s, d), m in edges.items()]
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((s, d, m) for s, d, m in edges))
        object.__setattr__(self, "heads", frozenset(self.heads))

    @cached_property
    def mult(self) -> dict:
        return {(s, d): m for s, d, m in self.edges}

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def successors(self) -> dict:
        """Base vertex -> {range vertex: multiplicity}."""
        out = {v: {} for v in self.vertices}
        for (s, d), m in self.mult.items():
            out.setdefault(s, {})[d] = m
        return out

    @cached_property
    def predecessors(self) -> dict:
        inc = {v: {} for v in self.vertices}
        for (s, d), m in self.mult.items():
            inc.setdefault(d, {})[s] = m
        return inc

    def canonical(self):
        edges = sorted(
            ((s, d, "omega" if m is OMEGA else m) for (s, d), m in self.mult.items()),
            key=lambda e: (e[0], e[1]),
        )
        return (tuple(sorted(self.vertices)), tuple(edges), tuple(sorted(self.heads)))

    def __eq__(self, other):
        if not isinstance(other, PresentedGraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        verts, edges, heads = self.canonical()
        return f"PresentedGraph(vertices={list(verts)}, edges={list(edges)}, heads={list(heads)})"

    def with_heads(self, heads: Iterable[str]) -> "PresentedGraph":
        return PresentedGraph(self.vertices, self.edges, frozenset(heads))


def validate(g: PresentedGraph) -> list:
    """Return every invariant violation of ``g``; an empty list means valid."""
    problems = []
    seen = set()
    for v in g.vertices:
        if not isinstance(v, str) or not v:
            problems.append(f"invalid vertex id {v!r}")
            continue
        if v in seen:
            problems.append(f"duplicate vertex id {v!r}")
        if HEAD_MARK in v:
            problems.append(f"vertex id {v!r} uses reserved character {HEAD_MARK!r}")
        seen.add(v)
    pairs = set()
    for s, d, m in g.edges:
        for end in (s, d):
            if end not in seen:
                problems.append(f"dangling endpoint {end!r} in edge ({s!r}, {d!r})")
        if (s, d) in pairs:
            problems.append(f"duplicate edge entry ({s!r}, {d!r})")
        pairs.add((s, d))
        if m is OMEGA:
            continue
        if isinstance(m, bool) or not isinstance(m, int):
            problems.append(f"invalid multiplicity {m!r} on edge ({s!r}, {d!r})")
        elif m < 1:
            problems.append(f"zero multiplicity on edge ({s!r}, {d!r})" if m == 0
                            else f"negative multiplicity {m} on edge ({s!r}, {d!r})")
    for h in sorted(g.heads, key=str):
        if h not in seen:
            problems.append(f"head flag on unknown vertex {h!r}")
    return problems


def check_valid(g: PresentedGraph) -> PresentedGraph:
    problems = validate(g)
    if problems:
        raise ValidationError(problems)
    return g


def check_vertex(g: PresentedGraph, v: Vertex) -> Vertex:
    if isinstance(v, HeadVertex):
        if v.attach not in g.heads or not isinstance(v.index, int) or v.index < 1:
            raise UnknownVertexError(f"unknown head vertex {v!s}")
        return v
    if isinstance(v, str) and v in g.vertex_set:
        return v
    raise UnknownVertexError(f"unknown vertex {v!r}")


def out_degree(g: PresentedGraph, v: Vertex) -> Multiplicity:
    check_vertex(g, v)
    if isinstance(v, HeadVertex):
        return 1
    total = 0
    for m in g.successors[v].values():
        total = add_mult(total, m)
    return total


def in_degree(g: PresentedGraph, v: Vertex) -> Multiplicity:
    check_vertex(g, v)
    if isinstance(v, HeadVertex):
        return 1
    total = 1 if v in g.heads else 0
    for m in g.predecessors[v].values():
        total = add_mult(total, m)
    return total


def is_singular(g: PresentedGraph, v: Vertex) -> bool:
    d = out_degree(g, v)
    return d is OMEGA or d == 0


def is_infinite_emitter(g: PresentedGraph, v: Vertex) -> bool:
    return out_degree(g, v) is OMEGA


def base_descendants(g: PresentedGraph, starts: Iterable[str]) -> set:
    """All base vertices reachable from ``starts`` (inclusive)."""
    seen = set(starts)
    todo = deque(seen)
    while todo:
        x = todo.popleft()
        for y in g.successors[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def base_ancestors(g: PresentedGraph, starts: Iterable[str]) -> set:
    seen = set(starts)
    todo = deque(seen)
    while todo:
        x = todo.popleft()
        for y in g.predecessors[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def shortest_base_path(g: PresentedGraph, src: str, dst: str):
    """BFS path from src to dst over base edges, ties broken by sorted ids."""
    parent = {src: None}
    todo = deque([src])
    while todo:
        x = todo.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in sorted(g.successors[x]):
            if y not in parent:
                parent[y] = x
                todo.append(y)
    return None


def reaches(g: PresentedGraph, src: Vertex, dst: Vertex) -> bool:
    """True iff there is a finite path from ``src`` to ``dst`` (reflexive)."""
    check_vertex(g, src)
    check_vertex(g, dst)
    if src == dst:
        return True
    if isinstance(dst, HeadVertex):
        # chain vertices only receive from higher chain vertices
        return (isinstance(src, HeadVertex) and src.attach == dst.attach
                and src.index > dst.index)
    if isinstance(src, HeadVertex):
        src = src.attach
    return dst in base_descendants(g, [src])


def strongly_connected_components(vertices, successors):
    """Tarjan's algorithm, iterative.  Components come out in reverse topological order."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    components = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(sorted(successors.get(root, ()))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(sorted(successors.get(nxt, ())))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = set()
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.add(x)
                    if x == node:
                        break
                components.append(frozenset(comp))
    return components


def vertices_on_loops(g: PresentedGraph) -> set:
    """Base vertices lying on a cycle.  Head vertices never do."""
    on_loops = set()
    for comp in strongly_connected_components(g.vertices, g.successors):
        if len(comp) > 1:
            on_loops |= comp
        else:
            (v,) = comp
            if v in g.successors[v]:
                on_loops.add(v)
    return on_loops


def sources(g: PresentedGraph) -> set:
    return {v for v in g.vertices if in_degree(g, v) == 0}


@dataclass(frozen=True)
class LeftSet:
    """Description of L(v), the set of vertices that reach v.

    Exactly one of ``vertices`` (finite case) and ``witness`` (a head-flagged
    base vertex reaching v, infinite case) is set.
    """

    finite: bool
    vertices: frozenset = None
    witness: str = None


def left_set_description(g: PresentedGraph, v: Vertex) -> LeftSet:
    check_vertex(g, v)
    if isinstance(v, HeadVertex):
        return LeftSet(finite=False, witness=v.attach)
    ancestors = base_ancestors(g, [v])
    headed = sorted(ancestors & g.heads)
    if headed:
        return LeftSet(finite=False, witness=headed[0])
    return LeftSet(finite=True, vertices=frozenset(ancestors))


def is_left_infinite(g: PresentedGraph, v: Vertex) -> bool:
    return not left_set_description(g, v).finite


def left_infinite_base(g: PresentedGraph) -> set:
    """Base vertices that are left infinite: exactly those below some head."""
    return base_descendants(g, g.heads)
