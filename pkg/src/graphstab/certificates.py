"""Comparison certificates: finite proofs that p_V is subequivalent to p_W.

Two kinds of step are allowed.

``Reach(target, source, path)``
    ``path`` runs from ``source`` to ``target``, so ``p_target <~ p_source``.

``Split(vertex, children)``
    ``vertex`` emits finitely many (and at least one) edges; one child per
    edge instance proves ``p_range <~ ...``.  The Cuntz-Krieger sum relation
    gives ``p_vertex <~ sum of p_range``.

Leaf sources must be pairwise distinct so that the dominating projections
are orthogonal, and must avoid the forbidden set recorded at the root.
:func:`verify_certificate` rechecks all of this against the graph and never
trusts the producer.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import CaseIIUnsupported, GraphError
from .graph import (
    OMEGA,
    HeadVertex,
    PresentedGraph,
    Vertex,
    base_ancestors,
    check_vertex,
    left_infinite_base,
    out_degree,
    shortest_base_path,
    vertex_sort_key,
)
from .hereditary import VertexSet, saturation_stages


@dataclass(frozen=True)
class Reach:
    target: Vertex
    source: Vertex
    path: tuple


@dataclass(frozen=True)
class Split:
    vertex: Vertex
    children: tuple


Proof = Union[Reach, Split]


@dataclass(frozen=True)
class ComparisonCertificate:
    dominated: tuple        # V
    dominating: tuple       # W, in leaf order
    avoid: tuple            # W must miss these
    proofs: tuple           # one proof per dominated vertex


def leaves(proof: Proof):
    if isinstance(proof, Reach):
        yield proof
    else:
        for child in proof.children:
            yield from leaves(child)


def _emitted(g: PresentedGraph, v: Vertex) -> list:
    """Range of every edge instance leaving v, in deterministic order."""
    if isinstance(v, HeadVertex):
        return [v.attach if v.index == 1 else HeadVertex(v.attach, v.index - 1)]
    out = []
    for w in sorted(g.successors[v]):
        m = g.successors[v][w]
        if m is OMEGA:
            raise GraphError(f"{v!r} is an infinite emitter")
        out.extend([w] * m)
    return out


def _is_edge(g: PresentedGraph, a: Vertex, b: Vertex) -> bool:
    if isinstance(a, HeadVertex):
        return b == (a.attach if a.index == 1 else HeadVertex(a.attach, a.index - 1))
    if isinstance(b, HeadVertex):
        return False
    return b in g.successors.get(a, {})


class _Builder:
    def __init__(self, g: PresentedGraph):
        self.g = g
        self.infinite = left_infinite_base(g)
        self.stage = saturation_stages(g, VertexSet(self.infinite))

    def fresh_source(self, v: Vertex, avoid: set) -> Reach:
        g = self.g
        if isinstance(v, HeadVertex):
            u, floor = v.attach, v.index
        else:
            u = min(h for h in g.heads if h in base_ancestors(g, [v]))
            floor = 1
        taken = [w.index for w in avoid if isinstance(w, HeadVertex) and w.attach == u]
        i = max([floor] + [k + 1 for k in taken])
        chain = [HeadVertex(u, k) for k in range(i, 0, -1)]
        if isinstance(v, HeadVertex):
            path = chain[: i - v.index + 1]
        else:
            path = chain + shortest_base_path(g, u, v)
        return Reach(v, HeadVertex(u, i), tuple(path))

    def build(self, v: Vertex, avoid: set) -> Proof:
        if isinstance(v, HeadVertex) or v in self.infinite:
            return self.fresh_source(v, avoid)
        if v not in self.stage:
            raise CaseIIUnsupported(
                f"{v!r} is outside the saturation of the left-infinite vertices")
        children = []
        for w in _emitted(self.g, v):
            child = self.build(w, avoid)
            avoid |= {leaf.source for leaf in leaves(child)}
            children.append(child)
        return Split(v, tuple(children))


def find_witness_single(g: PresentedGraph, v: Vertex,
                        avoid: Iterable[Vertex] = ()) -> ComparisonCertificate:
    """Finite W missing ``avoid`` with p_v <~ sum of p_w over W."""
    check_vertex(g, v)
    avoid = frozenset(avoid)
    for a in avoid:
        check_vertex(g, a)
    proof = _Builder(g).build(v, set(avoid))
    W = tuple(leaf.source for leaf in leaves(proof))
    return ComparisonCertificate((v,), W, _sorted(avoid), (proof,))


def find_witness_set(g: PresentedGraph, V: Iterable[Vertex]) -> ComparisonCertificate:
    """Finite W disjoint from V with sum over V <~ sum over W, one vertex at a time."""
    V = _sorted(set(V))
    for v in V:
        check_vertex(g, v)
    builder = _Builder(g)
    avoid = set(V)
    proofs = []
    for v in V:
        proof = builder.build(v, set(avoid))
        avoid |= {leaf.source for leaf in leaves(proof)}
        proofs.append(proof)
    W = tuple(leaf.source for p in proofs for leaf in leaves(p))
    return ComparisonCertificate(V, W, V, tuple(proofs))


def _sorted(vs) -> tuple:
    return tuple(sorted(vs, key=vertex_sort_key))


def _well_formed(g, v) -> bool:
    try:
        check_vertex(g, v)
    except GraphError:
        return False
    return True


def _check_proof(g: PresentedGraph, proof, target, trail: list) -> bool:
    if isinstance(proof, Reach):
        if proof.target != target:
            trail.append(f"leaf proves {proof.target!r}, expected {target!r}")
            return False
        path = list(proof.path)
        if not path or path[0] != proof.source or path[-1] != proof.target:
            trail.append(f"path for {target!r} does not run from its source to its target")
            return False
        if not all(_well_formed(g, x) for x in path):
            trail.append(f"path for {target!r} uses an unknown vertex")
            return False
        for a, b in zip(path, path[1:]):
            if not _is_edge(g, a, b):
                trail.append(f"no edge {a!r} -> {b!r}")
                return False
        return True
    if isinstance(proof, Split):
        v = proof.vertex
        if v != target:
            trail.append(f"split on {v!r}, expected {target!r}")
            return False
        if not _well_formed(g, v):
            trail.append(f"split on unknown vertex {v!r}")
            return False
        d = out_degree(g, v)
        if d is OMEGA or d == 0:
            trail.append(f"split on singular vertex {v!r}")
            return False
        ranges = _emitted(g, v)
        if len(proof.children) != len(ranges):
            trail.append(f"split on {v!r} has {len(proof.children)} children, needs {len(ranges)}")
            return False
        got = Counter(_child_target(c) for c in proof.children)
        if got != Counter(ranges):
            trail.append(f"split on {v!r} does not match its edges")
            return False
        return all(_check_proof(g, c, _child_target(c), trail) for c in proof.children)
    trail.append(f"unknown proof node {proof!r}")
    return False


def _child_target(proof):
    return proof.target if isinstance(proof, Reach) else getattr(proof, "vertex", None)


def verify_certificate(g: PresentedGraph, cert: ComparisonCertificate, trail: list = None) -> bool:
    """Recheck every step of ``cert`` against ``g``.  Reasons for rejection go to ``trail``."""
    trail = [] if trail is None else trail
    if len(cert.proofs) != len(cert.dominated):
        trail.append("one proof per dominated vertex required")
        return False
    if len(set(cert.dominated)) != len(cert.dominated):
        trail.append("dominated vertices repeat")
        return False
    for v, proof in zip(cert.dominated, cert.proofs):
        if not _check_proof(g, proof, v, trail):
            return False
    sources = [leaf.source for p in cert.proofs for leaf in leaves(p)]
    if len(set(sources)) != len(sources):
        trail.append("leaf sources are not pairwise distinct")
        return False
    if tuple(sources) != tuple(cert.dominating):
        trail.append("recorded W differs from the leaf sources")
        return False
    clash = set(sources) & set(cert.avoid)
    if clash:
        trail.append(f"W meets the avoided set at {_sorted(clash)}")
        return False
    return True
