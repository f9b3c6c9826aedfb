"""Stabilisation by attaching heads."""
from __future__ import annotations

from .graph import PresentedGraph, check_vertex, left_infinite_base


def add_head(g: PresentedGraph, v: str) -> PresentedGraph:
    """Attach an infinite chain ``... -> (v,2) -> (v,1) -> v``.  Idempotent."""
    if not isinstance(v, str):
        raise TypeError("heads attach to base vertices")
    check_vertex(g, v)
    return g.with_heads(g.heads | {v})


def stabilize_graph(g: PresentedGraph) -> PresentedGraph:
    """Head on every base vertex; its algebra is the stabilisation of the original."""
    return g.with_heads(g.vertices)


def stabilize_minimal(g: PresentedGraph) -> PresentedGraph:
    """Heads only on the vertices that are left finite in ``g``.

    Computed in one pass against the original graph, so the head set is not
    always the smallest possible: a head placed upstream can already make a
    downstream vertex left infinite.
    """
    infinite = left_infinite_base(g)
    return g.with_heads(g.heads | {v for v in g.vertices if v not in infinite})
