"""Random presented graphs for property checks and demos."""
from __future__ import annotations

import random

from .graph import OMEGA, PresentedGraph

MULTIPLICITIES = (1, 2, 3, OMEGA)


def random_graph(rng: random.Random, max_vertices: int = 8, edge_prob: float = None,
                 head_prob: float = 0.25, omega_weight: float = 0.15,
                 source_free: bool = False) -> PresentedGraph:
    """A random graph on 1..max_vertices base vertices named v0, v1, ...

    Edge density is drawn per graph unless ``edge_prob`` is given.  With
    ``source_free`` every vertex without an incoming edge gets one from a
    random vertex.
    """
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)]
    p = rng.uniform(0.05, 0.45) if edge_prob is None else edge_prob
    finite_weight = (1 - omega_weight) / 3
    weights = [finite_weight] * 3 + [omega_weight]
    mult = {}
    for a in names:
        for b in names:
            if rng.random() < p:
                mult[a, b] = rng.choices(MULTIPLICITIES, weights)[0]
    heads = {v for v in names if rng.random() < head_prob}
    if source_free:
        received = {b for _, b in mult} | heads
        for b in names:
            if b not in received:
                mult[rng.choice(names), b] = rng.choices(MULTIPLICITIES, weights)[0]
    return PresentedGraph(names, mult, heads)


def corpus(seed: int = 0, size: int = 1000, **kwargs) -> list:
    rng = random.Random(seed)
    return [random_graph(rng, **kwargs) for _ in range(size)]
