"""Graph traces as exact rational data.

A graph trace assigns a nonnegative number to every vertex so that each
non-singular vertex carries the sum over its emitted edges and each infinite
emitter dominates every finite partial sum.  With multiplicities this
compiles to finitely many linear constraints:

* ``g(v) == sum m(v,w) g(w)`` for ``0 < out_degree(v) < OMEGA``;
* ``g(w) == 0`` whenever some edge into ``w`` has multiplicity OMEGA
  (n copies of that edge give ``n g(w) <= g(source)`` for every n);
* ``g(v) >= sum m(v,w) g(w)`` over the finite-multiplicity targets of an
  infinite emitter ``v``.

Every chain vertex of a head attached at ``v`` carries ``g(v)``, so a head
contributes infinitely many copies of ``g(v)`` to the norm.  Bounded traces
therefore vanish on head-flagged vertices.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import PreconditionError
from .graph import OMEGA, HeadVertex, PresentedGraph, Vertex, out_degree
from .hereditary import ALL, VertexSet, breaking_vertices, prime_names, quotient_graph
from .lp import OPTIMAL, linprog, rank

INFINITE = math.inf


@dataclass(frozen=True, eq=False)
class GraphTrace:
    """Exact nonnegative values on base vertices; chain vertices inherit their attach value."""

    values: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {v: Fraction(x) for v, x in dict(self.values).items()})

    def __getitem__(self, v: Vertex) -> Fraction:
        if isinstance(v, HeadVertex):
            v = v.attach
        return self.values[v]

    def __eq__(self, other):
        if not isinstance(other, GraphTrace):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))

    def __repr__(self):
        inner = ", ".join(f"{v!r}: {x}" for v, x in sorted(self.values.items()))
        return f"GraphTrace({{{inner}}})"

    def scaled(self, factor) -> "GraphTrace":
        return GraphTrace({v: x * factor for v, x in self.values.items()})


def _require_assignment(g: PresentedGraph, t: GraphTrace):
    missing = [v for v in g.vertices if v not in t.values]
    if missing:
        raise PreconditionError(f"trace assigns no value to {sorted(missing)}")


def is_graph_trace(g: PresentedGraph, t: GraphTrace) -> bool:
    """Check both trace conditions; boundedness is not part of this test."""
    _require_assignment(g, t)
    if any(t.values[v] < 0 for v in g.vertices):
        return False
    for v in g.vertices:
        succ = g.successors[v]
        if not succ:
            continue
        finite_sum = sum((m * t.values[w] for w, m in succ.items() if m is not OMEGA),
                         Fraction(0))
        if out_degree(g, v) is OMEGA:
            if any(t.values[w] != 0 for w, m in succ.items() if m is OMEGA):
                return False
            if t.values[v] < finite_sum:
                return False
        elif t.values[v] != finite_sum:
            return False
    return True


def trace_norm(g: PresentedGraph, t: GraphTrace):
    """Sum over all vertices, or :data:`INFINITE` when a head carries a positive value."""
    if not is_graph_trace(g, t):
        raise PreconditionError("not a graph trace")
    if any(t.values[v] > 0 for v in g.heads):
        return INFINITE
    return sum((t.values[v] for v in g.vertices), Fraction(0))


@dataclass
class TraceSystem:
    """Linear constraints on the base values, in a fixed vertex order."""

    order: list
    eq: list
    ge: list        # rows r with r.x >= 0
    zero: list      # (vertex, reason) pairs forced to 0


def trace_system(g: PresentedGraph, bounded: bool = True) -> TraceSystem:
    order = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    eq, ge, zero = [], [], []
    if bounded:
        zero.extend((v, "carries a head") for v in sorted(g.heads))
    omega_targets = {}
    for v in order:
        succ = g.successors[v]
        if not succ:
            continue
        row = [Fraction(0)] * n
        row[idx[v]] += 1
        for w, m in succ.items():
            if m is OMEGA:
                omega_targets.setdefault(w, v)
            else:
                row[idx[w]] -= m
        if out_degree(g, v) is OMEGA:
            ge.append(row)
        else:
            eq.append(row)
    zero.extend((w, f"receives infinitely many edges from {omega_targets[w]}")
                for w in sorted(omega_targets))
    for v, _ in zero:
        row = [Fraction(0)] * n
        row[idx[v]] = Fraction(1)
        eq.append(row)
    return TraceSystem(order, eq, ge, zero)


def _maximise(system: TraceSystem, objective, norm: str = "le"):
    n = len(system.order)
    A_ub = [[-a for a in row] for row in system.ge]
    b_ub = [0] * len(A_ub)
    A_eq = list(system.eq)
    b_eq = [0] * len(A_eq)
    ones = [1] * n
    if norm == "le":
        A_ub.append(ones)
        b_ub.append(1)
    else:
        A_eq.append(ones)
        b_eq.append(1)
    return linprog(objective, A_ub, b_ub, A_eq, b_eq)


@dataclass(frozen=True)
class TraceVerdict:
    """Outcome of the bounded-trace search.

    ``witness`` is a norm-one trace when one exists.  Otherwise
    ``certificate`` lists, for every base vertex, why it must vanish.
    """

    nonzero: bool
    witness: GraphTrace = None
    certificate: tuple = ()


def _zero_reasons(g: PresentedGraph, system: TraceSystem) -> list:
    """Explain why every coordinate is zero, given that the cone is trivial.

    Known zeros propagate downstream (a zero vertex forces its finite
    targets to zero) and upstream (a non-singular vertex whose targets all
    vanish vanishes).  Whatever is left is pinned by the linear system as a
    whole.
    """
    reasons = dict((v, r) for v, r in system.zero)
    changed = True
    while changed:
        changed = False
        for v in sorted(g.vertices):
            succ = g.successors[v]
            if v in reasons:
                for w in sorted(succ):
                    if w not in reasons:
                        reasons[w] = f"reached from {v}, which vanishes"
                        changed = True
            elif succ and out_degree(g, v) is not OMEGA and all(w in reasons for w in succ):
                reasons[v] = "sum over its edges of vanishing values"
                changed = True
    for v in g.vertices:
        reasons.setdefault(v, "linear constraints admit only zero")
    return sorted(reasons.items())


def nonzero_bounded_trace(g: PresentedGraph) -> TraceVerdict:
    """Decide whether a graph trace with finite positive norm exists."""
    system = trace_system(g, bounded=True)
    if not system.order:
        return TraceVerdict(False)
    res = _maximise(system, [1] * len(system.order))
    if res.value > 0:
        witness = GraphTrace(dict(zip(system.order, res.x))).scaled(1 / res.value)
        return TraceVerdict(True, witness=witness)
    return TraceVerdict(False, certificate=tuple(_zero_reasons(g, system)))


def norm_one_trace(g: PresentedGraph):
    """A bounded trace of norm exactly one, or None when none exists."""
    system = trace_system(g, bounded=True)
    if not system.order:
        return None
    res = _maximise(system, [0] * len(system.order), norm="eq")
    if res.status != OPTIMAL:
        return None
    return GraphTrace(dict(zip(system.order, res.x)))


def trace_space_dimension(g: PresentedGraph) -> int:
    """Dimension of the linear span of the bounded-trace cone.

    A coordinate or an infinite-emitter slack that is zero on the whole cone
    becomes an equation; the span is then the solution space of all
    equations on the remaining coordinates.
    """
    system = trace_system(g, bounded=True)
    n = len(system.order)
    if n == 0:
        return 0
    rows = list(system.eq)
    for j in range(n):
        obj = [0] * n
        obj[j] = 1
        if _maximise(system, obj).value == 0:
            unit = [0] * n
            unit[j] = 1
            rows.append(unit)
    for row in system.ge:
        if _maximise(system, row).value == 0:
            rows.append(row)
    return n - rank(rows)


def zero_set(g: PresentedGraph, t: GraphTrace) -> VertexSet:
    if not is_graph_trace(g, t):
        raise PreconditionError("not a graph trace")
    base = {v for v in g.vertices if t.values[v] == 0}
    return VertexSet(base, {v: ALL for v in base & g.heads})


def pushforward_trace(g: PresentedGraph, t: GraphTrace):
    """Push ``t`` to the quotient by its zero set.

    Breaking vertices keep only the mass they send outside the zero set;
    the remainder moves to their primed copies.  Returns ``(quotient, trace)``.
    """
    H = zero_set(g, t)
    q = quotient_graph(g, H)
    primes = prime_names(g, H)
    breaking = breaking_vertices(g, H)
    values = {}
    for v in g.vertices:
        if v in H.base:
            continue
        if v in breaking:
            kept = sum((m * t.values[w] for w, m in g.successors[v].items()
                        if w not in H.base), Fraction(0))
            values[v] = kept
            values[primes[v]] = t.values[v] - kept
        else:
            values[v] = t.values[v]
    return q, GraphTrace(values)


def sample_trace(g: PresentedGraph, rng: random.Random, bounded: bool = False,
                 vertices: int = 3) -> GraphTrace:
    """A random graph trace: a rational convex mix of random vertices of the normalised cone.

    With ``bounded=False`` heads may carry positive values.  Returns the zero
    trace when the cone is trivial.
    """
    system = trace_system(g, bounded=bounded)
    n = len(system.order)
    if n == 0:
        return GraphTrace({})
    mix = [Fraction(0)] * n
    weights = [Fraction(rng.randint(0, 4)) for _ in range(vertices)]
    for w in weights:
        obj = [rng.randint(-3, 5) for _ in range(n)]
        res = _maximise(system, obj)
        mix = [a + w * b for a, b in zip(mix, res.x)]
    total = sum(weights)
    if total:
        mix = [a / total for a in mix]
    return GraphTrace(dict(zip(system.order, mix)))

