"""Deciding stability of a graph algebra from the graph alone.

The algebra is stable exactly when every vertex on a loop is left infinite
and the graph has no nonzero bounded graph trace (equivalently, no trace of
norm one).  Both halves are decided exactly here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    OMEGA,
    PresentedGraph,
    left_infinite_base,
    sources,
    vertices_on_loops,
)
from .traces import GraphTrace, nonzero_bounded_trace, norm_one_trace

STABLE = "STABLE"
NOT_STABLE = "NOT_STABLE"


@dataclass(frozen=True)
class LoopCheck:
    passed: bool
    witness: str = None     # a loop vertex that is left finite


@dataclass(frozen=True)
class TraceCheck:
    passed: bool
    witness: GraphTrace = None


@dataclass(frozen=True)
class StabilityReport:
    verdict: str
    loop_check: LoopCheck
    trace_check: TraceCheck
    fast_path_used: bool
    method: str = "bounded-trace"

    @property
    def stable(self) -> bool:
        return self.verdict == STABLE


@dataclass(frozen=True)
class ConditionK:
    holds: bool
    counts: dict            # base vertex -> simple loop count, capped at 2


def simple_loop_counts(g: PresentedGraph, cap: int = 2) -> dict:
    """Number of simple loops based at each base vertex, capped at ``cap``.

    A simple loop at v is a path from v back to v that does not pass through
    v in between; it may revisit other vertices, and parallel edges give
    distinct loops.  For each v this counts first-return paths by a capped
    fixpoint over ``N(x) = sum m(x,y) N(y)`` with ``N(v) = 1`` at the end.
    """
    counts = {}
    for v in g.vertices:
        returns = {x: 0 for x in g.vertices}
        while True:
            nxt = {}
            for x in g.vertices:
                if x == v:
                    continue
                nxt[x] = _capped_sum(g.successors[x], v, returns, cap)
            nxt[v] = 0
            if nxt == returns:
                break
            returns = nxt
        counts[v] = _capped_sum(g.successors[v], v, returns, cap)
    return counts


def _capped_sum(succ, target, returns, cap):
    total = 0
    for y, m in succ.items():
        paths = 1 if y == target else returns[y]
        if paths == 0:
            continue
        total += cap if m is OMEGA else m * paths
        if total >= cap:
            return cap
    return total


def condition_k(g: PresentedGraph) -> ConditionK:
    counts = simple_loop_counts(g)
    return ConditionK(all(c != 1 for c in counts.values()), counts)


def _loop_check(g: PresentedGraph) -> LoopCheck:
    infinite = left_infinite_base(g)
    for v in sorted(vertices_on_loops(g)):
        if v not in infinite:
            return LoopCheck(False, v)
    return LoopCheck(True)


@dataclass(frozen=True)
class LeftInfiniteCriterion:
    """Source-free graphs are stable iff every vertex is left infinite.

    ``applies`` records whether the graph is source free;
    ``all_left_infinite`` being true implies stability either way.
    """

    applies: bool
    all_left_infinite: bool


def left_infinite_criterion(g: PresentedGraph) -> LeftInfiniteCriterion:
    return LeftInfiniteCriterion(
        applies=not sources(g),
        all_left_infinite=left_infinite_base(g) >= set(g.vertices),
    )


def _report(g, loop, trace, method):
    verdict = STABLE if loop.passed and trace.passed else NOT_STABLE
    crit = left_infinite_criterion(g)
    if crit.all_left_infinite and verdict != STABLE:
        raise AssertionError("every vertex left infinite but stability check failed")
    if crit.applies and crit.all_left_infinite != (verdict == STABLE):
        raise AssertionError("source-free graph: verdict disagrees with left-infinite test")
    return StabilityReport(verdict, loop, trace, crit.applies, method)


def is_stable(g: PresentedGraph) -> StabilityReport:
    """Loop vertices left infinite and no nonzero bounded graph trace."""
    verdict = nonzero_bounded_trace(g)
    trace = TraceCheck(False, verdict.witness) if verdict.nonzero else TraceCheck(True)
    return _report(g, _loop_check(g), trace, "bounded-trace")


def is_stable_via_T(g: PresentedGraph) -> StabilityReport:
    """Same decision, testing directly for a graph trace of norm one."""
    witness = norm_one_trace(g)
    trace = TraceCheck(True) if witness is None else TraceCheck(False, witness)
    return _report(g, _loop_check(g), trace, "norm-one-trace")

