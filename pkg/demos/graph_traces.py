"""
Graph traces and their zero sets
================================

Traces are computed with exact rationals, so every printed value is exact.
"""

import random

from graphstab import (OMEGA, PresentedGraph, nonzero_bounded_trace, pushforward_trace,
                       trace_norm, trace_space_dimension, zero_set)
from graphstab.traces import sample_trace

g = PresentedGraph(["v", "w"], [("v", "w", 1)])
verdict = nonzero_bounded_trace(g)
print(verdict.witness.values)           # v and w both carry 1/2
print("dimension:", trace_space_dimension(g))

# heads force a trace to vanish, and the zero propagates upstream
verdict = nonzero_bounded_trace(g.with_heads({"w"}))
for v, reason in verdict.certificate:
    print(v, "->", reason)

###############################################################################
# An infinite emitter only bounds its targets from above, so the surplus
# moves onto a fresh sink in the quotient.

g = PresentedGraph(["u", "h", "w"], [("u", "h", OMEGA), ("u", "w", 2)])
t = sample_trace(g, random.Random(3), bounded=True)
print("trace:", t.values, "zero set:", zero_set(g, t))
q, pushed = pushforward_trace(g, t)
print(sorted(q.vertices), pushed.values)
print(trace_norm(g, t) == trace_norm(q, pushed))
