"""
Deciding stability from a graph
===============================

A single vertex with infinitely many loops, then the same vertex with a
head attached.
"""

from graphstab import OMEGA, PresentedGraph, is_stable, stabilize_graph

g = PresentedGraph(["u"], [("u", "u", OMEGA)])
report = is_stable(g)
print(report.verdict, "- loop witness:", report.loop_check.witness)

# u sits on a loop but nothing infinite reaches it
h = stabilize_graph(g)
print(sorted(h.heads), is_stable(h).verdict)

###############################################################################
# A head is enough even when the vertex with the head is not on a loop.

g = PresentedGraph(["v", "w"], [("v", "w", 1)], {"w"})
report = is_stable(g)
print(report.verdict, "fast path used:", report.fast_path_used)
