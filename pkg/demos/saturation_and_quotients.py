"""
Hereditary sets, saturation and quotient graphs
===============================================
"""

from graphstab import (OMEGA, PresentedGraph, VertexSet, breaking_vertices,
                       enumerate_saturated_hereditary, quotient_graph, saturate)

# a chain a -> b -> c with a side branch d -> {c, e}
g = PresentedGraph(list("abcde"), [("a", "b", 1), ("b", "c", 1), ("d", "c", 1), ("d", "e", 1)])
print(saturate(g, VertexSet({"c"})))            # d also emits into e, so it stays out

for H in enumerate_saturated_hereditary(g):
    print(sorted(H.base))

###############################################################################
# Breaking vertices emit infinitely many edges into H but finitely many out.

g = PresentedGraph(["u", "h", "w"], [("u", "h", OMEGA), ("u", "w", 2)])
H = VertexSet({"h"})
print(breaking_vertices(g, H))
print(quotient_graph(g, H).canonical())
print(quotient_graph(g, H, ["u"]).canonical())
