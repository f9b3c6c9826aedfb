import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphstab import (
    ALL,
    INFINITE,
    HeadVertex,
    PreconditionError,
    PresentedGraph,
    VertexSet,
    is_graph_trace,
    is_hereditary,
    is_left_infinite,
    is_saturated,
    nonzero_bounded_trace,
    pushforward_trace,
    reaches,
    trace_norm,
    trace_space_dimension,
    vertices_on_loops,
    zero_set,
)
from graphstab.traces import GraphTrace, norm_one_trace, sample_trace

from conftest import graphs
from oracles import nonzero_bounded_trace_fm


def T(**values):
    return GraphTrace(values)


def test_is_graph_trace(G):
    assert is_graph_trace(G["G1"], T(u=1))
    assert is_graph_trace(G["G4"], T(v=1, w=1))
    assert not is_graph_trace(G["G4"], T(v=1, w=0))
    assert not is_graph_trace(G["G2"], T(u=1))
    assert is_graph_trace(G["G2"], T(u=0))
    assert not is_graph_trace(G["G1"], T(u=-1))
    assert is_graph_trace(G["G7"], T(h=0, w=1, u=2))
    assert is_graph_trace(G["G7"], T(h=0, w=1, u=5))
    assert not is_graph_trace(G["G7"], T(h=0, w=1, u=1))
    assert not is_graph_trace(G["G9"], T(w=1))


def test_missing_assignment(G):
    with pytest.raises(PreconditionError):
        is_graph_trace(G["G4"], T(v=1))


def test_head_values_follow_attach_vertex(G):
    t = T(v=1, w=1)
    assert t[HeadVertex("w", 9)] == 1


def test_trace_norm(G):
    assert trace_norm(G["G4"], T(v=1, w=1)) == 2
    assert trace_norm(G["G5"], T(v=0, w=0)) == 0
    assert trace_norm(G["G5"], T(v=1, w=1)) is INFINITE
    with pytest.raises(PreconditionError):
        trace_norm(G["G4"], T(v=1, w=0))


def test_nonzero_bounded_trace(G):
    verdict = nonzero_bounded_trace(G["G4"])
    assert verdict.nonzero and verdict.witness == T(v=F(1, 2), w=F(1, 2))
    verdict = nonzero_bounded_trace(G["G5"])
    assert not verdict.nonzero
    assert dict(verdict.certificate) == {"v": "sum over its edges of vanishing values",
                                         "w": "carries a head"}
    verdict = nonzero_bounded_trace(G["G2"])
    assert not verdict.nonzero
    assert dict(verdict.certificate)["u"].startswith("receives infinitely many edges")
    assert not nonzero_bounded_trace(PresentedGraph([])).nonzero


def test_only_zero_certificate_falls_back_to_linear_argument():
    # g(a) = 2 g(b) and g(b) = g(a): no propagation rule applies
    g = PresentedGraph(["a", "b"], [("a", "b", 2), ("b", "a", 1)])
    verdict = nonzero_bounded_trace(g)
    assert not verdict.nonzero
    assert dict(verdict.certificate) == {"a": "linear constraints admit only zero",
                                         "b": "linear constraints admit only zero"}


def test_norm_one_trace(G):
    assert norm_one_trace(G["G4"]) is not None
    assert norm_one_trace(G["G5"]) is None
    assert norm_one_trace(PresentedGraph([])) is None


def test_dimension(G):
    assert trace_space_dimension(G["G1"]) == 1
    assert trace_space_dimension(G["G5"]) == 0
    assert trace_space_dimension(PresentedGraph(["a", "b"])) == 2
    assert trace_space_dimension(G["G4"]) == 1
    # infinite emitter with finite slack: g(u) >= 2 g(w) leaves u free above the bound
    assert trace_space_dimension(G["G7"]) == 2
    assert trace_space_dimension(PresentedGraph([])) == 0


def test_zero_set(G):
    assert zero_set(G["G4"], T(v=F(1, 2), w=F(1, 2))) == VertexSet()
    assert zero_set(G["G5"], T(v=0, w=0)) == VertexSet({"v", "w"}, {"w": ALL})
    assert zero_set(G["G7"], T(h=0, w=1, u=2)) == VertexSet({"h"})


def test_pushforward_examples(G):
    t = T(v=F(1, 2), w=F(1, 2))
    q, pushed = pushforward_trace(G["G4"], t)
    assert q == G["G4"] and pushed == t

    q, pushed = pushforward_trace(G["G7"], T(h=0, w=1, u=2))
    assert q == PresentedGraph(["u", "w", "u'"], [("u", "w", 2)])
    assert pushed == T(u=2, w=1, **{"u'": 0})
    assert trace_norm(G["G7"], T(h=0, w=1, u=2)) == trace_norm(q, pushed) == 3

    q, pushed = pushforward_trace(G["G4"], T(v=0, w=0))
    assert q == PresentedGraph([]) and pushed == GraphTrace({})


def test_pushforward_moves_surplus_to_prime(G):
    q, pushed = pushforward_trace(G["G7"], T(h=0, w=1, u=5))
    assert pushed["u'"] == 3 and pushed["u"] == 2
    assert is_graph_trace(q, pushed)


@settings(max_examples=300, deadline=None)
@given(graphs(max_vertices=6))
def test_feasibility_matches_fourier_motzkin(g):
    assert nonzero_bounded_trace(g).nonzero == nonzero_bounded_trace_fm(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=6))
def test_witness_is_a_norm_one_trace(g):
    verdict = nonzero_bounded_trace(g)
    if verdict.nonzero:
        assert is_graph_trace(g, verdict.witness)
        assert trace_norm(g, verdict.witness) == 1
        # a left-infinite loop vertex cannot carry mass in a bounded trace
        for v in vertices_on_loops(g):
            if is_left_infinite(g, v):
                assert verdict.witness[v] == 0
        assert trace_space_dimension(g) >= 1
    else:
        assert {v for v, _ in verdict.certificate} == set(g.vertices)
        assert trace_space_dimension(g) == 0


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=6), st.integers(0, 2**32))
def test_sampled_traces(g, seed):
    t = sample_trace(g, random.Random(seed))
    assert is_graph_trace(g, t)
    for a in g.vertices:
        for b in g.vertices:
            if reaches(g, a, b):
                assert t[a] >= t[b]
    H = zero_set(g, t)
    assert is_hereditary(g, H) and is_saturated(g, H)


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=6), st.integers(0, 2**32))
def test_pushforward_preserves_trace_and_norm(g, seed):
    t = sample_trace(g, random.Random(seed), bounded=True)
    q, pushed = pushforward_trace(g, t)
    assert is_graph_trace(q, pushed)
    assert trace_norm(q, pushed) == trace_norm(g, t)
