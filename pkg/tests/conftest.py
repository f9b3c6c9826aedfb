import json
import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from graphstab import OMEGA, PresentedGraph
from graphstab.generate import random_graph
from graphstab.serialize import graph_from_json

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"
NAMED = [f"G{i}" for i in range(1, 10)]


def load_fixture(name):
    return graph_from_json(json.loads((FIXTURES / f"{name}.json").read_text()))


@pytest.fixture(scope="session")
def G():
    return {name: load_fixture(name) for name in NAMED}


@pytest.fixture(scope="session")
def corpus():
    rng = random.Random(20240611)
    return [random_graph(rng) for _ in range(1000)]


@st.composite
def graphs(draw, max_vertices=6, max_mult=3, heads=True):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(n)]
    mults = st.one_of(st.integers(1, max_mult), st.just(OMEGA))
    mult = draw(st.dictionaries(st.tuples(st.sampled_from(names), st.sampled_from(names)),
                                mults, max_size=2 * n))
    head_set = draw(st.sets(st.sampled_from(names))) if heads else set()
    return PresentedGraph(names, mult, head_set)


@st.composite
def finite_graphs(draw, max_vertices=6, max_mult=3):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(n)]
    mult = draw(st.dictionaries(st.tuples(st.sampled_from(names), st.sampled_from(names)),
                                st.integers(1, max_mult), max_size=2 * n))
    return PresentedGraph(names, mult, set())
