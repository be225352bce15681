import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tollhull.graph import Graph, g12, parse_graph6_file, theta7  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

DATA_DIR = Path(__file__).resolve().parent / "data"
CORPUS_PATH = DATA_DIR / "connected_le7.g6"


@pytest.fixture(scope="session")
def corpus():
    """Every connected graph on up to 7 vertices, one per isomorphism class."""
    return parse_graph6_file(CORPUS_PATH.read_text())


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [g for g in corpus if g.n <= 6]


@pytest.fixture
def fig_graph():
    return g12()


@pytest.fixture
def theta_graph():
    return theta7()


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def vid(g: Graph, label: str) -> int:
    return g.id_of(label)


def vids(g: Graph, labels: str) -> frozenset:
    return frozenset(g.id_of(tok) for tok in labels.split())


# -- hypothesis strategies ---------------------------------------------------


@st.composite
def connected_graphs(draw, min_n=2, max_n=8, p_choices=(0.25, 0.4, 0.6, 0.8)):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from(p_choices))
    pairs = list(combinations(range(n), 2))
    flags = draw(
        st.lists(
            st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)
        )
    )
    edges = [pair for pair, f in zip(pairs, flags) if f < p]
    g = Graph(n, edges)
    if not g.is_connected():
        # deterministically connect the components along their minima
        comps = g.components()
        extra = [
            (min(comps[i]), min(comps[i + 1])) for i in range(len(comps) - 1)
        ]
        g = Graph(n, edges + extra)
    return g


@st.composite
def random_trees(draw, min_n=2, max_n=12):
    from tollhull.graph import generate

    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return generate("random-tree", n, seed=seed)
