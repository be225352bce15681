import pytest
from hypothesis import given, settings

from conftest import connected_graphs, vids
from tollhull.atoms import atoms, extremal_atoms, is_prime
from tollhull.graph import Graph, GraphError, c5, g12, generate, k4, theta7
from tollhull.oracles import bf_atoms, bf_is_prime


def test_primality_fixtures():
    assert is_prime(c5())
    assert is_prime(k4())
    assert not is_prime(theta7())
    with pytest.raises(GraphError):
        is_prime(Graph(4, [(0, 1), (2, 3)]))


def test_fig_decomposition():
    g = g12()
    dec = atoms(g)
    got = [frozenset(g.labels[v] for v in a) for a in dec.atoms]
    assert got == [
        frozenset("v1 v2 v3 v4 v5".split()),
        frozenset("v4 v5 v6 v7".split()),
        frozenset("v6 v7 v8 v9".split()),
        frozenset("v8 v9 v10 v11 v12".split()),
    ]
    assert dec.extremal_flags == (True, False, False, True)
    ext = extremal_atoms(dec)
    assert ext == [vids(g, "v1 v2 v3 v4 v5"), vids(g, "v8 v9 v10 v11 v12")]


def test_complete_graph_single_atom():
    dec = atoms(generate("complete", 5))
    assert dec.atoms == (frozenset(range(5)),)
    assert dec.extremal_flags == (False,)
    with pytest.raises(GraphError):
        extremal_atoms(dec)


def test_path_atoms_and_ends():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    dec = atoms(g)
    assert dec.atoms == (
        frozenset({0, 1}),
        frozenset({1, 2}),
        frozenset({2, 3}),
    )
    assert extremal_atoms(dec) == [frozenset({0, 1}), frozenset({2, 3})]


def test_theta_both_extremal(theta_graph):
    dec = atoms(theta_graph)
    assert len(dec.atoms) == 2
    assert dec.extremal_flags == (True, True)


def test_atom_order_is_deterministic():
    g = Graph(8, [(0, 1), (0, 6), (1, 6), (1, 5), (2, 5), (2, 7), (3, 4), (3, 5)])
    dec = atoms(g)
    assert list(dec.atoms) == sorted(dec.atoms, key=sorted)


@given(connected_graphs(max_n=8))
@settings(max_examples=80)
def test_atoms_match_bruteforce(g):
    got = [set(a) for a in atoms(g).atoms]
    want = [set(a) for a in bf_atoms(g)]
    assert got == want


@given(connected_graphs(max_n=8))
@settings(max_examples=50)
def test_decomposition_invariants(g):
    dec = atoms(g)
    union = frozenset().union(*dec.atoms)
    assert union == frozenset(range(g.n))
    for u, v in g.edges():
        assert any(u in a and v in a for a in dec.atoms)
    for i, a in enumerate(dec.atoms):
        for b in dec.atoms[i + 1:]:
            assert g.is_clique(a & b)
    if len(dec.atoms) >= 2:
        assert sum(dec.extremal_flags) >= 2


@given(connected_graphs(max_n=7))
@settings(max_examples=40)
def test_atoms_are_prime_and_maximal(g):
    dec = atoms(g)
    for a in dec.atoms:
        sub, _ = g.subgraph(a)
        assert bf_is_prime(sub)
        for extra in set(range(g.n)) - a:
            bigger, _ = g.subgraph(a | {extra})
            assert not (bigger.is_connected() and bf_is_prime(bigger))


@given(connected_graphs(max_n=8))
@settings(max_examples=50)
def test_non_extremal_atoms_disconnect(g):
    dec = atoms(g)
    if len(dec.atoms) < 2:
        return
    for atom, flag in zip(dec.atoms, dec.extremal_flags):
        if not flag:
            assert len(g.components(atom)) >= 2


@given(connected_graphs(max_n=8))
@settings(max_examples=50)
def test_primality_matches_bruteforce(g):
    assert is_prime(g) == bf_is_prime(g)
