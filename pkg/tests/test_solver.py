import pytest
from hypothesis import given, settings

from conftest import connected_graphs, random_trees, vid, vids
from tollhull.atoms import block_of
from tollhull.convexity import extreme_vertices, toll_hull
from tollhull.graph import (
    Graph,
    GraphError,
    c5,
    g12,
    generate,
    is_caterpillar,
    star3,
    theta7,
)
from tollhull.oracles import bf_hull_number
from tollhull.solver import (
    TYPE1,
    TYPE2,
    TYPE3,
    ChoiceContext,
    characteristic_family,
    choice_1,
    choice_4,
    choice_5,
    classify_type,
    extreme_vertices_via_family,
    solve,
)


def test_classify_types_on_fig_blocks():
    g = g12()
    m1 = block_of(g, vids(g, "v1 v2 v3 v4 v5"))
    assert classify_type(g, m1) == TYPE3
    m4 = block_of(g, vids(g, "v8 v9 v10 v11 v12"))
    assert classify_type(g, m4) == TYPE1
    s = star3()
    leaf = block_of(s, vids(s, "x c"))
    assert classify_type(s, leaf) == TYPE3


def test_classify_type2():
    # wheel on four rim vertices plus a pendant: the rim is completely
    # joined to the hub but is itself no clique
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3), (4, 5)])
    wheel = block_of(g, frozenset({0, 1, 2, 3, 4}))
    assert wheel.interior == frozenset({0, 1, 2, 3})
    assert classify_type(g, wheel) == TYPE2


def test_solve_fig_graph():
    g = g12()
    r = solve(g)
    assert r.hull_number == 4
    assert r.hull_set == vids(g, "v1 v2 v3 v11")
    fam = {b.vertices: b for b in r.family}
    s1 = fam[vids(g, "v1 v2 v3")]
    assert s1.ctype == TYPE3 and s1.granularity == 3
    s2 = fam[vids(g, "v10 v11 v12")]
    assert s2.ctype == TYPE1 and s2.granularity == 1
    assert s2.options == (vids(g, "v11"),)
    assert r.extreme_vertices == vids(g, "v1 v2 v3")
    assert not r.prime and not r.complete
    assert toll_hull(g, r.hull_set) == frozenset(range(12))


def test_solve_complete_graphs():
    for n in range(1, 6):
        r = solve(generate("complete", n))
        assert r.hull_number == n
        assert r.hull_set == frozenset(range(n))
        assert r.complete
        assert r.extreme_vertices == frozenset(range(n))
        assert len(r.family) == 1 and r.family[0].ctype == TYPE3


def test_solve_prime_noncomplete():
    r = solve(c5())
    assert r.hull_number == 2
    assert r.hull_set == frozenset({0, 2})  # least non-adjacent pair
    assert r.prime and not r.complete
    assert r.family == ()
    assert r.extreme_vertices == frozenset()


def test_solve_star():
    s = star3()
    r = solve(s)
    assert r.hull_set == vids(s, "x y z")
    assert all(b.ctype == TYPE3 for b in r.family)


def test_solve_theta_trace():
    t = theta7()
    r = solve(t)
    assert r.hull_number == 2
    assert toll_hull(t, r.hull_set) == frozenset(range(7))
    merges = [e for e in r.trace if e["phase"] == "merge"]
    assert len(merges) == 1
    assert merges[0]["type"] == TYPE2
    assert merges[0]["k"] == 1
    assert merges[0]["choice"] == "choice_7"
    assert len(r.family) == 1
    block = r.family[0]
    assert block.ctype == TYPE2 and block.granularity == 2
    # composed menu: one pick from the long side, one from the short side
    assert set(block.options) == {
        frozenset({a, b})
        for a in vids(t, "p r q")
        for b in vids(t, "z1 z2")
    }


def test_solve_rejects_bad_input():
    with pytest.raises(GraphError):
        solve(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        solve(Graph(0))


def test_solve_single_vertex():
    r = solve(Graph(1))
    assert r.hull_set == frozenset({0})
    assert r.hull_number == 1


def test_solver_is_deterministic():
    g = generate("gnp", 9, 0.35, seed=1)
    assert g.is_connected()
    a, b = solve(g), solve(g)
    assert a.hull_set == b.hull_set
    assert a.trace == b.trace


def test_choice_1_on_fig_end_block():
    g = g12()
    m4 = block_of(g, vids(g, "v8 v9 v10 v11 v12"))
    ctx = ChoiceContext(f_circ=m4, f_bullet=m4, members=(m4,), i=TYPE1, k=0)
    assert choice_1(g, ctx) == (vids(g, "v11"),)


def test_choice_4_menu():
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3), (4, 5)])
    wheel = block_of(g, frozenset({0, 1, 2, 3, 4}))
    ctx = ChoiceContext(f_circ=wheel, f_bullet=wheel, members=(wheel,), i=TYPE2, k=0)
    assert choice_4(g, ctx) == (frozenset({0, 2}), frozenset({1, 3}))


def test_choice_5_conditions_on_theta():
    # builds the merge context by hand: the choice-5 conditions single out
    # the far pair on the three-vertex side
    t = theta7()
    side_z = block_of(t, vids(t, "s t z1 z2"))
    side_p = block_of(t, vids(t, "s t p r q"))
    whole = block_of(t, frozenset(range(7)))
    ctx = ChoiceContext(
        f_circ=side_z, f_bullet=whole, members=(side_z, side_p), i=TYPE2, k=0
    )
    assert choice_5(t, ctx) == (vids(t, "p q"),)


def test_family_accessors():
    g = g12()
    r = solve(g)
    assert characteristic_family(r) == r.family
    assert extreme_vertices_via_family(r) == vids(g, "v1 v2 v3")


@given(connected_graphs(max_n=8))
@settings(max_examples=120)
def test_solver_matches_bruteforce(g):
    r = solve(g)
    assert r.hull_number == bf_hull_number(g)
    assert toll_hull(g, r.hull_set) == frozenset(range(g.n))
    if r.family:
        assert sum(b.granularity for b in r.family) == r.hull_number


@given(connected_graphs(max_n=8))
@settings(max_examples=60)
def test_family_extremes_match_operator(g):
    r = solve(g)
    assert extreme_vertices_via_family(r) == extreme_vertices(g)


@given(random_trees(min_n=7, max_n=16))
@settings(max_examples=60)
def test_noncaterpillar_trees_have_hull_two(t):
    if is_caterpillar(t):
        return
    r = solve(t)
    assert r.hull_number == 2
    assert toll_hull(t, r.hull_set) == frozenset(range(t.n))


@given(connected_graphs(max_n=8))
@settings(max_examples=60)
def test_family_blocks_are_concave_with_clique_borders(g):
    from tollhull.convexity import is_t_concave

    r = solve(g)
    for b in r.family:
        assert is_t_concave(g, b.vertices)
        if not r.prime and not r.complete:
            # family members come from merged blocks: their neighborhood
            # is a clique and the block is connected
            nb = frozenset().union(*(g.adj[v] for v in b.vertices)) - b.vertices
            assert g.is_clique(nb)


def test_prime_path_results_have_size_two():
    from conftest import petersen

    for g in (c5(), petersen()):
        r = solve(g)
        assert r.prime
        assert r.hull_number == 2
        u, v = sorted(r.hull_set)
        assert not g.has_edge(u, v)


def test_granularity_lower_bound(small_corpus):
    # every minimum hull set found by brute force meets each block of the
    # characteristic family in at least the block's granularity
    from tollhull.oracles import bf_all_min_hull_sets

    for g in small_corpus:
        r = solve(g)
        if not r.family:
            continue
        for s in bf_all_min_hull_sets(g):
            for block in r.family:
                assert len(s & block.vertices) >= block.granularity


def test_mass_random_agreement():
    # ten thousand seeded random connected graphs against the oracle
    import itertools
    import random

    rng = random.Random(31337)
    checked = 0
    while checked < 10_000:
        n = rng.randint(2, 9)
        p = rng.choice([0.2, 0.3, 0.45, 0.6, 0.8])
        edges = [
            e for e in itertools.combinations(range(n), 2) if rng.random() < p
        ]
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        checked += 1
        r = solve(g)
        assert r.hull_number == bf_hull_number(g), sorted(g.edges())
        assert toll_hull(g, r.hull_set) == frozenset(range(n))
