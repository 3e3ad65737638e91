import networkx as nx
import pytest
from hypothesis import given

from conftest import graph_and_perm, graphs, random_graph, to_nx
from pipekit.graphcore import (GraphError, GraphTooLarge, are_isomorphic, betti, build_graph, components,
                               count_automorphisms, cycle, disjoint_union, family, from_adjacency, from_bitmasks,
                               hypercube, induced_subgraph, is_connected, path, permute)


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(3, [(1, 1)])
    with pytest.raises(GraphError, match=r"\(0, 5\)"):
        build_graph(3, [(0, 5)])
    with pytest.raises(GraphError, match="duplicate"):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_edges_are_canonical():
    g = build_graph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.neighbors(0) == (1, 2)
    assert g == build_graph(3, [(0, 2), (0, 1)])


def test_families():
    assert cycle(5).m == 5 and set(cycle(5).degrees()) == {2}
    assert path(4).m == 3
    assert family("complete", 4).m == 6
    q3 = hypercube(3)
    assert (q3.n, q3.m) == (8, 12)
    assert family("empty", 3).m == 0
    with pytest.raises(GraphError):
        family("cycle", 2)
    with pytest.raises(GraphError):
        family("wheel", 5)


def test_betti_examples():
    assert betti(cycle(6)) == betti(cycle(3))
    b = betti(disjoint_union([cycle(3), cycle(3)]))
    assert (b.beta0, b.beta1) == (2, 2)
    assert betti(build_graph(4, [])).beta0 == 4


@given(graphs(max_n=10))
def test_betti_matches_spanning_forest(g):
    h = to_nx(g)
    forest_edges = sum(len(c) - 1 for c in nx.connected_components(h))
    b = betti(g)
    assert b.beta0 == nx.number_connected_components(h)
    assert b.beta1 == g.m - forest_edges


@given(graph_and_perm())
def test_betti_permutation_invariant(gp):
    g, p = gp
    assert betti(permute(g, p)) == betti(g)


def test_permute_examples():
    assert permute(path(3), [0, 1, 2]) == path(3)
    assert permute(path(3), [2, 1, 0]) == path(3)
    assert are_isomorphic(cycle(4), permute(cycle(4), [1, 2, 3, 0]))
    with pytest.raises(GraphError):
        permute(path(3), [0, 0, 1])


def test_components_and_induced():
    g = disjoint_union([cycle(3), path(2)])
    assert components(g) == [[0, 1, 2], [3, 4]]
    assert not is_connected(g)
    assert induced_subgraph(g, [0, 1, 3]).m == 1


def test_adjacency_and_bitmask_constructors():
    g = cycle(5)
    assert from_adjacency(g.adjacency_matrix()) == g
    assert from_bitmasks(g.bitmasks()) == g
    with pytest.raises(GraphError):
        from_adjacency([[1, 0], [0, 0]])


@given(graph_and_perm(max_n=8), graphs(max_n=8))
def test_isomorphism_matches_networkx(gp, h):
    g, p = gp
    assert are_isomorphic(g, permute(g, p))
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_isomorphism_equivalence_spot_check(rng):
    gs = [random_graph(rng, 6, 0.5) for _ in range(25)]
    for a in gs[:8]:
        assert are_isomorphic(a, a)
        for b in gs:
            assert are_isomorphic(a, b) == are_isomorphic(b, a)
            for c in gs[:5]:
                if are_isomorphic(a, b) and are_isomorphic(b, c):
                    assert are_isomorphic(a, c)


def test_automorphism_counts():
    assert count_automorphisms(cycle(6)) == 12
    assert count_automorphisms(hypercube(3)) == 48
    assert count_automorphisms(build_graph(4, [])) == 24
    g = disjoint_union([cycle(3), path(2)])
    assert count_automorphisms(g) == 12


@given(graphs(max_n=7))
def test_automorphisms_match_networkx(g):
    h = to_nx(g)
    expected = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
    assert count_automorphisms(g) == expected


def test_size_limit():
    big = cycle(13)
    with pytest.raises(GraphTooLarge):
        are_isomorphic(big, big)
    assert are_isomorphic(big, big, n_max=13)
