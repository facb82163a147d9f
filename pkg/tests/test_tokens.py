"""Token graphs and token digraphs against brute-force move enumeration."""

import math
from itertools import combinations

import numpy as np
import pytest

from voltlift import (
    KOutOfRange,
    complete_graph,
    cycle_graph,
    directed_cycle,
    token_configs,
    token_digraph,
    token_graph,
)


def test_one_token_graph_is_the_graph():
    g = cycle_graph(5)
    t = token_graph(g, 1)
    assert np.array_equal(t.adjacency_matrix(), g.adjacency_matrix())


def test_one_token_digraph_is_the_digraph():
    d = directed_cycle(4)
    t = token_digraph(d, 1)
    assert np.array_equal(t.adjacency_matrix(), d.adjacency_matrix())


def test_two_tokens_of_k5_is_johnson():
    t = token_graph(complete_graph(5), 2)
    assert t.n == 10
    assert set(t.degrees()) == {6}


def test_vertex_counts():
    g = complete_graph(6)
    for k in range(1, 7):
        assert token_graph(g, k).n == math.comb(6, k)
    with pytest.raises(KOutOfRange):
        token_graph(g, 0)
    with pytest.raises(KOutOfRange):
        token_graph(g, 7)


def test_config_order_is_lexicographic():
    assert token_configs(4, 2) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_degree_counts_boundary_edges():
    g = cycle_graph(6)
    t = token_graph(g, 2)
    for idx, config in enumerate(t.labels):
        boundary = sum(
            1 for u, v in g.edges() if (u in config) != (v in config)
        )
        assert t.degrees()[idx] == boundary


def test_complement_symmetry():
    g = cycle_graph(6)
    a = token_graph(g, 2)
    b = token_graph(g, 4)
    assert a.n == b.n
    # complements of the k-subsets give an explicit isomorphism
    comp = {config: tuple(sorted(set(range(6)) - set(config))) for config in a.labels}
    perm = [b.label_index[comp[config]] for config in a.labels]
    ma = a.adjacency_matrix()
    mb = b.adjacency_matrix()
    assert np.array_equal(ma, mb[np.ix_(perm, perm)])
    sa = sorted(np.linalg.eigvalsh(ma))
    sb = sorted(np.linalg.eigvalsh(mb))
    assert max(abs(x - y) for x, y in zip(sa, sb)) < 1e-9


def test_token_digraph_of_c5_moves():
    t = token_digraph(directed_cycle(5), 2)
    assert t.n == 10
    idx = t.label_index
    out = [h for (tail, h) in t.arcs if tail == idx[(0, 1)]]
    # the move 0 -> 1 is blocked (1 occupied), so only {0,2} remains
    assert [t.labels[h] for h in out] == [(0, 2)]
    out_degrees = t.out_degrees()
    for config, expected in [((0, 1), 1), ((0, 2), 2), ((1, 3), 2), ((1, 2), 1)]:
        assert out_degrees[idx[config]] == expected


def test_token_digraph_of_c3_is_directed_triangle():
    t = token_digraph(directed_cycle(3), 2)
    assert t.n == 3
    arcs = {(t.labels[a], t.labels[b]) for a, b in t.arcs}
    assert arcs == {((0, 1), (0, 2)), ((0, 2), (1, 2)), ((1, 2), (0, 1))}


def test_multi_edges_propagate():
    from voltlift import Graph

    g = Graph.from_edges([0, 1, 2], [(0, 1), (0, 1), (1, 2)])
    t = token_graph(g, 2)
    a = t.adjacency_matrix()
    i, j = t.label_index[(0, 2)], t.label_index[(1, 2)]
    assert a[i, j] == 2.0


def test_brute_force_against_direct_enumeration():
    g = cycle_graph(5)
    t = token_graph(g, 2)
    configs = list(combinations(range(5), 2))
    edges = set(map(tuple, map(sorted, g.edges())))
    expected = np.zeros((10, 10))
    for i, a in enumerate(configs):
        for j, b in enumerate(configs):
            diff = set(a) ^ set(b)
            if len(diff) == 2 and tuple(sorted(diff)) in edges:
                expected[i, j] = 1
    assert np.array_equal(t.adjacency_matrix(), expected)
