"""k-token graphs and k-token digraphs.

Vertices are the sorted k-subsets of the host's vertex indices, in
lexicographic order.  A move slides one token along an edge (or arc) to an
unoccupied vertex; multi-arcs in the host give multi-arcs in the token graph.
"""

from __future__ import annotations

from itertools import combinations

from .errors import KOutOfRange
from .graphs import Digraph, Graph


def token_configs(n: int, k: int) -> list[tuple[int, ...]]:
    """All sorted k-subsets of range(n), lexicographically."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    return list(combinations(range(n), k))


def token_graph(graph: Graph, k: int) -> Graph:
    """The k-token graph of an undirected graph."""
    configs = token_configs(graph.n, k)
    index = {c: i for i, c in enumerate(configs)}
    edges = []
    for u, v in graph.edges():
        if u == v:
            continue  # a token cannot slide along a loop
        for c in configs:
            if u in c and v not in c:
                moved = tuple(sorted(set(c) - {u} | {v}))
                edges.append((index[c], index[moved]))
    return Graph.from_edges(configs, edges)


def token_digraph(digraph: Digraph, k: int) -> Digraph:
    """The k-token digraph: arc A -> B when one token follows an arc u -> v
    with v unoccupied."""
    configs = token_configs(digraph.n, k)
    index = {c: i for i, c in enumerate(configs)}
    arcs = []
    for u, v in digraph.arcs:
        if u == v:
            continue
        for c in configs:
            if u in c and v not in c:
                moved = tuple(sorted(set(c) - {u} | {v}))
                arcs.append((index[c], index[moved]))
    return Digraph(configs, arcs)
