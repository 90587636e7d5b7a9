import random

import pytest

from distsum import build_graph


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return build_graph(n, edges)


def apsp(g):
    """All-pairs distances by BFS from every vertex; the reference oracle."""
    dist = {}
    for s in g.vertices():
        dist[s] = {s: 0}
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for w in frontier:
                for u in g.adjacency[w]:
                    if u not in dist[s]:
                        dist[s][u] = d
                        nxt.append(u)
            frontier = nxt
    return dist


def ordering_counts_oracle(g, weights, radius):
    """Recompute the ordering-condition quantities from the distance table."""
    from distsum.graphs import degree_stats
    from distsum.ordering import checkable_vertices, split_threshold

    dist = apsp(g)
    tau = split_threshold(g.max_degree)
    stats = degree_stats(g)
    out = {}
    for v in checkable_vertices(g, stats):
        key = (weights[v], v)
        r_nbrs = [u for u in g.vertices()
                  if u != v and dist[v].get(u, 10 ** 9) <= radius]
        low = sum(1 for u in r_nbrs if weights[u] < tau)
        big_back = sum(1 for u in g.adjacency[v]
                       if stats.is_big(u) and (weights[u], u) < key)
        back_r = sum(1 for u in r_nbrs if (weights[u], u) < key)
        out[v] = (low, big_back, back_r)
    return out


@pytest.fixture
def p3():
    return build_graph(3, [(1, 2), (2, 3)])


@pytest.fixture
def c5():
    return build_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


@pytest.fixture
def k2():
    return build_graph(2, [(1, 2)])
