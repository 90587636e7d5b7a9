"""Deterministic graph generators for experiments and tests."""

from __future__ import annotations

import random

from .graphs import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return build_graph(n, edges)


def complete(n):
    return build_graph(n, [(u, v) for u in range(1, n + 1)
                           for v in range(u + 1, n + 1)])


def star(leaves):
    """Centre vertex 1 joined to `leaves` leaf vertices."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return build_graph(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


def gnp(n, p, seed):
    """Each of the n*(n-1)/2 pairs drawn independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return build_graph(n, edges)


def regular_ish(n, d, seed):
    """Union of d random near-perfect matchings: every degree is at most d.

    Duplicate pairs are dropped, so the graph is only approximately regular.
    """
    if d < 1 or d >= n:
        raise ValueError("need 1 <= d < n")
    rng = random.Random(seed)
    edges = set()
    for _ in range(d):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        for i in range(0, n - 1, 2):
            u, v = order[i], order[i + 1]
            edges.add((u, v) if u < v else (v, u))
    return build_graph(n, sorted(edges))


def from_spec(kind, args, seed):
    """Dispatch used by the CLI: kind name plus positional size parameters."""
    if kind == "path":
        return path(int(args[0]))
    if kind == "cycle":
        return cycle(int(args[0]))
    if kind == "complete":
        return complete(int(args[0]))
    if kind == "star":
        return star(int(args[0]))
    if kind == "gnp":
        return gnp(int(args[0]), float(args[1]), seed)
    if kind == "regular-ish":
        return regular_ish(int(args[0]), int(args[1]), seed)
    raise ValueError(f"unknown graph kind {kind!r}")


KIND_ARITY = {"path": 1, "cycle": 1, "complete": 1, "star": 1,
              "gnp": 2, "regular-ish": 2}
