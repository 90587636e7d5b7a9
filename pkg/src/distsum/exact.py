"""Exact minimum palette size by backtracking, for desk-scale oracles.

Elements (vertices and incident edges) are interleaved so that a vertex's
weighted degree is decided as early as possible; the search prunes on
properness at every assignment and on sum clashes between fully decided
vertices within the radius.  No numeric symmetry breaking is applied: colour
permutations do not preserve weighted degrees, so fixing any element's colour
could miss feasible palettes.
"""

from __future__ import annotations

from .colouring import TotalColouring
from .graphs import all_r_neighbourhoods, edge_key


def _element_order(g):
    """For each vertex in id order: first its edges to earlier vertices, then
    the vertex itself.  Each vertex is fully decided once its forward edges
    (placed under later vertices) are coloured."""
    order = []
    for v in g.vertices():
        for u in sorted(g.adjacency[v]):
            if u < v:
                order.append(("edge", edge_key(u, v)))
        order.append(("vertex", v))
    return order


def is_feasible(g, radius, palette_size):
    """Decide whether a proper, sum-distinguishing colouring with colours in
    [1, palette_size] exists; returns (bool, TotalColouring or None)."""
    if palette_size < 1:
        raise ValueError("palette size must be >= 1")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    nbrs_r = all_r_neighbourhoods(g, radius)
    order = _element_order(g)
    vcol = {}
    ecol = {}
    # remaining undecided elements per vertex: own colour + incident edges
    remaining = {v: 1 + g.degree(v) for v in g.vertices()}
    sums = {}

    def vertex_ok(v, c):
        for u in g.adjacency[v]:
            if vcol.get(u) == c or ecol.get(edge_key(v, u)) == c:
                return False
        return True

    def edge_ok(u, v, c):
        if vcol.get(u) == c or vcol.get(v) == c:
            return False
        for end in (u, v):
            for w in g.adjacency[end]:
                other = edge_key(end, w)
                if other != edge_key(u, v) and ecol.get(other) == c:
                    return False
        return True

    def decide(v):
        total = vcol[v] + sum(ecol[edge_key(v, u)] for u in g.adjacency[v])
        for u in nbrs_r[v]:
            if u in sums and sums[u] == total:
                return None
        return total

    def settle(ends):
        """Mark endpoints decided where possible; None on a sum clash."""
        done = []
        touched = []
        for v in ends:
            remaining[v] -= 1
            touched.append(v)
            if remaining[v] == 0:
                total = decide(v)
                if total is None:
                    for w in done:
                        del sums[w]
                    for w in touched:
                        remaining[w] += 1
                    return None
                sums[v] = total
                done.append(v)
        return done

    def unsettle(ends, done):
        for v in done:
            del sums[v]
        for v in ends:
            remaining[v] += 1

    def search(i):
        if i == len(order):
            return True
        kind, item = order[i]
        if kind == "vertex":
            for c in range(1, palette_size + 1):
                if not vertex_ok(item, c):
                    continue
                vcol[item] = c
                done = settle((item,))
                if done is not None:
                    if search(i + 1):
                        return True
                    unsettle((item,), done)
                del vcol[item]
        else:
            u, v = item
            for c in range(1, palette_size + 1):
                if not edge_ok(u, v, c):
                    continue
                ecol[item] = c
                done = settle((u, v))
                if done is not None:
                    if search(i + 1):
                        return True
                    unsettle((u, v), done)
                del ecol[item]
        return False

    if search(0):
        return True, TotalColouring(dict(vcol), dict(ecol))
    return False, None


def exact_chi(g, radius, limit):
    """Least palette size admitting a valid colouring, or None past `limit`.

    Scans sizes upward from the properness lower bound max_degree + 1
    (1 for edgeless graphs).
    """
    lower = max(g.max_degree + 1, 1)
    for p in range(lower, limit + 1):
        ok, witness = is_feasible(g, radius, p)
        if ok:
            return p, witness
    return None, None
