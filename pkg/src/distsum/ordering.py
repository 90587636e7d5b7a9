"""Randomized vertex ordering with local resampling.

Every vertex draws a weight in [0, 1); the processing order sorts by weight
(ties by id).  Vertices below a degree-dependent threshold form the "low"
group.  For vertices with enough big-class neighbours, three counting
conditions must hold; whenever some fail, the weights within distance
2 * radius of a failing vertex are redrawn -- the dependency radius of the
underlying events -- until all conditions hold or a round budget runs out.
The certificate records the outcome either way.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .graphs import all_r_neighbourhoods, backward_stats, ball, degree_stats

DEFAULT_MAX_ROUNDS = 1000

# Condition keys:
#   "low_nbrs"       cap on r-neighbours inside the low group
#   "big_backward"   lower bound on backward big-class neighbours (high group only)
#   "backward_span"  cap on backward r-neighbour count (high group only)
CONDITION_KEYS = ("low_nbrs", "big_backward", "backward_span")


@dataclass
class OrderingCertificate:
    weights: dict                  # vertex -> float in [0, 1)
    ordering: list                 # permutation, ascending by (weight, id)
    low_set: frozenset             # weight < split_threshold
    high_set: frozenset
    split_threshold: float
    checks: dict                   # vertex -> {key: bool or None}
    resample_rounds: int
    seed: int
    valid: bool = True
    notes: list = field(default_factory=list)

    def failed_vertices(self):
        return sorted(v for v, res in self.checks.items()
                      if not all(ok is None or ok for ok in res.values()))


def split_threshold(max_degree):
    """Weight threshold separating the low and high groups."""
    return math.log(max_degree) / max_degree ** (1.0 / 3.0)


def sample_weights(g, seed):
    """Independent uniform [0, 1) weights from a seeded generator."""
    rng = random.Random(seed)
    return {v: rng.random() for v in g.vertices()}


def derive_ordering(g, weights):
    return sorted(g.vertices(), key=lambda v: (weights[v], v))


def checkable_vertices(g, stats):
    """Vertices covered by the conditions: enough big-class neighbours."""
    cutoff = g.max_degree ** (1.0 / 3.0) * math.log(g.max_degree)
    return [v for v in g.vertices() if stats.big_nbr_count[v] >= cutoff]


def condition_counts(g, weights, radius, neighbourhoods=None):
    """The raw quantities behind the conditions, for every checkable vertex.

    Returns {vertex: (low_nbr_count, backward_big_count, backward_r_count)},
    all derived from backward_stats against the ordering induced by the
    weights, with the low group as mask.
    """
    if radius < 2:
        raise ValueError("ordering conditions need radius >= 2")
    if g.max_degree < 1:
        return {}
    tau = split_threshold(g.max_degree)
    stats = degree_stats(g)
    ordering = derive_ordering(g, weights)
    low = frozenset(v for v in g.vertices() if weights[v] < tau)
    bstats = backward_stats(g, ordering, radius, mask=low,
                            neighbourhoods=neighbourhoods)
    return {v: (bstats.masked_r_count[v], bstats.backward_big_count[v],
                bstats.backward_r_count[v])
            for v in checkable_vertices(g, stats)}


def check_conditions(g, weights, radius, neighbourhoods=None, only=None):
    """Evaluate the three ordering conditions.

    Returns {vertex: {"low_nbrs": bool, "big_backward": bool|None,
    "backward_span": bool|None}} for every checkable vertex (or the subset
    `only`).  The backward conditions are only evaluated for vertices in the
    high group and are recorded as None otherwise.  Comparisons are plain
    double-precision, no epsilon slack.
    """
    counts = condition_counts(g, weights, radius, neighbourhoods)
    if only is not None:
        only = set(only)
    delta = g.max_degree
    logd = math.log(delta) if delta >= 1 else 0.0
    tau = split_threshold(delta) if delta >= 1 else 0.0
    stats = degree_stats(g) if delta >= 1 else None

    results = {}
    for v, (low_count, big_back, back_r) in counts.items():
        if only is not None and v not in only:
            continue
        wv = weights[v]
        res = {
            "low_nbrs": low_count <= 2 * g.degree(v) * delta ** (radius - 4.0 / 3.0) * logd,
            "big_backward": None,
            "backward_span": None,
        }
        if wv >= tau:
            bcount = stats.big_nbr_count[v]
            res["big_backward"] = (
                big_back >= wv * bcount - math.sqrt(wv * bcount) * logd)
            mean = wv * stats.nbr_degree_sum[v] * delta ** (radius - 2)
            res["backward_span"] = back_r <= mean + math.sqrt(mean) * logd
        results[v] = res
    return results


def _failing(checks):
    return [v for v, res in checks.items()
            if not all(ok is None or ok for ok in res.values())]


def resample_until_valid(g, radius, seed, max_rounds=DEFAULT_MAX_ROUNDS):
    """Sample weights and locally resample until all conditions hold.

    Each round redraws the weights of every vertex within distance
    2 * radius of a failing vertex, then re-evaluates the conditions of
    vertices whose inputs may have changed (distance <= radius of a redraw).
    A single seeded generator drives all draws, so the certificate is a pure
    function of (graph, radius, seed, max_rounds).
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    rng = random.Random(seed)
    weights = {v: rng.random() for v in g.vertices()}

    if g.max_degree < 1:
        ordering = sorted(g.vertices(), key=lambda v: (weights[v], v))
        return OrderingCertificate(weights, ordering, frozenset(), frozenset(
            g.vertices()), 0.0, {}, 0, seed, True, ["edgeless graph"])

    neighbourhoods = all_r_neighbourhoods(g, radius)
    checks = check_conditions(g, weights, radius, neighbourhoods)
    rounds = 0
    failing = _failing(checks)
    while failing and rounds < max_rounds:
        redraw = ball(g, failing, 2 * radius)
        for v in sorted(redraw):
            weights[v] = rng.random()
        rounds += 1
        affected = ball(g, redraw, radius)
        stale = [v for v in checks if v in affected]
        checks.update(check_conditions(g, weights, radius, neighbourhoods, stale))
        failing = _failing(checks)

    tau = split_threshold(g.max_degree)
    ordering = sorted(g.vertices(), key=lambda v: (weights[v], v))
    low = frozenset(v for v in g.vertices() if weights[v] < tau)
    cert = OrderingCertificate(
        weights, ordering, low, frozenset(set(g.vertices()) - low), tau,
        checks, rounds, seed, valid=not failing)
    if failing:
        cert.notes.append(
            f"round budget {max_rounds} exhausted with {len(failing)} failing vertices")
    return cert
