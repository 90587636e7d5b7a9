import math

import pytest

from distsum import build_graph, check_conditions, resample_until_valid, sample_weights
from distsum.graphs import degree_stats
from distsum.ordering import (checkable_vertices, condition_counts,
                              derive_ordering, split_threshold)

from conftest import ordering_counts_oracle, random_graph


def test_sample_weights_reproducible(p3):
    first = sample_weights(p3, 42)
    assert sample_weights(p3, 42) == first
    assert all(0.0 <= x < 1.0 for x in first.values())


def test_sample_weights_seed_sensitivity(p3):
    assert sample_weights(p3, 1) != sample_weights(p3, 2)


def test_sample_weights_regression_pin(p3):
    # golden values from the first run of random.Random(0) on three vertices
    weights = sample_weights(p3, 0)
    assert weights == pytest.approx({1: 0.8444218515250481,
                                     2: 0.7579544029403025,
                                     3: 0.420571580830845})


def test_ordering_sorted_with_ties():
    g = build_graph(4, [(1, 2), (3, 4)])
    order = derive_ordering(g, {1: 0.5, 2: 0.5, 3: 0.1, 4: 0.9})
    assert order == [3, 1, 2, 4]


def test_threshold_degree_8_empty_high_group():
    # ln(8)/8**(1/3) is above 1, so every weight lands in the low group
    assert split_threshold(8) > 1.0
    g = build_graph(9, [(1, v) for v in range(2, 10)])
    checks = check_conditions(g, sample_weights(g, 3), 2)
    for res in checks.values():
        assert res["big_backward"] is None and res["backward_span"] is None


def test_threshold_degree_95():
    assert split_threshold(95) < 1.0


def test_uncheckable_vertices_skipped():
    g = build_graph(4, [(1, 2), (2, 3), (3, 4)])  # all big_nbr counts tiny
    stats = degree_stats(g)
    cutoff = g.max_degree ** (1 / 3) * math.log(g.max_degree)
    checks = check_conditions(g, sample_weights(g, 1), 2)
    assert set(checks) == {v for v in g.vertices()
                           if stats.big_nbr_count[v] >= cutoff}


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("radius", [2, 3])
def test_counts_match_distance_table_oracle(seed, radius):
    g = random_graph(35, 0.12, seed)
    weights = sample_weights(g, seed + 100)
    oracle = ordering_counts_oracle(g, weights, radius)
    assert condition_counts(g, weights, radius) == oracle


def test_resample_vacuous_zero_rounds():
    # no vertex reaches the big-neighbour cutoff: nothing to check
    g = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    g2 = random_graph(12, 0.5, 0)
    for graph in (g, g2):
        stats = degree_stats(graph)
        cutoff = graph.max_degree ** (1 / 3) * math.log(graph.max_degree)
        if not checkable_vertices(graph, stats):
            cert = resample_until_valid(graph, 2, 0)
            assert cert.valid and cert.resample_rounds == 0


def test_resample_deterministic():
    g = random_graph(30, 0.15, 4)
    a = resample_until_valid(g, 2, 9)
    b = resample_until_valid(g, 2, 9)
    assert a.weights == b.weights
    assert a.ordering == b.ordering
    assert a.resample_rounds == b.resample_rounds
    assert a.checks == b.checks


def test_certificate_partition():
    g = random_graph(25, 0.2, 2)
    cert = resample_until_valid(g, 2, 5)
    assert cert.low_set | cert.high_set == frozenset(g.vertices())
    assert not (cert.low_set & cert.high_set)
    xs = [cert.weights[v] for v in cert.ordering]
    assert xs == sorted(xs)
    assert sorted(cert.ordering) == list(g.vertices())


def test_budget_exhaustion_flagged():
    # disjoint edges: the backward-span condition needs a weight >= 1,
    # which a uniform draw never produces, so the budget must run out
    g = build_graph(4, [(1, 2), (3, 4)])
    cert = resample_until_valid(g, 2, 1, max_rounds=20)
    assert not cert.valid
    assert cert.resample_rounds == 20
    assert cert.notes


def test_edgeless_graph():
    g = build_graph(3, [])
    cert = resample_until_valid(g, 2, 7)
    assert cert.valid and cert.checks == {}
