import math
import random

import pytest

from brandscore.centrality import (
    GraphTooLargeError,
    brute_force_betweenness,
    centrality_table,
    distinctiveness,
    distinctiveness_all,
    prevalence,
    weighted_betweenness,
)
from brandscore.graph import CoocGraph, build_graph_from_tokens

from oracles import distinctiveness_direct, random_graph


def graph_from(edges):
    return CoocGraph.from_edges(edges)


# ---------------------------------------------------------------- prevalence

def test_prevalence_counts_and_absent():
    g = build_graph_from_tokens([["gucci", "bag"], ["gucci"]], window=2)
    assert prevalence(g, "gucci") == 2
    assert prevalence(g, "bag") == 1
    assert prevalence(g, "missing") == 0


def test_prevalence_matches_token_scan_oracle():
    rng = random.Random(41)
    vocab = [f"w{i}" for i in range(30)]
    token_lists = [rng.choices(vocab, k=rng.randint(1, 20)) for _ in range(1000)]
    g = build_graph_from_tokens(token_lists, window=5)
    for word in vocab:
        scan = sum(toks.count(word) for toks in token_lists)
        assert prevalence(g, word) == scan


# ------------------------------------------------------------ distinctiveness

def test_isolated_and_absent_word():
    g = graph_from([("a", "b", 1)])
    assert distinctiveness(g, "zzz") == 0.0


def test_star_closed_form():
    g = graph_from([("hub", f"l{i}", 1) for i in range(4)])
    assert distinctiveness(g, "hub") == pytest.approx(4 * math.log10(4), abs=1e-12)
    for leaf in ("l0", "l1", "l2", "l3"):
        assert distinctiveness(g, leaf) == pytest.approx(0.0, abs=1e-12)


def test_random_graphs_match_direct_sum_oracle():
    rng = random.Random(101)
    for _ in range(200):
        edges = random_graph(rng, max_n=8)
        if not edges:
            continue
        g = graph_from(edges)
        for node in g.nodes:
            assert distinctiveness(g, node) == pytest.approx(
                distinctiveness_direct(edges, node), abs=1e-9
            )


def test_distinctiveness_all_agrees_with_single():
    rng = random.Random(55)
    edges = random_graph(rng, max_n=8, p=0.7)
    g = graph_from(edges)
    table = distinctiveness_all(g)
    for node in g.nodes:
        assert table[node] == pytest.approx(distinctiveness(g, node), abs=1e-12)


def test_new_leaf_neighbor_strictly_increases():
    edges = [("a", "b", 1), ("b", "c", 1), ("a", "c", 2)]
    g1 = graph_from(edges)
    g2 = graph_from(edges + [("a", "leaf", 1)])
    assert distinctiveness(g2, "a") > distinctiveness(g1, "a")


# ---------------------------------------------------------------- betweenness

def test_path_graph():
    g = graph_from([("a", "b", 1), ("b", "c", 1)])
    bc = weighted_betweenness(g)
    assert bc == {"a": 0.0, "b": 1.0, "c": 0.0}


def test_star_center_is_pairs_count():
    g = graph_from([("hub", f"l{i}", 1) for i in range(4)])
    bc = weighted_betweenness(g)
    assert bc["hub"] == pytest.approx(6.0, abs=1e-12)  # C(4,2)


def test_triangle_all_zero():
    g = graph_from([("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])
    assert all(v == 0.0 for v in weighted_betweenness(g).values())


def test_four_cycle_split_credit():
    g = graph_from([("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)])
    bc = weighted_betweenness(g)
    assert all(v == pytest.approx(0.5, abs=1e-12) for v in bc.values())


def test_weights_reroute_shortest_paths():
    # heavy edges are short: with w(a,c)=1 the direct a-c link costs 1,
    # while a-b-c costs 1/2 + 1/2 = 1, so both routes tie
    g = graph_from([("a", "b", 2), ("b", "c", 2), ("a", "c", 1)])
    bc = weighted_betweenness(g)
    assert bc["b"] == pytest.approx(0.5, abs=1e-12)
    oracle = brute_force_betweenness(g)
    assert bc["b"] == pytest.approx(oracle["b"], abs=1e-12)


def test_leaves_have_zero_betweenness():
    rng = random.Random(202)
    for _ in range(50):
        edges = random_graph(rng, max_n=7, p=0.6)
        if not edges:
            continue
        g = graph_from(edges)
        bc = weighted_betweenness(g)
        for node in g.nodes:
            if g.degree(node) == 1:
                assert bc[node] == pytest.approx(0.0, abs=1e-12)


def test_disconnected_components_handled():
    g = graph_from([("a", "b", 1), ("b", "c", 1), ("x", "y", 1)])
    bc = weighted_betweenness(g)
    assert bc["b"] == 1.0 and bc["x"] == 0.0 and bc["y"] == 0.0


def test_scale_invariance_of_weights():
    rng = random.Random(303)
    edges = random_graph(rng, max_n=8, p=0.6)
    g1 = graph_from(edges)
    for k in (2, 7):
        g2 = graph_from([(u, v, w * k) for u, v, w in edges])
        b1 = weighted_betweenness(g1)
        b2 = weighted_betweenness(g2)
        for node in b1:
            assert b2[node] == pytest.approx(b1[node], abs=1e-12)


def test_float_weights_fall_back_to_epsilon_mode():
    g = graph_from([("a", "b", 0.5), ("b", "c", 0.5)])
    assert weighted_betweenness(g)["b"] == pytest.approx(1.0, abs=1e-12)


def test_parallel_matches_serial():
    rng = random.Random(404)
    edges = random_graph(rng, max_n=8, p=0.8)
    g = graph_from(edges)
    serial = weighted_betweenness(g, processes=1)
    parallel = weighted_betweenness(g, processes=2)
    for node in serial:
        assert parallel[node] == pytest.approx(serial[node], abs=1e-12)


def test_unknown_distance_transform_rejected():
    g = graph_from([("a", "b", 1)])
    with pytest.raises(ValueError):
        weighted_betweenness(g, distance_transform="negative_log")


# ------------------------------------------------------------------- oracle

def test_bruteforce_path_and_refusal():
    g = graph_from([("a", "b", 1), ("b", "c", 1)])
    assert brute_force_betweenness(g) == {"a": 0.0, "b": 1.0, "c": 0.0}
    big = graph_from([(f"n{i}", f"n{i + 1}", 1) for i in range(11)])
    with pytest.raises(GraphTooLargeError):
        brute_force_betweenness(big)


def test_oracle_agreement_random_suite():
    rng = random.Random(1234)
    checked = 0
    for _ in range(200):
        edges = random_graph(rng, max_n=8)
        if not edges:
            continue
        g = graph_from(edges)
        fast = weighted_betweenness(g)
        slow = brute_force_betweenness(g)
        for node in g.nodes:
            assert fast[node] == pytest.approx(slow[node], abs=1e-9)
        checked += 1
    assert checked >= 150


# ----------------------------------------------------------------- the table

def test_centrality_table_rows():
    g = build_graph_from_tokens([["a", "b", "c"], ["a", "b"]], window=2)
    rows = {r.word: r for r in centrality_table(g)}
    assert rows["a"].prevalence == 2
    assert rows["b"].connectivity == pytest.approx(1.0)
    assert set(rows) == set(g.nodes)
