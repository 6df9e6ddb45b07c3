"""Independent reference implementations used as test oracles.

Everything here recomputes expected values from first principles (edge lists,
set scans, exhaustive enumeration) without touching the library's code paths,
so a bug in the implementation cannot hide in its own oracle.
"""

from __future__ import annotations

import math
import random
from collections import Counter

Edge = tuple[str, str, int]


def random_graph(rng: random.Random, max_n: int = 8, p: float = 0.5,
                 max_w: int = 5) -> list[Edge]:
    """Random undirected graph as an edge list with integer weights 1..max_w."""
    n = rng.randint(2, max_n)
    nodes = [f"n{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((nodes[i], nodes[j], rng.randint(1, max_w)))
    return edges


def neighbors_from_edges(edges: list[Edge]) -> dict[str, dict[str, int]]:
    adj: dict[str, dict[str, int]] = {}
    for u, v, w in edges:
        adj.setdefault(u, {})[v] = w
        adj.setdefault(v, {})[u] = w
    return adj


def distinctiveness_direct(edges: list[Edge], word: str) -> float:
    """Direct-sum evaluation of weighted distinctiveness from the edge list."""
    adj = neighbors_from_edges(edges)
    if word not in adj:
        return 0.0
    n = len(adj)
    degree = {node: len(nbrs) for node, nbrs in adj.items()}
    return sum(w * math.log10((n - 1) / degree[j]) for j, w in adj[word].items())


def tfidf_scores(token_lists: list[list[str]]) -> list[tuple[float, float]]:
    """Per-document (average, sum) TF-IDF novelty by set-membership scan."""
    n_docs = len(token_lists)
    results = []
    for tokens in token_lists:
        if not tokens:
            results.append((0.0, 0.0))
            continue
        counts = Counter(tokens)
        total = 0.0
        for word, f_w in counts.items():
            containing = sum(1 for other in token_lists if word in other)
            total += f_w * math.log(n_docs / containing)
        results.append((total / len(tokens), total))
    return results


def all_partitions(items: list):
    """Every set partition of the items (restricted growth enumeration)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in all_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def modularity_ref(edges: list[Edge], partition: list[set[str]] | list[list[str]],
                   resolution: float = 1.0) -> float:
    """Weighted modularity evaluated straight from the edge list."""
    m = sum(w for _, _, w in edges)
    if m == 0:
        return 0.0
    degree: Counter[str] = Counter()
    for u, v, w in edges:
        degree[u] += w
        degree[v] += w
    q = 0.0
    for cluster in partition:
        members = set(cluster)
        in_w = sum(w for u, v, w in edges if u in members and v in members)
        d_c = sum(degree[node] for node in members)
        q += in_w / m - resolution * (d_c / (2 * m)) ** 2
    return q


def max_modularity_exhaustive(edges: list[Edge], resolution: float = 1.0) -> float:
    """Best Q over every partition of the nodes touched by the edge list."""
    nodes = sorted({n for u, v, _ in edges for n in (u, v)})
    return max(
        modularity_ref(edges, partition, resolution)
        for partition in all_partitions(nodes)
    )
