"""Discourse topics via modularity-based clustering of the co-occurrence network.

Greedy modularity optimization (node-move sweeps followed by graph
aggregation, repeated until no move improves), with the node visiting order
drawn from an explicit seed so pipelines reproduce bit-identically. Cluster
keywords are ranked by weighted degree times the share of a word's link
weight staying inside its cluster.
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from dataclasses import dataclass, field

from .graph import CoocGraph

logger = logging.getLogger(__name__)


@dataclass
class LouvainResult:
    communities: list[set[str]]
    q: float
    pass_history: list[float]  # modularity on the input graph after each pass


@dataclass
class TopicCluster:
    """A community of words with its share of the discourse and brand links."""

    id: int
    members: set[str]
    relevance: float
    keywords: list[tuple[str, float]] = field(default_factory=list)
    brand_assoc: dict[str, float] = field(default_factory=dict)


def modularity(g: CoocGraph, communities, resolution: float = 1.0) -> float:
    """Weighted modularity Q = sum over clusters of e_c/m - r*(d_c/2m)^2."""
    m = g.total_weight()
    if m == 0:
        return 0.0
    q = 0.0
    for comm in communities:
        members = set(comm)
        in_w = 0.0
        d_c = 0.0
        for u in sorted(members):
            nbrs = g.neighbors(u)
            d_c += sum(nbrs.values())
            in_w += sum(w for v, w in sorted(nbrs.items()) if v in members and u < v)
        q += in_w / m - resolution * (d_c / (2.0 * m)) ** 2
    return q


def _move_nodes(adj, self_w, k, m, comm_tot, order, resolution):
    """One local-move phase; returns the community assignment and move count."""
    n = len(adj)
    comm = list(range(n))
    moves = 0
    improved = True
    while improved:
        improved = False
        for v in order:
            cv = comm[v]
            w_to: dict[int, float] = defaultdict(float)
            for u, w in adj[v].items():
                w_to[comm[u]] += w
            comm_tot[cv] -= k[v]
            best_comm = cv
            best_gain = w_to.get(cv, 0.0) / m - resolution * comm_tot[cv] * k[v] / (2.0 * m * m)
            for c in sorted(w_to):
                if c == cv:
                    continue
                gain = w_to[c] / m - resolution * comm_tot[c] * k[v] / (2.0 * m * m)
                if gain > best_gain:
                    best_gain = gain
                    best_comm = c
            comm[v] = best_comm
            comm_tot[best_comm] += k[v]
            if best_comm != cv:
                improved = True
                moves += 1
    return comm, moves


def _aggregate(adj, self_w, comm, n_comm):
    new_adj: list[dict[int, float]] = [dict() for _ in range(n_comm)]
    new_self = [0.0] * n_comm
    for v, nbrs in enumerate(adj):
        cv = comm[v]
        new_self[cv] += self_w[v]
        for u, w in nbrs.items():
            if v < u:
                cu = comm[u]
                if cu == cv:
                    new_self[cv] += w
                else:
                    new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
                    new_adj[cu][cv] = new_adj[cv][cu]
    return new_adj, new_self


def louvain(g: CoocGraph, seed: int = 42, resolution: float = 1.0,
            restarts: int = 4) -> LouvainResult:
    """Partition the graph into communities by greedy modularity optimization.

    The greedy node moves depend on visiting order, so the optimization runs
    ``restarts`` times with orders drawn from the seed and the best-Q result
    is returned. Deterministic given the seed: orders come from a seeded RNG
    and all tie-breaks are fixed. An edgeless graph returns every node as its
    own cluster with Q = 0.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    best: LouvainResult | None = None
    for attempt in range(restarts):
        result = _louvain_once(g, seed * 1_000_003 + attempt, resolution)
        if best is None or result.q > best.q:
            best = result
    return best


def _louvain_once(g: CoocGraph, order_seed: int, resolution: float) -> LouvainResult:
    nodes = sorted(g.adj)
    if not nodes or g.number_of_edges() == 0:
        return LouvainResult([{n} for n in nodes], 0.0, [0.0])

    index = {n: i for i, n in enumerate(nodes)}
    adj: list[dict[int, float]] = [dict() for _ in nodes]
    for u, v, w in g.edges():
        adj[index[u]][index[v]] = float(w)
        adj[index[v]][index[u]] = float(w)
    self_w = [0.0] * len(nodes)
    m = g.total_weight()

    rng = random.Random(order_seed)
    membership = list(range(len(nodes)))  # original node -> current community
    history: list[float] = []

    while True:
        k = [sum(nbrs.values()) + 2.0 * s for nbrs, s in zip(adj, self_w)]
        comm_tot = k[:]
        order = list(range(len(adj)))
        rng.shuffle(order)
        comm, moves = _move_nodes(adj, self_w, k, m, comm_tot, order, resolution)

        # renumber communities compactly, in order of first appearance
        relabel: dict[int, int] = {}
        for v in range(len(adj)):
            relabel.setdefault(comm[v], len(relabel))
        comm = [relabel[c] for c in comm]
        membership = [comm[c] for c in membership]

        groups: dict[int, set[str]] = defaultdict(set)
        for node, c in zip(nodes, membership):
            groups[c].add(node)
        communities = [groups[c] for c in sorted(groups)]
        history.append(modularity(g, communities, resolution))

        if moves == 0 or len(relabel) == len(adj):
            communities.sort(key=min)
            return LouvainResult(communities, history[-1], history)
        adj, self_w = _aggregate(adj, self_w, comm, len(relabel))


def keyword_rank(g: CoocGraph, cluster: set[str], top_k: int) -> list[tuple[str, float]]:
    """Rank cluster words by weighted degree times internal-link share.

    score(w) = weighted_degree(w) * internal_weight(w) / total_weight(w),
    where internal_weight sums w's edges to other cluster members. Descending
    by score, ties broken lexicographically.
    """
    if not cluster:
        raise ValueError("cluster must be non-empty")
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    scored = []
    members = set(cluster)
    for w in sorted(members):
        nbrs = g.neighbors(w)
        total = sum(nbrs.values())
        if total == 0:
            scored.append((w, 0.0))
            continue
        internal = sum(wt for v, wt in sorted(nbrs.items()) if v in members)
        scored.append((w, total * (internal / total)))
    scored.sort(key=lambda ws: (-ws[1], ws[0]))
    return scored[:top_k]


def topic_relevance(g: CoocGraph, partition: list[set[str]]) -> list[float]:
    """Weighted-degree share of each cluster; shares sum to 1.

    Zeros (with a warning) on a graph with no edge weight at all.
    """
    cluster_weight = [
        sum(g.weighted_degree(w) for w in sorted(c)) for c in partition
    ]
    total = sum(cluster_weight)
    if total == 0:
        logger.warning("topic_relevance: graph has no edge weight, shares undefined")
        return [0.0] * len(partition)
    return [cw / total for cw in cluster_weight]


def brand_topic_assoc(g: CoocGraph, brand: str, partition: list[set[str]]) -> list[float]:
    """Share of the brand's link weight going into each cluster.

    The brand node itself never counts as a link target. All zeros (with a
    warning) when the brand is absent or isolated.
    """
    nbrs = g.neighbors(brand)
    total = sum(nbrs.values())
    if total == 0:
        logger.warning("brand_topic_assoc: brand %r absent or isolated", brand)
        return [0.0] * len(partition)
    shares = []
    for cluster in partition:
        into = sum(w for v, w in sorted(nbrs.items()) if v in cluster and v != brand)
        shares.append(into / total)
    return shares


def build_topic_clusters(g: CoocGraph, brands: list[str], seed: int = 42,
                         resolution: float = 1.0, keyword_top_k: int = 10) -> list[TopicCluster]:
    """Full topic report for one slice: clusters with relevance, ranked
    keywords and per-brand association shares, most relevant topic first."""
    result = louvain(g, seed=seed, resolution=resolution)
    relevance = topic_relevance(g, result.communities)
    per_brand = {b: brand_topic_assoc(g, b, result.communities) for b in brands}

    ranked = sorted(
        range(len(result.communities)),
        key=lambda i: (-relevance[i], min(result.communities[i])),
    )
    clusters = []
    for new_id, i in enumerate(ranked, start=1):
        members = result.communities[i]
        clusters.append(TopicCluster(
            id=new_id,
            members=members,
            relevance=relevance[i],
            keywords=keyword_rank(g, members, keyword_top_k),
            brand_assoc={b: per_brand[b][i] for b in brands},
        ))
    return clusters
