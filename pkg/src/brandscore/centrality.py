"""Per-node measures behind the brand score components: occurrence frequency
(prevalence), distinctiveness centrality (diversity) and weighted betweenness
centrality (connectivity), plus a path-enumeration oracle for testing.

Betweenness runs Brandes' algorithm over distances d(u,v) = 1/weight(u,v).
On small graphs with integer weights, distances are kept as exact rationals so
equal-length shortest paths are never misclassified by float rounding; larger
or non-integer graphs fall back to floats with a 1e-12 tie tolerance.
"""

from __future__ import annotations

import logging
import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush

logger = logging.getLogger(__name__)

# largest integer-weight graph still processed with exact rational distances
EXACT_NODE_LIMIT = 256

_EPS = 1e-12

DISTANCE_TRANSFORMS = ("inverse_weight",)


class GraphTooLargeError(ValueError):
    """Raised when the brute-force oracle is asked to enumerate too large a graph."""


@dataclass
class CentralityRow:
    word: str
    prevalence: int
    diversity: float
    connectivity: float


def prevalence(g, word: str) -> int:
    """Occurrence count of the word across the slice's documents; 0 if absent."""
    return g.node_freq.get(word, 0)


def distinctiveness(g, word: str) -> float:
    """Weighted distinctiveness: sum over neighbors j of w(word,j) * log10((n-1)/deg(j)).

    Connections to rarely-connected neighbors count more; a link to a neighbor
    connected to everything contributes nothing. 0 for isolated/absent words.
    """
    if word not in g.adj:
        logger.warning("distinctiveness: %r not in graph, defined as 0", word)
        return 0.0
    n = g.number_of_nodes()
    total = 0.0
    for j, w in sorted(g.adj[word].items()):
        total += w * math.log10((n - 1) / len(g.adj[j]))
    return total


def distinctiveness_all(g) -> dict[str, float]:
    """Distinctiveness for every node in one O(E) sweep."""
    n = g.number_of_nodes()
    if n <= 1:
        return {node: 0.0 for node in g.adj}
    log_term = {j: math.log10((n - 1) / len(nbrs)) for j, nbrs in g.adj.items()}
    return {
        node: sum(w * log_term[j] for j, w in sorted(nbrs.items()))
        for node, nbrs in g.adj.items()
    }


def _edge_lengths(g, exact: bool) -> dict[str, list[tuple[str, object]]]:
    """Adjacency with 1/weight edge lengths, neighbor order fixed by sorting."""
    lengths: dict[str, list[tuple[str, object]]] = {}
    for node, nbrs in g.adj.items():
        if exact:
            lengths[node] = [(j, Fraction(1, int(w))) for j, w in sorted(nbrs.items())]
        else:
            lengths[node] = [(j, 1.0 / w) for j, w in sorted(nbrs.items())]
    return lengths


def _use_exact(g, exact) -> bool:
    if exact == "auto":
        return g.number_of_nodes() <= EXACT_NODE_LIMIT and all(
            float(w).is_integer() for _, _, w in g.edges()
        )
    return bool(exact)


def _single_source_pass(lengths, source, exact: bool):
    """Dijkstra with shortest-path counting; returns finalize order, preds, sigma."""
    zero = Fraction(0) if exact else 0.0
    eps = 0 if exact else _EPS
    dist: dict[str, object] = {}
    seen = {source: zero}
    sigma = {source: 1}
    preds: dict[str, list[str]] = {source: []}
    heap = [(zero, source)]
    order: list[str] = []
    while heap:
        d, v = heappop(heap)
        if v in dist:
            continue
        dist[v] = d
        order.append(v)
        sv = sigma[v]
        for u, length in lengths[v]:
            if u in dist:
                continue
            nd = d + length
            old = seen.get(u)
            if old is None or nd < old - eps:
                seen[u] = nd
                heappush(heap, (nd, u))
                sigma[u] = sv
                preds[u] = [v]
            elif nd <= old + eps:
                sigma[u] += sv
                preds[u].append(v)
    return order, preds, sigma


def _accumulate(bc: dict[str, float], order, preds, sigma, source) -> None:
    delta = dict.fromkeys(order, 0.0)
    for w in reversed(order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
        if w != source:
            bc[w] += delta[w]


def _betweenness_chunk(lengths, sources, exact: bool, all_nodes) -> dict[str, float]:
    bc = dict.fromkeys(all_nodes, 0.0)
    for s in sources:
        order, preds, sigma = _single_source_pass(lengths, s, exact)
        _accumulate(bc, order, preds, sigma, s)
    return bc


_worker_state: dict = {}


def _init_worker(lengths, exact, all_nodes):
    _worker_state["args"] = (lengths, exact, all_nodes)


def _run_chunk(sources):
    lengths, exact, all_nodes = _worker_state["args"]
    return _betweenness_chunk(lengths, sources, exact, all_nodes)


def weighted_betweenness(g, distance_transform: str = "inverse_weight",
                         exact="auto", processes: int = 1) -> dict[str, float]:
    """Unnormalized weighted betweenness for every node.

    Each unordered node pair is counted once; when several shortest paths tie,
    credit splits fractionally between them. Unreachable pairs contribute 0.
    ``processes`` > 1 distributes the independent single-source passes over a
    process pool; results are deterministic for a fixed process count.
    """
    if distance_transform not in DISTANCE_TRANSFORMS:
        raise ValueError(f"unknown distance transform {distance_transform!r}")
    use_exact = _use_exact(g, exact)
    lengths = _edge_lengths(g, use_exact)
    nodes = sorted(g.adj)

    if processes <= 1 or len(nodes) < 4 * processes:
        bc = _betweenness_chunk(lengths, nodes, use_exact, nodes)
    else:
        chunks = [nodes[i::processes] for i in range(processes)]
        with multiprocessing.Pool(
            processes, initializer=_init_worker, initargs=(lengths, use_exact, nodes)
        ) as pool:
            partials = pool.map(_run_chunk, chunks)
        bc = dict.fromkeys(nodes, 0.0)
        for partial in partials:  # fixed chunk order keeps float sums deterministic
            for node, value in partial.items():
                bc[node] += value

    return {node: value / 2.0 for node, value in bc.items()}


def brute_force_betweenness(g, max_nodes: int = 10) -> dict[str, float]:
    """Reference betweenness by exhaustive simple-path enumeration.

    For every unordered pair, all simple paths are enumerated, the
    minimum-distance ones kept, and each interior node credited
    1/(number of minimal paths). Test oracle only; refuses graphs with more
    than ``max_nodes`` nodes.
    """
    n = g.number_of_nodes()
    if n > max_nodes:
        raise GraphTooLargeError(f"graph has {n} nodes, oracle capped at {max_nodes}")
    use_exact = all(float(w).is_integer() for _, _, w in g.edges())
    lengths = _edge_lengths(g, use_exact)
    eps = 0 if use_exact else _EPS
    nodes = sorted(g.adj)
    bc = dict.fromkeys(nodes, 0.0)

    for si in range(len(nodes)):
        for ti in range(si + 1, len(nodes)):
            s, t = nodes[si], nodes[ti]
            best: list[object] = [None]
            best_paths: list[list[str]] = []

            def dfs(v, dist, path):
                if v == t:
                    if best[0] is None or dist < best[0] - eps:
                        best[0] = dist
                        best_paths.clear()
                        best_paths.append(list(path))
                    elif dist <= best[0] + eps:
                        best_paths.append(list(path))
                    return
                for u, length in lengths[v]:
                    if u in path_set:
                        continue
                    nd = dist + length
                    if best[0] is not None and nd > best[0] + eps:
                        continue
                    path.append(u)
                    path_set.add(u)
                    dfs(u, nd, path)
                    path.pop()
                    path_set.remove(u)

            path_set = {s}
            dfs(s, Fraction(0) if use_exact else 0.0, [s])
            if not best_paths:
                continue
            credit = 1.0 / len(best_paths)
            for path in best_paths:
                for interior in path[1:-1]:
                    bc[interior] += credit
    return bc


def centrality_table(g, processes: int = 1) -> list[CentralityRow]:
    """All three measures for every node of the slice graph, sorted by word."""
    diversity = distinctiveness_all(g)
    connectivity = weighted_betweenness(g, processes=processes)
    return [
        CentralityRow(
            word=node,
            prevalence=g.node_freq.get(node, 0),
            diversity=diversity[node],
            connectivity=connectivity[node],
        )
        for node in sorted(g.adj)
    ]
