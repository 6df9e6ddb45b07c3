"""Undirected weighted word co-occurrence network for one time slice.

Nodes are processed word types; an edge's weight counts how many position
pairs of the two words fell inside the sliding window, across all documents
of the slice. Co-occurrence never crosses document boundaries.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .corpus import Document


@dataclass
class CoocGraph:
    """Symmetric adjacency plus per-word occurrence counts.

    ``node_freq`` counts every token occurrence in the slice, including words
    whose edges were all pruned; the node set contains only words with at
    least one surviving edge.
    """

    adj: dict[str, dict[str, float]] = field(default_factory=dict)
    node_freq: dict[str, int] = field(default_factory=dict)

    @property
    def nodes(self) -> list[str]:
        return list(self.adj)

    def __contains__(self, word: str) -> bool:
        return word in self.adj

    def number_of_nodes(self) -> int:
        return len(self.adj)

    def number_of_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj.values()) // 2

    def edges(self) -> Iterator[tuple[str, str, float]]:
        """Yield each undirected edge once as (u, v, weight) with u < v."""
        for u, nbrs in self.adj.items():
            for v, w in nbrs.items():
                if u < v:
                    yield u, v, w

    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges())

    def neighbors(self, word: str) -> dict[str, float]:
        return self.adj.get(word, {})

    def degree(self, word: str) -> int:
        return len(self.adj.get(word, {}))

    def weighted_degree(self, word: str) -> float:
        return sum(self.adj.get(word, {}).values())

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str, float]],
                   node_freq: dict[str, int] | None = None) -> "CoocGraph":
        """Build a graph directly from (u, v, weight) triples (test helper)."""
        g = cls()
        for u, v, w in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r} not allowed")
            if w <= 0:
                raise ValueError(f"edge weight must be positive, got {w}")
            g.adj.setdefault(u, {})[v] = g.adj.get(u, {}).get(v, 0) + w
            g.adj.setdefault(v, {})[u] = g.adj[u][v]
        g.node_freq = dict(node_freq) if node_freq else {n: 1 for n in g.adj}
        return g


def build_graph(docs: list[Document], window: int = 7, min_edge_weight: int = 1) -> CoocGraph:
    """Count within-window co-occurrences over preprocessed documents.

    Each unordered pair of distinct tokens whose positions differ by less
    than ``window`` adds 1 to the pair's weight (positional counting: a pair
    appearing twice inside one window counts twice). Edges below
    ``min_edge_weight`` are dropped, then isolated nodes pruned.
    """
    return build_graph_from_tokens([d.tokens for d in docs], window, min_edge_weight)


def build_graph_from_tokens(token_lists: list[list[str]], window: int = 7,
                            min_edge_weight: int = 1) -> CoocGraph:
    """Same as build_graph, over bare token streams."""
    if window < 2:
        raise ValueError("window must be >= 2")
    if min_edge_weight < 1:
        raise ValueError("min_edge_weight must be >= 1")

    freq: Counter[str] = Counter()
    pair_counts: Counter[tuple[str, str]] = Counter()
    for toks in token_lists:
        freq.update(toks)
        n = len(toks)
        for i in range(n):
            a = toks[i]
            for j in range(i + 1, min(i + window, n)):
                b = toks[j]
                if a == b:
                    continue
                pair_counts[(a, b) if a < b else (b, a)] += 1

    g = CoocGraph(node_freq=dict(freq))
    for (u, v), w in sorted(pair_counts.items()):
        if w >= min_edge_weight:
            g.adj.setdefault(u, {})[v] = w
            g.adj.setdefault(v, {})[u] = w
    return g


@dataclass
class DegreeStats:
    degree: int
    weighted_degree: float


def degree_stats(g: CoocGraph) -> dict[str, DegreeStats]:
    """Distinct-neighbor count and incident-weight sum for every node."""
    return {
        node: DegreeStats(degree=len(nbrs), weighted_degree=sum(nbrs.values()))
        for node, nbrs in g.adj.items()
    }


def write_edge_csv(g: CoocGraph, path: str | Path, fmt=str) -> None:
    """Export the edge list as source,target,weight CSV, sorted for determinism."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["source", "target", "weight"])
        for u, v, w in sorted(g.edges()):
            writer.writerow([u, v, fmt(w)])


def write_node_json(g: CoocGraph, path: str | Path) -> None:
    """Export the node table as a JSON list of {word, frequency} records."""
    table = [{"word": n, "frequency": g.node_freq.get(n, 0)} for n in sorted(g.adj)]
    Path(path).write_text(json.dumps(table, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
