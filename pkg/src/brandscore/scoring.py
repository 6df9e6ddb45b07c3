"""Compose the Semantic Brand Score and its companion brand reports.

Per slice, the three component measures (prevalence, diversity, connectivity)
are standardized as z = (x - mean) / sd with mean and population SD taken over
ALL nodes of the slice graph, and the brand score is the plain sum of the
three z values. Association, sentiment and image-dimension reports read the
brand's direct links in the same graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .centrality import CentralityRow, centrality_table
from .graph import CoocGraph
from .lexicon import DimensionLexicon, SentimentLexicon

logger = logging.getLogger(__name__)


@dataclass
class Components:
    prevalence: float
    diversity: float
    connectivity: float


@dataclass
class BrandScore:
    """Per-brand, per-slice record: raw components, z-scores and their sum."""

    brand: str
    slice_label: str
    raw: Components
    z: Components
    sbs: float


@dataclass
class AssociationEntry:
    word: str
    weight: float
    sentiment: float | None = None


@dataclass
class AssociationReport:
    """Direct neighbors of the brand node, strongest edges first."""

    brand: str
    slice_label: str
    entries: list[AssociationEntry] = field(default_factory=list)


@dataclass
class WeightedSentiment:
    """Edge-weight-weighted mean sentiment of a brand's associations.

    ``matched`` counts the neighbors covered by the lexicon; when it is 0 the
    value is 0 by definition.
    """

    value: float
    matched: int

    @property
    def covered(self) -> bool:
        return self.matched > 0


def _zscores(values: np.ndarray) -> tuple[np.ndarray, float, float]:
    """z-scores over the node population; zero-variance components give all 0."""
    mean = float(values.mean()) if values.size else 0.0
    sd = float(values.std()) if values.size else 0.0
    if sd == 0.0:
        return np.zeros_like(values, dtype=float), mean, sd
    return (values - mean) / sd, mean, sd


def score_slice(g: CoocGraph, brands: list[str], slice_label: str = "",
                rows: list[CentralityRow] | None = None,
                processes: int = 1) -> list[BrandScore]:
    """Brand scores for one slice graph.

    The centrality table covers every node; brands absent from the graph get
    raw zeros, standardized against the same node population. An empty graph
    yields all-zero scores with a warning.
    """
    if rows is None:
        rows = centrality_table(g, processes=processes)
    if not rows:
        logger.warning("score_slice: empty graph in slice %r, all scores zero", slice_label)
        return [
            BrandScore(b, slice_label, Components(0.0, 0.0, 0.0), Components(0.0, 0.0, 0.0), 0.0)
            for b in brands
        ]

    words = [r.word for r in rows]
    prevalence = np.array([r.prevalence for r in rows], dtype=float)
    diversity = np.array([r.diversity for r in rows], dtype=float)
    connectivity = np.array([r.connectivity for r in rows], dtype=float)

    stats = {}
    for name, values in (("prevalence", prevalence), ("diversity", diversity),
                         ("connectivity", connectivity)):
        _, mean, sd = _zscores(values)
        stats[name] = (mean, sd)

    index = {w: i for i, w in enumerate(words)}
    scores = []
    for brand in brands:
        i = index.get(brand)
        raw = Components(
            prevalence=float(prevalence[i]) if i is not None else 0.0,
            diversity=float(diversity[i]) if i is not None else 0.0,
            connectivity=float(connectivity[i]) if i is not None else 0.0,
        )
        z = Components(
            prevalence=_standardize(raw.prevalence, *stats["prevalence"]),
            diversity=_standardize(raw.diversity, *stats["diversity"]),
            connectivity=_standardize(raw.connectivity, *stats["connectivity"]),
        )
        scores.append(BrandScore(brand, slice_label, raw, z,
                                 sbs=z.prevalence + z.diversity + z.connectivity))
    return scores


def _standardize(x: float, mean: float, sd: float) -> float:
    return 0.0 if sd == 0.0 else (x - mean) / sd


@dataclass
class TrendSeries:
    brand: str
    points: list[tuple[str, float]]
    mean: float


def trend(scores: list[BrandScore]) -> dict[str, TrendSeries]:
    """Per-brand (slice label, sbs) series in input order, plus the mean."""
    by_brand: dict[str, list[tuple[str, float]]] = {}
    for s in scores:
        by_brand.setdefault(s.brand, []).append((s.slice_label, s.sbs))
    return {
        brand: TrendSeries(brand, points, float(np.mean([v for _, v in points])))
        for brand, points in by_brand.items()
    }


def associations(g: CoocGraph, brand: str, top_k: int, slice_label: str = "",
                 sentiment_lexicon: SentimentLexicon | None = None) -> AssociationReport:
    """The brand's neighbors ranked by edge weight (descending), truncated to
    top_k; ties broken lexicographically. Absent brand gives an empty report."""
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    if brand not in g:
        logger.warning("associations: brand %r not in slice %r graph", brand, slice_label)
        return AssociationReport(brand, slice_label)
    ranked = sorted(g.neighbors(brand).items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]
    entries = [
        AssociationEntry(
            word=w, weight=wt,
            sentiment=sentiment_lexicon.lookup(w) if sentiment_lexicon else None,
        )
        for w, wt in ranked
    ]
    return AssociationReport(brand, slice_label, entries)


def association_sentiment(rep: AssociationReport, lex: SentimentLexicon) -> WeightedSentiment:
    """Edge-weight-weighted mean lexicon score over the covered neighbors.

    Neighbors the lexicon does not cover are excluded from both numerator and
    denominator; with no covered neighbor the value is 0.
    """
    num = 0.0
    den = 0.0
    matched = 0
    for entry in rep.entries:
        score = lex.lookup(entry.word)
        if score is None:
            continue
        num += entry.weight * score
        den += entry.weight
        matched += 1
    if matched == 0:
        return WeightedSentiment(0.0, 0)
    return WeightedSentiment(num / den, matched)


def dimension_profile(g: CoocGraph, brand: str,
                      lexicons: list[DimensionLexicon]) -> dict[str, float]:
    """Share of the brand's link weight going to words of each dimension.

    Each value is (weight from brand to matching neighbors) / (brand's total
    weighted degree), in [0, 1]; all zeros when the brand is absent/isolated.
    """
    profile = {lex.name: 0.0 for lex in lexicons}
    nbrs = g.neighbors(brand)
    total = sum(nbrs.values())
    if total == 0:
        return profile
    for lex in lexicons:
        matched = sum(w for word, w in sorted(nbrs.items()) if lex.matches(word))
        profile[lex.name] = matched / total
    return profile
