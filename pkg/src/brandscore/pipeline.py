"""End-to-end orchestration: ingest -> prep -> per-slice analytics -> reports.

Every output is written through the same code path whether it comes from the
full run or from a single-stage command, so stage outputs are byte-identical
to full-run outputs given the same configuration. Floats in all output files
are formatted to 6 significant digits (round-half-even); full precision is
kept internally.
"""

from __future__ import annotations

import csv
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path

from . import corpus as corpus_mod
from .centrality import CentralityRow, centrality_table
from .corpus import Document, TimeSlice, describe, load_corpus, slice_by_period
from .graph import CoocGraph, build_graph_from_tokens, write_edge_csv, write_node_json
from .lexicon import (
    DimensionLexicon,
    SentimentLexicon,
    load_dimension_lexicons,
    load_sentiment_lexicon,
)
from .novelty import build_index, novelty
from .prep import PrepConfig, default_stopwords, load_brand_aliases, load_stopwords, preprocess
from .scoring import (
    BrandScore,
    association_sentiment,
    associations,
    dimension_profile,
    score_slice,
    trend,
)
from .topics import build_topic_clusters

logger = logging.getLogger(__name__)


class ConfigError(ValueError):
    """Configuration invalid; nothing was processed."""


class ProcessingError(RuntimeError):
    """A pipeline stage failed after processing started."""


def fmt_float(x) -> str:
    """Render a number with 6 significant digits, round-half-even."""
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".6g")


def round_float(x) -> float:
    """The numeric value matching fmt_float, for JSON outputs."""
    return float(fmt_float(x))


@dataclass
class RunConfig:
    """Everything a run depends on; recorded in the manifest for provenance."""

    input_path: str
    brands_file: str
    output_dir: str
    input_format: str = "jsonl"
    stopwords_file: str | None = None  # None -> packaged default English list
    sentiment_lexicon_file: str | None = None
    dimension_lexicon_file: str | None = None
    granularity: str = "day"
    window: int = 7
    min_edge_weight: int = 1
    top_k_associations: int = 20
    top_k_keywords: int = 10
    louvain_seed: int = 42
    louvain_resolution: float = 1.0
    stemmer: str = "porter_like"
    min_token_len: int = 2
    strip_urls: bool = True
    workers: int = 1
    dump_centrality: bool = False

    def validate(self) -> None:
        for label, path in (("input", self.input_path), ("brands file", self.brands_file)):
            if not Path(path).is_file():
                raise ConfigError(f"{label} not found: {path}")
        for label, path in (("stopwords file", self.stopwords_file),
                            ("sentiment lexicon", self.sentiment_lexicon_file),
                            ("dimension lexicon", self.dimension_lexicon_file)):
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"{label} not found: {path}")
        if self.input_format not in ("jsonl", "csv"):
            raise ConfigError(f"unknown input format {self.input_format!r}")
        if self.granularity not in corpus_mod.GRANULARITIES:
            raise ConfigError(f"unknown granularity {self.granularity!r}")
        if self.window < 2:
            raise ConfigError("window must be >= 2")
        if self.min_edge_weight < 1:
            raise ConfigError("min-edge-weight must be >= 1")
        if self.top_k_associations < 1 or self.top_k_keywords < 1:
            raise ConfigError("top-k values must be >= 1")
        if self.louvain_resolution <= 0:
            raise ConfigError("louvain resolution must be > 0")
        if self.min_token_len < 1:
            raise ConfigError("min-token-len must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        try:
            Path(self.output_dir).mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise ConfigError(f"cannot create output directory {self.output_dir}: {exc}")


# decision-relevant defaults and formula variants, recorded with every run
FORMULAS = {
    "cooccurrence": "positional pairs within a sliding window per document; window is the flag value, pairs at position distance < window",
    "diversity": "distinctiveness D(w) = sum over neighbors j of weight(w,j) * log10((n-1)/degree(j))",
    "connectivity": "Brandes weighted betweenness over distances 1/weight, unnormalized, unordered pairs counted once",
    "standardization": "z = (x - mean) / population_sd over all nodes of the slice graph; zero-variance component -> z = 0",
    "sbs": "z_prevalence + z_diversity + z_connectivity",
    "keyword_score": "weighted_degree * internal_weight / total_weight",
    "topic_relevance": "cluster share of total weighted degree",
    "brand_topic_association": "share of the brand's link weight going into each cluster",
    "dimension_profile": "share of the brand's link weight going to lexicon-matching neighbors",
    "association_sentiment": "edge-weight-weighted mean of lexicon scores over covered neighbors",
    "novelty": "(1/n) sum of f_w * ln(N/n_w) over distinct words; sum mode = average * n; n counts tokens",
    "novelty_log_base": "e",
    "descriptive_stats": "lowercased letter-run tokens of raw text, before stopword removal and stemming; population SD; six-letter words are words with >= 6 letters",
    "float_format": "6 significant digits, round-half-even",
}


@dataclass
class SliceResult:
    """Per-slice heavy artifacts computed once and shared by all reports."""

    label: str
    graph: CoocGraph
    rows: list[CentralityRow]


def _slice_payloads(slices: list[TimeSlice], window: int, min_edge_weight: int):
    return [
        (sl.label, [d.tokens for d in sl.documents], window, min_edge_weight)
        for sl in slices
    ]


def _compute_slice(payload) -> SliceResult:
    label, token_lists, window, min_edge_weight = payload
    g = build_graph_from_tokens(token_lists, window=window, min_edge_weight=min_edge_weight)
    return SliceResult(label=label, graph=g, rows=centrality_table(g))


class Pipeline:
    """Lazy, cached execution of the run stages for one configuration."""

    def __init__(self, cfg: RunConfig):
        cfg.validate()
        self.cfg = cfg
        self.out = Path(cfg.output_dir)
        self.brand_aliases = load_brand_aliases(cfg.brands_file)
        self.brands = list(self.brand_aliases)
        if not self.brands:
            raise ConfigError(f"brands file {cfg.brands_file} defines no brands")
        stopwords = (load_stopwords(cfg.stopwords_file) if cfg.stopwords_file
                     else default_stopwords())
        self.prep_cfg = PrepConfig(
            stopwords=stopwords,
            stemmer=cfg.stemmer,
            brand_aliases=self.brand_aliases,
            min_token_len=cfg.min_token_len,
            strip_urls=cfg.strip_urls,
        )
        self.sentiment: SentimentLexicon | None = (
            load_sentiment_lexicon(cfg.sentiment_lexicon_file)
            if cfg.sentiment_lexicon_file else None
        )
        self.dimensions: list[DimensionLexicon] = (
            load_dimension_lexicons(cfg.dimension_lexicon_file)
            if cfg.dimension_lexicon_file else []
        )
        self._docs = None
        self._errors = None
        self._prepped = None
        self._slices = None
        self._slice_results = None

    # ------------------------------------------------------------- inputs

    def docs(self) -> list[Document]:
        if self._docs is None:
            self._docs, self._errors = load_corpus(self.cfg.input_path, self.cfg.input_format)
            if not self._docs:
                logger.warning("corpus %s contains no valid documents", self.cfg.input_path)
        return self._docs

    def ingest_errors(self):
        self.docs()
        return self._errors

    def prepped(self) -> list[Document]:
        if self._prepped is None:
            self._prepped = [preprocess(d, self.prep_cfg) for d in self.docs()]
        return self._prepped

    def slices(self) -> list[TimeSlice]:
        if self._slices is None:
            self._slices = slice_by_period(self.prepped(), self.cfg.granularity)
        return self._slices

    def slice_results(self) -> list[SliceResult]:
        if self._slice_results is None:
            payloads = _slice_payloads(self.slices(), self.cfg.window, self.cfg.min_edge_weight)
            if self.cfg.workers > 1 and len(payloads) > 1:
                with ProcessPoolExecutor(max_workers=self.cfg.workers) as pool:
                    self._slice_results = list(pool.map(_compute_slice, payloads))
            else:
                self._slice_results = [_compute_slice(p) for p in payloads]
        return self._slice_results

    # ------------------------------------------------------------- stages

    def write_manifest(self) -> None:
        config = {f.name: getattr(self.cfg, f.name) for f in fields(self.cfg)}
        # the output directory holds the manifest; recording it would make
        # otherwise-identical runs into different byte streams
        del config["output_dir"]
        manifest = {"tool": "brandscore", "config": config, "formulas": FORMULAS,
                    "brands": self.brands}
        self._write_json(self.out / "manifest.json", manifest)

    def stage_stats(self) -> None:
        docs = self.docs()
        if docs:
            stats = describe(docs).to_dict()
            for key, value in stats.items():
                if isinstance(value, dict) and "mean" in value:
                    stats[key] = {k: round_float(v) for k, v in value.items()}
        else:
            stats = {
                "n_documents": 0,
                "tokens": {"mean": 0.0, "sd": 0.0},
                "types": {"mean": 0.0, "sd": 0.0},
                "type_token_ratio": {"mean": 0.0, "sd": 0.0},
                "six_letter_share": {"mean": 0.0, "sd": 0.0},
                "sd_kind": "population",
                "warnings": ["corpus is empty"],
            }
        stats["ingest_errors"] = [
            {"line": e.line, "message": e.message} for e in self.ingest_errors()
        ]
        self._write_json(self.out / "stats.json", stats)

    def stage_sbs(self) -> None:
        all_scores: list[BrandScore] = []
        for result in self.slice_results():
            all_scores.extend(
                score_slice(result.graph, self.brands, result.label, rows=result.rows)
            )
        self._write_scores_csv(self.out / "scores.csv", all_scores)
        self._write_trends_csv(self.out / "trends.csv", all_scores)
        if self.cfg.dump_centrality:
            cdir = self.out / "centrality"
            cdir.mkdir(exist_ok=True)
            for result in self.slice_results():
                self._write_centrality_csv(cdir / f"{result.label}.csv", result.rows)

    def stage_topics(self) -> None:
        tdir = self.out / "topics"
        tdir.mkdir(exist_ok=True)
        for result in self.slice_results():
            clusters = build_topic_clusters(
                result.graph, self.brands,
                seed=self.cfg.louvain_seed,
                resolution=self.cfg.louvain_resolution,
                keyword_top_k=self.cfg.top_k_keywords,
            )
            payload = {
                "slice": result.label,
                "clusters": [
                    {
                        "id": c.id,
                        "size": len(c.members),
                        "relevance": round_float(c.relevance),
                        "keywords": [
                            {"word": w, "score": round_float(s)} for w, s in c.keywords
                        ],
                        "brand_assoc": {
                            b: round_float(v) for b, v in c.brand_assoc.items()
                        },
                    }
                    for c in clusters
                ],
            }
            self._write_json(tdir / f"{result.label}.json", payload)

    def stage_associations(self) -> None:
        adir = self.out / "associations"
        adir.mkdir(exist_ok=True)
        for result in self.slice_results():
            for brand in self.brands:
                rep = associations(
                    result.graph, brand, self.cfg.top_k_associations,
                    slice_label=result.label, sentiment_lexicon=self.sentiment,
                )
                payload = {
                    "brand": brand,
                    "slice": result.label,
                    "entries": [
                        {
                            "word": e.word,
                            "weight": round_float(e.weight),
                            "sentiment": None if e.sentiment is None else round_float(e.sentiment),
                        }
                        for e in rep.entries
                    ],
                }
                if self.sentiment is not None:
                    summary = association_sentiment(rep, self.sentiment)
                    payload["sentiment"] = {
                        "value": round_float(summary.value),
                        "matched_neighbors": summary.matched,
                        "covered": summary.covered,
                    }
                else:
                    payload["sentiment"] = None
                self._write_json(adir / f"{brand}_{result.label}.json", payload)

    def stage_dimensions(self) -> None:
        with open(self.out / "dimensions.csv", "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["brand", "slice", "dimension", "value"])
            for result in self.slice_results():
                for brand in self.brands:
                    profile = dimension_profile(result.graph, brand, self.dimensions)
                    for name in sorted(profile):
                        writer.writerow([brand, result.label, name, fmt_float(profile[name])])

    def stage_novelty(self) -> None:
        docs = self.prepped()
        idx = build_index(docs)
        with open(self.out / "novelty.csv", "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["id", "timestamp", "novelty_avg", "novelty_sum"])
            for doc in docs:
                writer.writerow([
                    doc.id,
                    doc.timestamp.isoformat(),
                    fmt_float(novelty(doc, idx, "average")),
                    fmt_float(novelty(doc, idx, "sum")),
                ])

    def stage_export_graph(self) -> None:
        gdir = self.out / "graphs"
        gdir.mkdir(exist_ok=True)
        for result in self.slice_results():
            write_edge_csv(result.graph, gdir / f"{result.label}_edges.csv", fmt=fmt_float)
            write_node_json(result.graph, gdir / f"{result.label}_nodes.json")

    STAGES = {
        "stats": ("stage_stats",),
        "sbs": ("stage_sbs",),
        "topics": ("stage_topics",),
        "associations": ("stage_associations",),
        "dimensions": ("stage_dimensions",),
        "novelty": ("stage_novelty",),
        "export-graph": ("stage_export_graph",),
        "run": ("stage_stats", "stage_sbs", "stage_topics", "stage_associations",
                "stage_dimensions", "stage_novelty", "stage_export_graph"),
    }

    def execute(self, command: str) -> None:
        """Run one subcommand's stages; on failure leave a FAILED marker."""
        stage_names = self.STAGES[command]
        self.write_manifest()
        for name in stage_names:
            try:
                getattr(self, name)()
            except Exception as exc:
                marker = self.out / "FAILED"
                marker.write_text(f"stage {name} failed: {exc}\n", encoding="utf-8")
                raise ProcessingError(f"stage {name} failed: {exc}") from exc

    # ------------------------------------------------------------- writers

    @staticmethod
    def _write_json(path: Path, payload) -> None:
        path.write_text(
            json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )

    def _write_scores_csv(self, path: Path, scores: list[BrandScore]) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["brand", "slice", "prevalence", "diversity", "connectivity",
                             "z_prevalence", "z_diversity", "z_connectivity", "sbs"])
            for s in scores:
                writer.writerow([
                    s.brand, s.slice_label,
                    fmt_float(s.raw.prevalence), fmt_float(s.raw.diversity),
                    fmt_float(s.raw.connectivity),
                    fmt_float(s.z.prevalence), fmt_float(s.z.diversity),
                    fmt_float(s.z.connectivity), fmt_float(s.sbs),
                ])

    def _write_trends_csv(self, path: Path, scores: list[BrandScore]) -> None:
        series = trend(scores)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["brand", "slice", "sbs"])
            for brand in self.brands:
                if brand not in series:
                    continue
                for label, value in series[brand].points:
                    writer.writerow([brand, label, fmt_float(value)])
                writer.writerow([brand, "mean", fmt_float(series[brand].mean)])

    @staticmethod
    def _write_centrality_csv(path: Path, rows: list[CentralityRow]) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["word", "prevalence", "diversity", "connectivity"])
            for r in rows:
                writer.writerow([r.word, r.prevalence,
                                 fmt_float(r.diversity), fmt_float(r.connectivity)])
