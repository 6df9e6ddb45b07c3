"""Command-line interface: each pipeline stage as a subcommand.

Exit codes: 0 success, 1 configuration/validation error, 2 processing error.
All subcommands share the same flags; a stage runs exactly its own outputs
plus whatever predecessors it needs, and writes byte-identical files to the
corresponding full-run outputs.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .pipeline import ConfigError, Pipeline, ProcessingError, RunConfig

COMMANDS = ("run", "stats", "sbs", "topics", "associations", "dimensions",
            "novelty", "export-graph")

_HELP = {
    "run": "execute the full pipeline and write every report",
    "stats": "corpus descriptive statistics (stats.json)",
    "sbs": "brand scores and trends (scores.csv, trends.csv)",
    "topics": "topic clustering reports (topics/*.json)",
    "associations": "brand association reports (associations/*.json)",
    "dimensions": "brand image dimension profiles (dimensions.csv)",
    "novelty": "per-document novelty scores (novelty.csv)",
    "export-graph": "co-occurrence network exports (graphs/*)",
}


def _add_common_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="corpus file (JSONL or CSV)")
    p.add_argument("--format", default="jsonl", choices=("jsonl", "csv"),
                   dest="input_format", help="corpus file format")
    p.add_argument("--brands", required=True,
                   help="brand alias file: canonical token, tab-separated surface forms")
    p.add_argument("--output", required=True, help="output directory")
    p.add_argument("--stopwords", default=None,
                   help="stopword file, one word per line (default: packaged English list)")
    p.add_argument("--sentiment-lexicon", default=None,
                   help="sentiment lexicon file: pattern<TAB>score in [-1,1]")
    p.add_argument("--dimension-lexicon", default=None,
                   help="dimension lexicon file: pattern<TAB>category")
    p.add_argument("--granularity", default="day", choices=("day", "week", "month"),
                   help="time slice granularity")
    p.add_argument("--window", type=int, default=7,
                   help="co-occurrence window in tokens (default 7)")
    p.add_argument("--min-edge-weight", type=int, default=1,
                   help="drop co-occurrence edges below this weight (default 1)")
    p.add_argument("--top-k-associations", type=int, default=20,
                   help="association entries kept per brand (default 20)")
    p.add_argument("--top-k-keywords", type=int, default=10,
                   help="keywords kept per topic (default 10)")
    p.add_argument("--seed", type=int, default=42, dest="louvain_seed",
                   help="clustering seed (default 42)")
    p.add_argument("--resolution", type=float, default=1.0, dest="louvain_resolution",
                   help="clustering resolution (default 1.0)")
    p.add_argument("--stemmer", default="porter_like", choices=("porter_like", "identity"),
                   help="stemmer applied to non-brand tokens")
    p.add_argument("--min-token-len", type=int, default=2,
                   help="drop processed tokens shorter than this (default 2)")
    p.add_argument("--keep-urls", action="store_true",
                   help="keep URLs in the token stream instead of stripping them")
    p.add_argument("--workers", type=int, default=1,
                   help="slice-level worker processes (default 1)")
    p.add_argument("--dump-centrality", action="store_true",
                   help="also write the full per-node centrality table per slice")
    p.add_argument("--verbose", action="store_true", help="log progress details")


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        input_path=args.input,
        input_format=args.input_format,
        brands_file=args.brands,
        output_dir=args.output,
        stopwords_file=args.stopwords,
        sentiment_lexicon_file=args.sentiment_lexicon,
        dimension_lexicon_file=args.dimension_lexicon,
        granularity=args.granularity,
        window=args.window,
        min_edge_weight=args.min_edge_weight,
        top_k_associations=args.top_k_associations,
        top_k_keywords=args.top_k_keywords,
        louvain_seed=args.louvain_seed,
        louvain_resolution=args.louvain_resolution,
        stemmer=args.stemmer,
        min_token_len=args.min_token_len,
        strip_urls=not args.keep_urls,
        workers=args.workers,
        dump_centrality=args.dump_centrality,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brandscore",
        description="Brand importance and discourse analytics from timestamped text corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=_HELP[name])
        _add_common_options(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        pipeline = Pipeline(_config_from_args(args))
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        pipeline.execute(args.command)
    except ProcessingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
