"""The committed scores file for the bundled demo corpus.

The golden file was produced by the first verified full run and is
cross-checked here against independent oracles (token scans for prevalence,
direct-sum evaluation for diversity) before the byte comparison is trusted.
"""

import csv
from pathlib import Path

import pytest

from brandscore.cli import main
from brandscore.pipeline import Pipeline, RunConfig, fmt_float
from brandscore.prep import preprocess

from oracles import distinctiveness_direct

GOLDEN = Path(__file__).parent / "data" / "golden_scores.csv"


def demo_config(demo_paths, out) -> RunConfig:
    return RunConfig(
        input_path=str(demo_paths["corpus"]),
        brands_file=str(demo_paths["brands"]),
        sentiment_lexicon_file=str(demo_paths["sentiment"]),
        dimension_lexicon_file=str(demo_paths["dimensions"]),
        output_dir=str(out),
    )


def test_demo_scores_match_golden_byte_for_byte(demo_paths, tmp_path):
    out = tmp_path / "run"
    argv = [
        "run",
        "--input", str(demo_paths["corpus"]),
        "--brands", str(demo_paths["brands"]),
        "--sentiment-lexicon", str(demo_paths["sentiment"]),
        "--dimension-lexicon", str(demo_paths["dimensions"]),
        "--output", str(out),
    ]
    assert main(argv) == 0
    assert (out / "scores.csv").read_bytes() == GOLDEN.read_bytes()


def test_golden_values_cross_checked_against_oracles(demo_paths, tmp_path):
    pipeline = Pipeline(demo_config(demo_paths, tmp_path / "x"))
    results = {r.label: r for r in pipeline.slice_results()}

    with open(GOLDEN, encoding="utf-8") as fh:
        golden = {(r["brand"], r["slice"]): r for r in csv.DictReader(fh)}

    # prevalence column equals an independent token-count scan per slice
    for sl in pipeline.slices():
        docs = [preprocess(d, pipeline.prep_cfg) for d in sl.documents]
        for brand in pipeline.brands:
            scan = sum(d.tokens.count(brand) for d in docs)
            in_graph = brand in results[sl.label].graph
            expected = scan if in_graph else 0
            assert golden[(brand, sl.label)]["prevalence"] == fmt_float(expected)

    # diversity column equals the direct-sum formula on the slice's edge list
    for label, result in results.items():
        edges = list(result.graph.edges())
        for brand in pipeline.brands:
            direct = distinctiveness_direct(edges, brand)
            assert float(golden[(brand, label)]["diversity"]) == pytest.approx(
                direct, rel=1e-5
            )

    # the sbs column is the sum of the z columns (up to output rounding)
    for row in golden.values():
        z_sum = (float(row["z_prevalence"]) + float(row["z_diversity"])
                 + float(row["z_connectivity"]))
        assert float(row["sbs"]) == pytest.approx(z_sum, abs=2e-4)
