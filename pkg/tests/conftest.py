from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from brandscore.corpus import Document, parse_timestamp

DEMO_DIR = Path(__file__).parent.parent / "src" / "brandscore" / "data" / "demo"


def make_doc(doc_id: str, text: str = "", tokens: list[str] | None = None,
             ts: str = "2021-03-05T12:00:00+00:00") -> Document:
    return Document(
        id=doc_id,
        timestamp=parse_timestamp(ts),
        raw_text=text,
        tokens=list(tokens) if tokens else [],
    )


@pytest.fixture
def demo_paths():
    return {
        "corpus": DEMO_DIR / "corpus.jsonl",
        "brands": DEMO_DIR / "brands.tsv",
        "sentiment": DEMO_DIR / "sentiment.tsv",
        "dimensions": DEMO_DIR / "dimensions.tsv",
    }
