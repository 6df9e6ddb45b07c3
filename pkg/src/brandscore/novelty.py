"""Per-document novelty/informativeness from TF-IDF statistics.

A document scores high when its words are rare across the corpus:
average mode is (1/n) * sum over distinct words of f_w * ln(N/n_w), where n is
the document's token count, f_w the within-document frequency and n_w the
number of documents containing the word; sum mode drops the 1/n. Natural
logarithm throughout.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .corpus import Document

NOVELTY_MODES = ("average", "sum")


@dataclass
class DocFrequencyIndex:
    """Document frequencies: how many documents contain each word."""

    total_docs: int = 0
    doc_freq: dict[str, int] = field(default_factory=dict)


def build_index(docs: list[Document]) -> DocFrequencyIndex:
    """Count, for every word, the number of documents containing it.

    Words are counted once per document regardless of repetition; empty
    documents contribute to the document total only.
    """
    df: Counter[str] = Counter()
    for doc in docs:
        df.update(set(doc.tokens))
    return DocFrequencyIndex(total_docs=len(docs), doc_freq=dict(df))


def novelty(doc: Document, idx: DocFrequencyIndex, mode: str = "average") -> float:
    """Novelty of one document against the corpus index.

    The document must have been part of the corpus the index was built from;
    a word missing from the index raises ValueError (index/document mismatch).
    Empty documents score 0.
    """
    if mode not in NOVELTY_MODES:
        raise ValueError(f"unknown novelty mode {mode!r}; choose from {NOVELTY_MODES}")
    if not doc.tokens:
        return 0.0
    n = len(doc.tokens)
    total = 0.0
    for word, f_w in sorted(Counter(doc.tokens).items()):
        n_w = idx.doc_freq.get(word)
        if n_w is None:
            raise ValueError(
                f"word {word!r} of document {doc.id!r} is not in the index; "
                "the index must be built from a corpus containing the document"
            )
        total += f_w * math.log(idx.total_docs / n_w)
    average = total / n
    # sum mode is defined as average * n so the identity holds bit-exactly
    return average if mode == "average" else average * n
