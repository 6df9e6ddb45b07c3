import math
import random

import pytest

from brandscore.novelty import build_index, novelty

from conftest import make_doc
from oracles import tfidf_scores


def docs_from(token_lists):
    return [make_doc(f"d{i}", tokens=t) for i, t in enumerate(token_lists)]


def test_index_counts_documents_not_occurrences():
    docs = docs_from([["a", "a"], ["a", "b"]])
    idx = build_index(docs)
    assert idx.total_docs == 2
    assert idx.doc_freq == {"a": 2, "b": 1}


def test_empty_docs_count_toward_total_only():
    docs = docs_from([["a"], [], []])
    idx = build_index(docs)
    assert idx.total_docs == 3
    assert idx.doc_freq == {"a": 1}


def test_index_matches_membership_scan_oracle():
    rng = random.Random(77)
    vocab = [f"w{i}" for i in range(40)]
    token_lists = [rng.choices(vocab, k=rng.randint(0, 25)) for _ in range(1000)]
    idx = build_index(docs_from(token_lists))
    assert idx.total_docs == 1000
    for word in vocab:
        scan = sum(1 for toks in token_lists if word in toks)
        if scan:
            assert idx.doc_freq[word] == scan
        else:
            assert word not in idx.doc_freq


def test_single_document_corpus_scores_zero():
    docs = docs_from([["alpha", "beta", "alpha"]])
    idx = build_index(docs)
    assert novelty(docs[0], idx, "average") == 0.0
    assert novelty(docs[0], idx, "sum") == 0.0


def test_hand_computed_example():
    # doc [a,a,b] in a 4-document corpus where a appears only here and b in all
    token_lists = [["a", "a", "b"], ["b"], ["b", "c"], ["b", "d"]]
    docs = docs_from(token_lists)
    idx = build_index(docs)
    assert idx.doc_freq["a"] == 1 and idx.doc_freq["b"] == 4
    expected_avg = (2 * math.log(4) + 1 * math.log(1)) / 3
    assert novelty(docs[0], idx, "average") == pytest.approx(expected_avg, abs=1e-12)
    assert novelty(docs[0], idx, "sum") == pytest.approx(2 * math.log(4), abs=1e-12)


def test_empty_document_scores_zero():
    docs = docs_from([["a"], []])
    idx = build_index(docs)
    assert novelty(docs[1], idx, "average") == 0.0


def test_missing_word_is_fatal_consistency_error():
    idx = build_index(docs_from([["a"]]))
    stranger = make_doc("x", tokens=["unseen"])
    with pytest.raises(ValueError):
        novelty(stranger, idx, "average")


def test_unknown_mode_rejected():
    docs = docs_from([["a"]])
    idx = build_index(docs)
    with pytest.raises(ValueError):
        novelty(docs[0], idx, "median")


def test_random_corpora_match_tfidf_oracle():
    rng = random.Random(909)
    for _ in range(100):
        vocab = [f"w{i}" for i in range(rng.randint(2, 15))]
        token_lists = [
            rng.choices(vocab, k=rng.randint(0, 12))
            for _ in range(rng.randint(1, 12))
        ]
        docs = docs_from(token_lists)
        idx = build_index(docs)
        expected = tfidf_scores(token_lists)
        for doc, (exp_avg, exp_sum) in zip(docs, expected):
            assert novelty(doc, idx, "average") == pytest.approx(exp_avg, abs=1e-9)
            assert novelty(doc, idx, "sum") == pytest.approx(exp_sum, abs=1e-9)


def test_sum_equals_average_times_n_exactly():
    rng = random.Random(31)
    vocab = [f"w{i}" for i in range(10)]
    token_lists = [rng.choices(vocab, k=rng.randint(1, 30)) for _ in range(50)]
    docs = docs_from(token_lists)
    idx = build_index(docs)
    for doc in docs:
        avg = novelty(doc, idx, "average")
        total = novelty(doc, idx, "sum")
        assert total == avg * len(doc.tokens)  # bit-exact


def test_nonnegative_and_zero_iff_ubiquitous():
    docs = docs_from([["a", "b"], ["a", "b"], ["a", "c"]])
    idx = build_index(docs)
    for doc in docs:
        assert novelty(doc, idx, "average") >= 0.0
    # doc 2 contains c (rare) so it scores > 0; a alone would score 0
    assert novelty(docs[2], idx, "average") > 0.0
    ubiquitous = docs_from([["a"], ["a"], ["a"]])
    idx2 = build_index(ubiquitous)
    assert all(novelty(d, idx2, "average") == 0.0 for d in ubiquitous)


def test_adding_disjoint_document_strictly_increases_novelty():
    base = [["a", "b"], ["b", "c"]]
    grown = base + [["zzz"]]
    docs_base = docs_from(base)
    docs_grown = docs_from(grown)
    before = novelty(docs_base[0], build_index(docs_base), "average")
    after = novelty(docs_grown[0], build_index(docs_grown), "average")
    assert after > before
