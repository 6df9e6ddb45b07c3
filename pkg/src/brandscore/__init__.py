"""Brand importance and discourse analytics from timestamped text corpora.

The package builds per-period word co-occurrence networks from a corpus and
derives from them the Semantic Brand Score (standardized prevalence +
diversity + connectivity), brand associations with lexicon sentiment, brand
image dimensions, network topics, and per-document TF-IDF novelty.
"""

from .centrality import (
    CentralityRow,
    brute_force_betweenness,
    centrality_table,
    distinctiveness,
    prevalence,
    weighted_betweenness,
)
from .corpus import (
    CorpusStats,
    Document,
    RecordError,
    TimeSlice,
    describe,
    load_corpus,
    slice_by_period,
)
from .graph import CoocGraph, build_graph, build_graph_from_tokens, degree_stats
from .lexicon import (
    DimensionLexicon,
    SentimentLexicon,
    load_dimension_lexicons,
    load_sentiment_lexicon,
)
from .novelty import DocFrequencyIndex, build_index, novelty
from .pipeline import Pipeline, RunConfig
from .prep import PrepConfig, load_brand_aliases, load_stopwords, preprocess, tokenize
from .scoring import (
    AssociationReport,
    BrandScore,
    association_sentiment,
    associations,
    dimension_profile,
    score_slice,
    trend,
)
from .stemmer import identity_stem, porter_stem
from .topics import (
    LouvainResult,
    TopicCluster,
    brand_topic_assoc,
    build_topic_clusters,
    keyword_rank,
    louvain,
    modularity,
    topic_relevance,
)

__version__ = "0.1.0"

__all__ = [
    "AssociationReport", "BrandScore", "CentralityRow", "CoocGraph", "CorpusStats",
    "DimensionLexicon", "DocFrequencyIndex", "Document", "LouvainResult", "Pipeline",
    "PrepConfig", "RecordError", "RunConfig", "SentimentLexicon", "TimeSlice",
    "TopicCluster", "association_sentiment", "associations", "brand_topic_assoc",
    "brute_force_betweenness", "build_graph", "build_graph_from_tokens", "build_index",
    "build_topic_clusters", "centrality_table", "degree_stats", "describe",
    "dimension_profile", "distinctiveness", "identity_stem", "keyword_rank",
    "load_brand_aliases", "load_corpus", "load_dimension_lexicons",
    "load_sentiment_lexicon", "load_stopwords", "louvain", "modularity", "novelty",
    "porter_stem", "preprocess", "prevalence", "score_slice", "slice_by_period",
    "tokenize", "topic_relevance", "trend", "weighted_betweenness",
]
