"""Word lists used to score the language around a brand.

Two kinds share one file format (word-or-pattern, tab, value):
sentiment lexicons map patterns to scores in [-1, 1]; dimension lexicons map
patterns to a category name (affect, feminine, ...). Patterns are matched
against processed stems; a trailing ``*`` makes a pattern match any word with
that prefix ("happi*" covers happi, happier-stems, ...). When several
sentiment patterns match, the longest (most specific) wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class DimensionLexicon:
    """A named category with its word patterns."""

    name: str
    patterns: frozenset[str]

    def __post_init__(self):
        if not self.patterns:
            raise ValueError(f"dimension lexicon {self.name!r} is empty")
        bad = [p for p in self.patterns if p != p.lower()]
        if bad:
            raise ValueError(f"dimension lexicon {self.name!r} has non-lowercase patterns: {bad}")

    def matches(self, word: str) -> bool:
        return _matches_any(word, self.patterns)


def _matches_any(word: str, patterns) -> bool:
    for pat in patterns:
        if pat.endswith("*"):
            if word.startswith(pat[:-1]):
                return True
        elif word == pat:
            return True
    return False


@dataclass
class SentimentLexicon:
    """Pattern -> score mapping with longest-match wildcard lookup."""

    scores: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.scores:
            raise ValueError("sentiment lexicon is empty")
        self._exact = {p: s for p, s in self.scores.items() if not p.endswith("*")}
        self._prefixes = sorted(
            ((p[:-1], s) for p, s in self.scores.items() if p.endswith("*")),
            key=lambda ps: (-len(ps[0]), ps[0]),
        )

    def lookup(self, word: str) -> float | None:
        """Score for the word, or None when no pattern covers it."""
        if word in self._exact:
            return self._exact[word]
        for prefix, score in self._prefixes:
            if word.startswith(prefix):
                return score
        return None


def load_sentiment_lexicon(path: str | Path) -> SentimentLexicon:
    """Read a sentiment lexicon file: pattern, tab, score in [-1, 1]."""
    scores: dict[str, float] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            pattern, value = line.split("\t")
            score = float(value)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: expected 'pattern<TAB>score': {exc}") from None
        if not -1.0 <= score <= 1.0:
            raise ValueError(f"{path}:{lineno}: score {score} outside [-1, 1]")
        scores[pattern.strip().lower()] = score
    return SentimentLexicon(scores)


def load_dimension_lexicons(path: str | Path) -> list[DimensionLexicon]:
    """Read a dimension lexicon file: pattern, tab, category name (one per line)."""
    by_name: dict[str, set[str]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            pattern, name = line.split("\t")
        except ValueError:
            raise ValueError(f"{path}:{lineno}: expected 'pattern<TAB>category'") from None
        by_name.setdefault(name.strip().lower(), set()).add(pattern.strip().lower())
    return [DimensionLexicon(name, frozenset(pats)) for name, pats in sorted(by_name.items())]
