"""Turn raw text into the processed token streams the co-occurrence network is built from.

Pipeline: strip URLs and @/# sigils, lowercase, rewrite brand surface forms to
canonical tokens, split on non-alphanumeric characters, drop stopwords, stem,
drop short tokens. Brand canonical tokens are never stemmed, stopworded or
length-filtered.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

from .corpus import Document
from .stemmer import STEMMERS

_URL_RE = re.compile(r"https?://\S+|www\.\S+", re.IGNORECASE)
_SIGIL_RE = re.compile(r"[@#](\w)")
_TOKEN_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class PrepConfig:
    """Immutable preprocessing configuration.

    brand_aliases maps a canonical token to its surface forms; multi-word
    forms are rewritten before tokenization so they survive as one token.
    """

    stopwords: frozenset[str] = frozenset()
    stemmer: str = "porter_like"
    brand_aliases: dict[str, tuple[str, ...]] = field(default_factory=dict)
    min_token_len: int = 2
    strip_urls: bool = True

    def __post_init__(self):
        if self.stemmer not in STEMMERS:
            raise ValueError(f"unknown stemmer {self.stemmer!r}; choose from {sorted(STEMMERS)}")
        if self.min_token_len < 1:
            raise ValueError("min_token_len must be >= 1")
        for canon in self.brand_aliases:
            if canon != canon.lower():
                raise ValueError(f"brand canonical token must be lowercase: {canon!r}")
        # compiled once; longest surface forms first so multi-word aliases win
        patterns = []
        for canon, forms in sorted(self.brand_aliases.items()):
            for form in forms:
                words = _TOKEN_RE.findall(form.lower())
                if not words:
                    continue
                pat = r"\b" + r"[^a-z0-9]+".join(re.escape(w) for w in words) + r"\b"
                patterns.append((len(words), len(form), pat, canon))
        patterns.sort(key=lambda p: (-p[0], -p[1], p[2]))
        object.__setattr__(
            self,
            "_alias_patterns",
            tuple((re.compile(pat), canon) for _, _, pat, canon in patterns),
        )

    @property
    def stem(self) -> Callable[[str], str]:
        return STEMMERS[self.stemmer]

    @property
    def brand_tokens(self) -> frozenset[str]:
        return frozenset(self.brand_aliases)


def tokenize(text: str) -> list[str]:
    """Lowercase and split on any non-alphanumeric character."""
    return _TOKEN_RE.findall(text.lower())


def preprocess_text(text: str, cfg: PrepConfig) -> list[str]:
    """Apply the full preparation pipeline to one raw text."""
    if cfg.strip_urls:
        text = _URL_RE.sub(" ", text)
    text = _SIGIL_RE.sub(r"\1", text.lower())
    for pattern, canon in cfg._alias_patterns:
        text = pattern.sub(f" {canon} ", text)

    brands = cfg.brand_tokens
    stem = cfg.stem
    out = []
    for tok in _TOKEN_RE.findall(text):
        if tok in brands:
            out.append(tok)
            continue
        if tok in cfg.stopwords:
            continue
        if tok.isalpha():
            tok = stem(tok)
        if len(tok) >= cfg.min_token_len:
            out.append(tok)
    return out


def preprocess(doc: Document, cfg: PrepConfig) -> Document:
    """Return a copy of the document with its token stream filled."""
    return dataclasses.replace(doc, tokens=preprocess_text(doc.raw_text, cfg))


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one word per line, UTF-8, '#' comments allowed."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    """Small default English stopword list shipped with the package."""
    text = resources.files("brandscore.data").joinpath("stopwords_en.txt").read_text("utf-8")
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip() and not w.startswith("#"))


def load_brand_aliases(path: str | Path) -> dict[str, tuple[str, ...]]:
    """Read a brand alias file: canonical token, then tab-separated surface forms.

    A line like ``tomford\ttom ford\ttomford`` maps both surface forms to the
    canonical token ``tomford``. A line with only the canonical token maps the
    token to itself.
    """
    aliases: dict[str, tuple[str, ...]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("\t") if p.strip()]
        canon = parts[0].lower()
        if not _TOKEN_RE.fullmatch(canon):
            raise ValueError(f"{path}:{lineno}: canonical token {canon!r} must be a single alphanumeric word")
        forms = tuple(p.lower() for p in parts[1:]) or (canon,)
        aliases[canon] = forms
    return aliases
