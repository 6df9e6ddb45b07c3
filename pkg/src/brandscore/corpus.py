"""Read timestamped document corpora, bucket them into time slices, and
compute corpus descriptive statistics.

Input formats: JSONL (one object per line with keys id/timestamp/text) and
CSV (same column names, RFC-4180 quoting). Timestamps are ISO-8601 and are
normalized to UTC; naive timestamps are taken as UTC.
"""

from __future__ import annotations

import csv
import json
import logging
import re
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)

_LETTER_RE = re.compile(r"[a-z]+")

GRANULARITIES = ("day", "week", "month")


@dataclass
class Document:
    """One timestamped text unit (tweet, article, ...)."""

    id: str
    timestamp: datetime
    raw_text: str
    tokens: list[str] = field(default_factory=list)


@dataclass
class TimeSlice:
    """The documents falling in one calendar bucket [start, end)."""

    label: str
    start: datetime
    end: datetime
    documents: list[Document] = field(default_factory=list)


@dataclass
class CorpusStats:
    """Mean and population SD of per-document token counts, type counts,
    type/token ratio and share of words with >= 6 letters."""

    mean_tokens: float
    sd_tokens: float
    mean_types: float
    sd_types: float
    mean_ttr: float
    sd_ttr: float
    mean_six_letter_share: float
    sd_six_letter_share: float
    n_documents: int = 0
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n_documents": self.n_documents,
            "tokens": {"mean": self.mean_tokens, "sd": self.sd_tokens},
            "types": {"mean": self.mean_types, "sd": self.sd_types},
            "type_token_ratio": {"mean": self.mean_ttr, "sd": self.sd_ttr},
            "six_letter_share": {"mean": self.mean_six_letter_share, "sd": self.sd_six_letter_share},
            "sd_kind": "population",
            "warnings": self.warnings,
        }


@dataclass
class RecordError:
    """A rejected input record and why it was rejected."""

    line: int
    message: str


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp; returns a UTC-normalized aware datetime."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    ts = datetime.fromisoformat(text)
    if ts.tzinfo is None:
        return ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def load_corpus(path: str | Path, format: str = "jsonl") -> tuple[list[Document], list[RecordError]]:
    """Read documents from a JSONL or CSV file.

    Returns the well-formed documents in file order, plus one RecordError per
    malformed record (missing field, bad JSON, unparseable timestamp). An
    unreadable file raises the underlying OSError.
    """
    path = Path(path)
    if format == "jsonl":
        docs, errors = _load_jsonl(path)
    elif format == "csv":
        docs, errors = _load_csv(path)
    else:
        raise ValueError(f"unknown corpus format {format!r}; choose jsonl or csv")
    for err in errors:
        logger.warning("%s:%d: %s", path, err.line, err.message)
    return docs, errors


def _record_to_document(record: dict, line: int, errors: list[RecordError]) -> Document | None:
    missing = [k for k in ("id", "timestamp", "text") if record.get(k) in (None, "")]
    if missing:
        errors.append(RecordError(line, f"missing field(s): {', '.join(missing)}"))
        return None
    try:
        ts = parse_timestamp(str(record["timestamp"]))
    except ValueError as exc:
        errors.append(RecordError(line, f"unparseable timestamp {record['timestamp']!r}: {exc}"))
        return None
    return Document(id=str(record["id"]), timestamp=ts, raw_text=str(record["text"]))


def _load_jsonl(path: Path) -> tuple[list[Document], list[RecordError]]:
    docs: list[Document] = []
    errors: list[RecordError] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                errors.append(RecordError(lineno, f"invalid JSON: {exc}"))
                continue
            if not isinstance(record, dict):
                errors.append(RecordError(lineno, "record is not a JSON object"))
                continue
            doc = _record_to_document(record, lineno, errors)
            if doc is not None:
                docs.append(doc)
    return docs, errors


def _load_csv(path: Path) -> tuple[list[Document], list[RecordError]]:
    docs: list[Document] = []
    errors: list[RecordError] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return docs, errors
        for record in reader:
            # line_num points at the last line consumed, correct for multi-line quoted fields
            doc = _record_to_document(record, reader.line_num, errors)
            if doc is not None:
                docs.append(doc)
    return docs, errors


def _bucket_start(ts: datetime, granularity: str) -> datetime:
    day = ts.astimezone(timezone.utc).replace(hour=0, minute=0, second=0, microsecond=0)
    if granularity == "day":
        return day
    if granularity == "week":
        return day - timedelta(days=day.weekday())  # ISO week starts Monday
    if granularity == "month":
        return day.replace(day=1)
    raise ValueError(f"unknown granularity {granularity!r}; choose from {GRANULARITIES}")


def _next_bucket(start: datetime, granularity: str) -> datetime:
    if granularity == "day":
        return start + timedelta(days=1)
    if granularity == "week":
        return start + timedelta(days=7)
    if start.month == 12:
        return start.replace(year=start.year + 1, month=1)
    return start.replace(month=start.month + 1)


def _bucket_label(start: datetime, granularity: str) -> str:
    if granularity == "day":
        return start.strftime("%Y-%m-%d")
    if granularity == "week":
        year, week, _ = start.isocalendar()
        return f"{year}-W{week:02d}"
    return start.strftime("%Y-%m")


def slice_by_period(docs: list[Document], granularity: str = "day") -> list[TimeSlice]:
    """Partition documents into contiguous calendar buckets.

    Buckets between the first and last document that contain no documents are
    emitted empty, so the returned slices always cover the full span. Slice
    boundaries sit at 00:00 UTC; each document lands in exactly one slice.
    """
    if granularity not in GRANULARITIES:
        raise ValueError(f"unknown granularity {granularity!r}; choose from {GRANULARITIES}")
    if not docs:
        return []

    first = min(_bucket_start(d.timestamp, granularity) for d in docs)
    last = max(_bucket_start(d.timestamp, granularity) for d in docs)

    slices: list[TimeSlice] = []
    index: dict[datetime, TimeSlice] = {}
    start = first
    while start <= last:
        end = _next_bucket(start, granularity)
        sl = TimeSlice(label=_bucket_label(start, granularity), start=start, end=end)
        slices.append(sl)
        index[start] = sl
        start = end

    for doc in docs:
        index[_bucket_start(doc.timestamp, granularity)].documents.append(doc)
    return slices


def light_tokens(text: str) -> list[str]:
    """Descriptive-statistics tokenizer: lowercase, split on non-letter characters."""
    return _LETTER_RE.findall(text.lower())


def describe(docs: list[Document]) -> CorpusStats:
    """Compute corpus descriptive statistics on lightly tokenized raw text.

    Stats are computed before stopword removal and stemming, because they
    describe the corpus as collected, not the processed network input.
    Documents with no letter tokens are excluded from the ratio statistics
    (TTR, six-letter share); if every document is empty, all stats are zero
    and a warning is recorded. SDs are population SDs.
    """
    if not docs:
        raise ValueError("describe() requires a non-empty document list")

    token_counts: list[int] = []
    type_counts: list[int] = []
    ttrs: list[float] = []
    six_shares: list[float] = []
    for doc in docs:
        words = light_tokens(doc.raw_text)
        token_counts.append(len(words))
        type_counts.append(len(set(words)))
        if words:
            ttrs.append(len(set(words)) / len(words))
            six_shares.append(sum(1 for w in words if len(w) >= 6) / len(words))

    warnings = []
    if not ttrs:
        warnings.append("all documents are empty after tokenization; statistics are zero")
        return CorpusStats(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                           n_documents=len(docs), warnings=warnings)
    if len(ttrs) < len(docs):
        warnings.append(
            f"{len(docs) - len(ttrs)} empty document(s) excluded from ratio statistics"
        )

    def mean_sd(values) -> tuple[float, float]:
        arr = np.asarray(values, dtype=float)
        return float(arr.mean()), float(arr.std())  # population SD

    mt, st = mean_sd(token_counts)
    my, sy = mean_sd(type_counts)
    mr, sr = mean_sd(ttrs)
    ms, ss = mean_sd(six_shares)
    return CorpusStats(mt, st, my, sy, mr, sr, ms, ss,
                       n_documents=len(docs), warnings=warnings)
