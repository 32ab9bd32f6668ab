"""Complaint intake: dump parsing, filtering, deduplication.

Raw dump records are newline-delimited JSON objects with fields
{external_id?, author?, body, rating?, created_at?}. Review dumps keep only
1..3 star ratings; 4..5 star records are filtered (not errors). Manual
entries are never deduplicated.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Sequence

from .errors import RequestError
from .ids import new_id, now_ms

STORED_RATINGS = (1, 2, 3)
VALID_RATINGS = (1, 2, 3, 4, 5)


class SourceKind(str, Enum):
    SUBREDDIT = "subreddit"
    APP_STORE_REVIEW = "app_store_review"
    MANUAL = "manual"


@dataclass
class Complaint:
    """One raw worker-voiced problem item with source metadata."""

    id: str
    source_kind: SourceKind
    source_name: str
    body: str
    created_at: int
    ingested_at: int
    external_id: str | None = None
    author_handle: str | None = None
    star_rating: int | None = None

    def dedup_key(self) -> tuple[str, str, str] | None:
        if self.external_id is None:
            return None
        return (self.source_kind.value, self.source_name, self.external_id)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "source_kind": self.source_kind.value,
            "source_name": self.source_name,
            "body": self.body,
            "created_at": self.created_at,
            "ingested_at": self.ingested_at,
            "external_id": self.external_id,
            "author_handle": self.author_handle,
            "star_rating": self.star_rating,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Complaint":
        return cls(
            id=data["id"],
            source_kind=SourceKind(data["source_kind"]),
            source_name=data["source_name"],
            body=data["body"],
            created_at=data["created_at"],
            ingested_at=data["ingested_at"],
            external_id=data.get("external_id"),
            author_handle=data.get("author_handle"),
            star_rating=data.get("star_rating"),
        )


@dataclass
class DataSource:
    """A registered origin of complaints with its live item count."""

    id: str
    source_kind: SourceKind
    source_name: str
    item_count: int
    last_ingest_at: int | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "source_kind": self.source_kind.value,
            "source_name": self.source_name,
            "item_count": self.item_count,
            "last_ingest_at": self.last_ingest_at,
        }


@dataclass
class Rejection:
    index: int
    reason: str

    def to_dict(self) -> dict:
        return {"index": self.index, "reason": self.reason}


@dataclass
class IngestReport:
    """Per-batch outcome: accepted + filtered + rejected == input length."""

    source_kind: SourceKind
    source_name: str
    accepted: int = 0
    filtered: int = 0
    rejected: int = 0
    rejections: list[Rejection] = field(default_factory=list)
    accepted_ids: list[str] = field(default_factory=list)

    def reject(self, index: int, reason: str) -> None:
        self.rejected += 1
        self.rejections.append(Rejection(index, reason))

    def to_dict(self) -> dict:
        return {
            "source_kind": self.source_kind.value,
            "source_name": self.source_name,
            "accepted": self.accepted,
            "filtered": self.filtered,
            "rejected": self.rejected,
            "rejections": [r.to_dict() for r in self.rejections],
            "accepted_ids": list(self.accepted_ids),
        }


def normalize_body(text: str) -> str:
    """Unicode NFC normalization plus whitespace trim; content kept verbatim."""
    return unicodedata.normalize("NFC", text).strip()


def source_id(kind: SourceKind, name: str) -> str:
    return f"{kind.value}:{name}"


def _parse_created_at(value: Any, fallback: int) -> int:
    if value is None:
        return fallback
    if isinstance(value, bool):
        raise ValueError("created_at must be a timestamp")
    if isinstance(value, (int, float)):
        ms = int(value)
        # Heuristic: values below year 2603 in seconds are epoch seconds.
        return ms * 1000 if ms < 20_000_000_000 else ms
    if isinstance(value, str):
        from datetime import datetime, timezone

        parsed = datetime.fromisoformat(value.replace("Z", "+00:00"))
        if parsed.tzinfo is None:
            parsed = parsed.replace(tzinfo=timezone.utc)
        return int(parsed.timestamp() * 1000)
    raise ValueError("created_at must be a timestamp")


def build_ingest_batch(
    kind: SourceKind,
    source_name: str,
    records: Sequence[Any],
    existing_keys: set[tuple[str, str, str]],
    *,
    ingested_at: int | None = None,
) -> tuple[list[Complaint], IngestReport]:
    """Validate a raw batch into storable Complaints plus a report.

    Does not mutate any store; the caller commits the returned complaints.
    `existing_keys` holds the (kind, source, external_id) triples already
    stored; duplicates within the batch itself are also rejected.
    """
    if kind is SourceKind.MANUAL:
        raise RequestError("manual issues are added individually, not via dumps", code="invalid_source_kind")
    if not source_name.strip():
        raise RequestError("source_name must be non-empty", code="empty_source_name")

    at = now_ms() if ingested_at is None else ingested_at
    report = IngestReport(source_kind=kind, source_name=source_name)
    accepted: list[Complaint] = []
    seen_keys = set(existing_keys)

    for index, record in enumerate(records):
        if not isinstance(record, dict):
            report.reject(index, "malformed record")
            continue

        if kind is SourceKind.APP_STORE_REVIEW:
            rating = record.get("rating")
            if not isinstance(rating, int) or isinstance(rating, bool) or rating not in VALID_RATINGS:
                report.reject(index, "invalid rating")
                continue
            if rating not in STORED_RATINGS:
                report.filtered += 1
                continue
        else:
            rating = None

        body_raw = record.get("body")
        if not isinstance(body_raw, str):
            report.reject(index, "missing body")
            continue
        body = normalize_body(body_raw)
        if not body:
            report.reject(index, "empty body")
            continue

        external_id = record.get("external_id")
        if external_id is not None:
            external_id = str(external_id)
            key = (kind.value, source_name, external_id)
            if key in seen_keys:
                report.reject(index, "duplicate")
                continue
            seen_keys.add(key)

        try:
            created_at = _parse_created_at(record.get("created_at"), at)
        except ValueError:
            report.reject(index, "invalid created_at")
            continue

        author = record.get("author")
        complaint = Complaint(
            id=new_id(),
            source_kind=kind,
            source_name=source_name,
            body=body,
            created_at=created_at,
            ingested_at=at,
            external_id=external_id,
            author_handle=str(author) if author is not None else None,
            star_rating=rating,
        )
        accepted.append(complaint)
        report.accepted += 1
        report.accepted_ids.append(complaint.id)

    return accepted, report


def build_manual_issue(author_handle: str, body: str, *, ingested_at: int | None = None) -> Complaint:
    """Create a manual Complaint; never deduplicated, no external id."""
    normalized = normalize_body(body)
    if not normalized:
        raise RequestError("issue body must be non-empty", code="empty_body")
    at = now_ms() if ingested_at is None else ingested_at
    return Complaint(
        id=new_id(),
        source_kind=SourceKind.MANUAL,
        source_name="manual",
        body=normalized,
        created_at=at,
        ingested_at=at,
        author_handle=author_handle or None,
    )


def read_dump_file(path: str | Path) -> list[dict]:
    """Load a newline-delimited JSON dump; blank lines are skipped."""
    records: list[dict] = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise RequestError(
                    f"line {line_no} of {path} is not valid JSON", code="malformed_dump"
                ) from exc
    return records


def sources_view(complaints: Iterable[Complaint], last_ingests: dict[str, int]) -> list[DataSource]:
    """Aggregate complaints into DataSource rows, ordered by (kind, name)."""
    counts: dict[tuple[str, str], int] = {}
    for complaint in complaints:
        key = (complaint.source_kind.value, complaint.source_name)
        counts[key] = counts.get(key, 0) + 1
    rows = [
        DataSource(
            id=f"{kind}:{name}",
            source_kind=SourceKind(kind),
            source_name=name,
            item_count=count,
            last_ingest_at=last_ingests.get(f"{kind}:{name}"),
        )
        for (kind, name), count in counts.items()
    ]
    rows.sort(key=lambda s: (s.source_kind.value, s.source_name))
    return rows
