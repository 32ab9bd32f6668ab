"""Problem categories and the two zoom views over them."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import NotFoundError, RequestError
from .ingestion import Complaint


@dataclass
class ProblemCategory:
    """A named cluster of complaints with its summary and upvote tally."""

    id: str
    name: str  # display form
    name_key: str  # normalized identity used for cross-run matching
    description: str
    summary: str | None
    member_complaint_ids: list[str]
    voter_handles: set[str]
    run_id: str

    @property
    def upvote_count(self) -> int:
        return len(self.voter_handles)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "name_key": self.name_key,
            "description": self.description,
            "summary": self.summary,
            "member_complaint_ids": list(self.member_complaint_ids),
            "voter_handles": sorted(self.voter_handles),
            "run_id": self.run_id,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProblemCategory":
        return cls(
            id=data["id"],
            name=data["name"],
            name_key=data["name_key"],
            description=data["description"],
            summary=data.get("summary"),
            member_complaint_ids=list(data["member_complaint_ids"]),
            voter_handles=set(data["voter_handles"]),
            run_id=data["run_id"],
        )


@dataclass
class ZoomOutBar:
    category_id: str
    name: str
    complaint_count: int
    upvote_count: int
    description: str

    def to_dict(self) -> dict:
        return {
            "category_id": self.category_id,
            "name": self.name,
            "complaint_count": self.complaint_count,
            "upvote_count": self.upvote_count,
            "description": self.description,
        }


@dataclass
class ZoomOutView:
    bars: list[ZoomOutBar] = field(default_factory=list)
    total_categorized: int = 0
    total_unassigned: int = 0

    def to_dict(self) -> dict:
        return {
            "bars": [bar.to_dict() for bar in self.bars],
            "total_categorized": self.total_categorized,
            "total_unassigned": self.total_unassigned,
        }


@dataclass
class ZoomInView:
    category_id: str
    name: str
    summary: str | None
    posts: list[dict]
    page: int
    page_size: int
    total_posts: int
    upvote_count: int

    def to_dict(self) -> dict:
        return {
            "category_id": self.category_id,
            "name": self.name,
            "summary": self.summary,
            "posts": self.posts,
            "page": self.page,
            "page_size": self.page_size,
            "total_posts": self.total_posts,
            "upvote_count": self.upvote_count,
        }


def first_sentence(text: str) -> str:
    """Leading sentence of a summary, used as the category description."""
    stripped = " ".join(text.split())
    match = re.search(r"(.+?[.!?])(?:\s|$)", stripped)
    return match.group(1) if match else stripped


def build_zoom_out(
    categories: Sequence[ProblemCategory], total_unassigned: int
) -> ZoomOutView:
    """Aggregate bars, sorted by complaint count descending then name ascending."""
    bars = [
        ZoomOutBar(
            category_id=cat.id,
            name=cat.name,
            complaint_count=len(cat.member_complaint_ids),
            upvote_count=cat.upvote_count,
            description=cat.description,
        )
        for cat in categories
    ]
    bars.sort(key=lambda bar: (-bar.complaint_count, bar.name))
    return ZoomOutView(
        bars=bars,
        total_categorized=sum(bar.complaint_count for bar in bars),
        total_unassigned=total_unassigned,
    )


def post_payload(complaint: Complaint) -> dict:
    return {
        "id": complaint.id,
        "source_kind": complaint.source_kind.value,
        "source_name": complaint.source_name,
        "body": complaint.body,
        "created_at": complaint.created_at,
    }


def build_zoom_in(
    category: ProblemCategory,
    complaints: Mapping[str, Complaint],
    page: int,
    page_size: int,
) -> ZoomInView:
    """Detail view with stable pagination: created_at descending, then id."""
    if page < 1:
        raise RequestError("page must be >= 1", code="invalid_page")
    if page_size < 1:
        raise RequestError("page_size must be >= 1", code="invalid_page")
    members = [complaints[cid] for cid in category.member_complaint_ids]
    members.sort(key=lambda c: (-c.created_at, c.id))
    start = (page - 1) * page_size
    return ZoomInView(
        category_id=category.id,
        name=category.name,
        summary=category.summary,
        posts=[post_payload(c) for c in members[start : start + page_size]],
        page=page,
        page_size=page_size,
        total_posts=len(members),
        upvote_count=category.upvote_count,
    )


def require_category(
    categories: Mapping[str, ProblemCategory], category_id: str
) -> ProblemCategory:
    try:
        return categories[category_id]
    except KeyError:
        raise NotFoundError(f"unknown problem category: {category_id}") from None
