"""Per-category workspace: chat, versioned shared document, solution board.

Human solutions always rank above AI ones; every AI solution payload carries
the disclaimer text. The shared document uses optimistic versioning with
whole-body replace; annotations whose anchors fall outside the current body
are flagged orphaned, never deleted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import RequestError

DEFAULT_DISCLAIMER = "AI-generated suggestion — may contain errors; review before acting."
AI_ORIGIN_LABEL = "generated using Generative AI"


class Origin(str, Enum):
    HUMAN = "human"
    AI = "ai"


@dataclass
class ChatMessage:
    id: str
    category_id: str
    author_handle: str
    body: str
    created_at: int

    def sort_key(self) -> tuple[int, str]:
        return (self.created_at, self.id)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "category_id": self.category_id,
            "author_handle": self.author_handle,
            "body": self.body,
            "created_at": self.created_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChatMessage":
        return cls(data["id"], data["category_id"], data["author_handle"], data["body"], data["created_at"])


@dataclass
class Annotation:
    id: str
    author_handle: str
    start: int
    end: int
    note: str
    created_at: int
    orphaned: bool = False

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "author_handle": self.author_handle,
            "start": self.start,
            "end": self.end,
            "note": self.note,
            "created_at": self.created_at,
            "orphaned": self.orphaned,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Annotation":
        return cls(
            data["id"], data["author_handle"], data["start"], data["end"],
            data["note"], data["created_at"], data["orphaned"],
        )


@dataclass
class SharedDocument:
    category_id: str
    version: int = 0
    body: str = ""
    annotations: list[Annotation] = field(default_factory=list)

    def reflag_orphans(self) -> None:
        """An annotation is orphaned exactly when its anchor exceeds the body."""
        length = len(self.body)
        for annotation in self.annotations:
            annotation.orphaned = annotation.end > length

    def to_dict(self) -> dict:
        return {
            "category_id": self.category_id,
            "version": self.version,
            "body": self.body,
            "annotations": [a.to_dict() for a in self.annotations],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SharedDocument":
        return cls(
            category_id=data["category_id"],
            version=data["version"],
            body=data["body"],
            annotations=[Annotation.from_dict(a) for a in data["annotations"]],
        )


@dataclass
class Solution:
    id: str
    category_id: str
    body: str
    origin: Origin
    created_at: int
    author_handle: str | None = None
    run_id: str | None = None
    voter_handles: set[str] = field(default_factory=set)

    @property
    def vote_count(self) -> int:
        return len(self.voter_handles)

    @property
    def disclaimer_required(self) -> bool:
        return self.origin is Origin.AI

    def sort_key(self) -> tuple[int, int, int, str]:
        origin_rank = 0 if self.origin is Origin.HUMAN else 1
        return (origin_rank, -self.vote_count, self.created_at, self.id)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "category_id": self.category_id,
            "body": self.body,
            "origin": self.origin.value,
            "created_at": self.created_at,
            "author_handle": self.author_handle,
            "run_id": self.run_id,
            "voter_handles": sorted(self.voter_handles),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Solution":
        return cls(
            id=data["id"],
            category_id=data["category_id"],
            body=data["body"],
            origin=Origin(data["origin"]),
            created_at=data["created_at"],
            author_handle=data.get("author_handle"),
            run_id=data.get("run_id"),
            voter_handles=set(data["voter_handles"]),
        )


@dataclass
class FinalSolution:
    category_id: str
    solution_id: str
    decided_at: int
    decided_by: list[str]

    def to_dict(self) -> dict:
        return {
            "category_id": self.category_id,
            "solution_id": self.solution_id,
            "decided_at": self.decided_at,
            "decided_by": list(self.decided_by),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FinalSolution":
        return cls(data["category_id"], data["solution_id"], data["decided_at"], list(data["decided_by"]))


def order_solutions(solutions: list[Solution]) -> list[Solution]:
    """Total order: human before AI, then votes desc, then created_at asc, then id."""
    return sorted(solutions, key=Solution.sort_key)


def solution_payload(solution: Solution, disclaimer_text: str) -> dict:
    """Serialized board entry; only AI entries carry the disclaimer and AI label."""
    payload = {
        "id": solution.id,
        "category_id": solution.category_id,
        "body": solution.body,
        "origin": solution.origin.value,
        "author_handle": solution.author_handle,
        "run_id": solution.run_id,
        "vote_count": solution.vote_count,
        "disclaimer_required": solution.disclaimer_required,
        "created_at": solution.created_at,
    }
    if solution.origin is Origin.AI:
        payload["disclaimer"] = disclaimer_text
        payload["origin_label"] = AI_ORIGIN_LABEL
    return payload


def validate_anchor(start: int, end: int, body: str) -> None:
    """Anchors are half-open [start, end); zero-length point anchors are valid."""
    if start < 0 or end < start or end > len(body):
        raise RequestError(
            f"annotation anchor [{start}, {end}) is outside the document body "
            f"(length {len(body)})",
            code="anchor_out_of_range",
        )
