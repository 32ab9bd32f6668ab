"""In-memory application state, rebuilt deterministically from the event log.

Events carry fully resolved payloads (ids minted, conflicts already checked
at command time), so `apply` is a pure deterministic state transition and
replaying any prefix of the log yields a valid state.
"""

from __future__ import annotations

import hashlib
import json

from .analytics import ProblemCategory
from .collaboration import Annotation, ChatMessage, FinalSolution, SharedDocument, Solution
from .errors import ServiceError
from .events import Event
from .ingestion import Complaint, DataSource, sources_view
from .measures import TaskTiming
from .pipeline import PipelineRun


class AppState:
    def __init__(self) -> None:
        self.complaints: dict[str, Complaint] = {}
        self.source_last_ingest: dict[str, int] = {}
        self.categories: dict[str, ProblemCategory] = {}
        self.runs: dict[str, PipelineRun] = {}
        self.last_run_id: str | None = None
        self.chats: dict[str, list[ChatMessage]] = {}
        self.documents: dict[str, SharedDocument] = {}
        self.solutions: dict[str, Solution] = {}
        self.finals: dict[str, FinalSolution] = {}
        self.timings: dict[str, TaskTiming] = {}
        self.sus_responses: list[dict] = []

    # -- queries used by commands and views -------------------------------

    def corpus(self) -> list[Complaint]:
        return list(self.complaints.values())

    def dedup_keys(self) -> set[tuple[str, str, str]]:
        keys = set()
        for complaint in self.complaints.values():
            key = complaint.dedup_key()
            if key is not None:
                keys.add(key)
        return keys

    def sources(self) -> list[DataSource]:
        return sources_view(self.complaints.values(), self.source_last_ingest)

    def category_by_key(self, name_key: str) -> ProblemCategory | None:
        for category in self.categories.values():
            if category.name_key == name_key:
                return category
        return None

    def categorized_ids(self) -> set[str]:
        ids: set[str] = set()
        for category in self.categories.values():
            ids.update(category.member_complaint_ids)
        return ids

    def unassigned_complaints(self) -> list[Complaint]:
        assigned = self.categorized_ids()
        rows = [c for c in self.complaints.values() if c.id not in assigned]
        rows.sort(key=lambda c: (-c.created_at, c.id))
        return rows

    def solutions_for(self, category_id: str) -> list[Solution]:
        return [s for s in self.solutions.values() if s.category_id == category_id]

    def timing_key(self, session_id: str, task_index: int) -> str:
        return f"{session_id}:{task_index}"

    # -- event application -------------------------------------------------

    def apply(self, event: Event) -> None:
        handler = _HANDLERS.get(event.kind)
        if handler is None:
            raise ServiceError(f"unknown event kind: {event.kind}", code="unknown_event_kind")
        handler(self, event.payload)

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "complaints": [c.to_dict() for c in self.complaints.values()],
            "source_last_ingest": dict(self.source_last_ingest),
            "categories": [c.to_dict() for c in self.categories.values()],
            "runs": [r.to_dict() for r in self.runs.values()],
            "last_run_id": self.last_run_id,
            "chats": {cid: [m.to_dict() for m in msgs] for cid, msgs in self.chats.items()},
            "documents": [d.to_dict() for d in self.documents.values()],
            "solutions": [s.to_dict() for s in self.solutions.values()],
            "finals": [f.to_dict() for f in self.finals.values()],
            "timings": [t.to_dict() for t in self.timings.values()],
            "sus_responses": list(self.sus_responses),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AppState":
        state = cls()
        for item in data["complaints"]:
            complaint = Complaint.from_dict(item)
            state.complaints[complaint.id] = complaint
        state.source_last_ingest = dict(data["source_last_ingest"])
        for item in data["categories"]:
            category = ProblemCategory.from_dict(item)
            state.categories[category.id] = category
        for item in data["runs"]:
            run = PipelineRun.from_dict(item)
            state.runs[run.id] = run
        state.last_run_id = data.get("last_run_id")
        state.chats = {
            cid: [ChatMessage.from_dict(m) for m in msgs] for cid, msgs in data["chats"].items()
        }
        for item in data["documents"]:
            document = SharedDocument.from_dict(item)
            state.documents[document.category_id] = document
        for item in data["solutions"]:
            solution = Solution.from_dict(item)
            state.solutions[solution.id] = solution
        for item in data["finals"]:
            final = FinalSolution.from_dict(item)
            state.finals[final.category_id] = final
        for item in data["timings"]:
            timing = TaskTiming.from_dict(item)
            state.timings[state.timing_key(timing.session_id, timing.task_index)] = timing
        state.sus_responses = list(data["sus_responses"])
        return state

    def state_hash(self) -> str:
        canonical = json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


# -- handlers (deterministic, validation already done at command time) -----


def _apply_complaints_ingested(state: AppState, payload: dict) -> None:
    for item in payload["complaints"]:
        complaint = Complaint.from_dict(item)
        state.complaints[complaint.id] = complaint
    state.source_last_ingest[payload["source_id"]] = payload["ingested_at"]


def _apply_manual_issue_added(state: AppState, payload: dict) -> None:
    complaint = Complaint.from_dict(payload["complaint"])
    state.complaints[complaint.id] = complaint


def _apply_pipeline_committed(state: AppState, payload: dict) -> None:
    run = PipelineRun.from_dict(payload["run"])
    state.runs[run.id] = run
    if run.status.value == "failed":
        return
    state.last_run_id = run.id

    new_ids = set()
    for entry in payload["categories"]:
        new_ids.add(entry["id"])
        existing = state.categories.get(entry["id"])
        voters = existing.voter_handles if existing else set()
        existing_summary = existing.summary if existing else None
        summary = entry["summary"] if entry["summary"] is not None else existing_summary
        state.categories[entry["id"]] = ProblemCategory(
            id=entry["id"],
            name=entry["name"],
            name_key=entry["name_key"],
            description=entry["description"],
            summary=summary,
            member_complaint_ids=list(entry["member_ids"]),
            voter_handles=voters,
            run_id=run.id,
        )

    # Categories not reproduced by this run are retired along with their
    # collaboration content; the event log keeps the history.
    for retired_id in [cid for cid in state.categories if cid not in new_ids]:
        del state.categories[retired_id]
        state.chats.pop(retired_id, None)
        state.documents.pop(retired_id, None)
        state.finals.pop(retired_id, None)
        for sid in [sid for sid, s in state.solutions.items() if s.category_id == retired_id]:
            del state.solutions[sid]

    for item in payload["ai_solutions"]:
        solution = Solution.from_dict(item)
        state.solutions[solution.id] = solution


def _apply_ai_solutions_added(state: AppState, payload: dict) -> None:
    run = PipelineRun.from_dict(payload["run"])
    state.runs[run.id] = run
    for item in payload["solutions"]:
        solution = Solution.from_dict(item)
        state.solutions[solution.id] = solution


def _apply_problem_upvoted(state: AppState, payload: dict) -> None:
    state.categories[payload["category_id"]].voter_handles.add(payload["voter_handle"])


def _apply_chat_posted(state: AppState, payload: dict) -> None:
    message = ChatMessage.from_dict(payload["message"])
    state.chats.setdefault(message.category_id, []).append(message)


def _apply_document_edited(state: AppState, payload: dict) -> None:
    category_id = payload["category_id"]
    document = state.documents.setdefault(category_id, SharedDocument(category_id))
    document.body = payload["body"]
    document.version = payload["version"]
    document.reflag_orphans()


def _apply_document_annotated(state: AppState, payload: dict) -> None:
    category_id = payload["category_id"]
    document = state.documents.setdefault(category_id, SharedDocument(category_id))
    document.annotations.append(Annotation.from_dict(payload["annotation"]))


def _apply_solution_proposed(state: AppState, payload: dict) -> None:
    solution = Solution.from_dict(payload["solution"])
    state.solutions[solution.id] = solution


def _apply_solution_voted(state: AppState, payload: dict) -> None:
    state.solutions[payload["solution_id"]].voter_handles.add(payload["voter_handle"])


def _apply_solution_finalized(state: AppState, payload: dict) -> None:
    final = FinalSolution.from_dict(payload["final"])
    state.finals[final.category_id] = final


def _apply_task_started(state: AppState, payload: dict) -> None:
    timing = TaskTiming(payload["session_id"], payload["task_index"], payload["at"])
    state.timings[state.timing_key(timing.session_id, timing.task_index)] = timing


def _apply_task_stopped(state: AppState, payload: dict) -> None:
    key = state.timing_key(payload["session_id"], payload["task_index"])
    state.timings[key].stopped_at = payload["at"]


def _apply_sus_recorded(state: AppState, payload: dict) -> None:
    state.sus_responses.append(
        {
            "session_id": payload["session_id"],
            "answers": list(payload["answers"]),
            "score": payload["score"],
            "rating": payload["rating"],
            "at": payload["at"],
        }
    )


_HANDLERS = {
    "complaints_ingested": _apply_complaints_ingested,
    "manual_issue_added": _apply_manual_issue_added,
    "pipeline_committed": _apply_pipeline_committed,
    "ai_solutions_added": _apply_ai_solutions_added,
    "problem_upvoted": _apply_problem_upvoted,
    "chat_posted": _apply_chat_posted,
    "document_edited": _apply_document_edited,
    "document_annotated": _apply_document_annotated,
    "solution_proposed": _apply_solution_proposed,
    "solution_voted": _apply_solution_voted,
    "solution_finalized": _apply_solution_finalized,
    "task_started": _apply_task_started,
    "task_stopped": _apply_task_stopped,
    "sus_recorded": _apply_sus_recorded,
}


def check_invariants(state: AppState) -> None:
    """Assert every cross-module invariant; used by replay and fuzz tests."""
    dedup_seen: set[tuple[str, str, str]] = set()
    for complaint in state.complaints.values():
        assert complaint.body.strip(), "complaint body must be non-empty"
        if complaint.source_kind.value == "app_store_review":
            assert complaint.star_rating in (1, 2, 3), "stored review ratings must be 1..3"
        else:
            assert complaint.star_rating is None, "only reviews carry star ratings"
        key = complaint.dedup_key()
        if key is not None:
            assert key not in dedup_seen, f"duplicate dedup key {key}"
            dedup_seen.add(key)

    seen_keys: set[str] = set()
    seen_members: set[str] = set()
    for category in state.categories.values():
        assert category.member_complaint_ids, "live categories must have members"
        assert category.name_key not in seen_keys, "live category names must be unique"
        seen_keys.add(category.name_key)
        for member_id in category.member_complaint_ids:
            assert member_id in state.complaints, "members must reference stored complaints"
            assert member_id not in seen_members, "a complaint belongs to at most one category"
            seen_members.add(member_id)
        assert category.upvote_count == len(category.voter_handles)

    for category_id, messages in state.chats.items():
        assert category_id in state.categories
        keys = [m.sort_key() for m in messages]
        assert keys == sorted(keys), "chat threads are totally ordered"

    for document in state.documents.values():
        assert document.category_id in state.categories
        assert document.version >= 0
        for annotation in document.annotations:
            assert 0 <= annotation.start <= annotation.end
            assert annotation.orphaned == (annotation.end > len(document.body))

    for solution in state.solutions.values():
        assert solution.category_id in state.categories
        if solution.origin.value == "ai":
            assert solution.disclaimer_required
            assert solution.run_id
        else:
            assert not solution.disclaimer_required
            assert solution.author_handle
        assert solution.vote_count == len(solution.voter_handles)

    for final in state.finals.values():
        assert final.solution_id in state.solutions
        assert state.solutions[final.solution_id].category_id == final.category_id

    for timing in state.timings.values():
        assert 1 <= timing.task_index <= 6
        if timing.stopped_at is not None:
            assert timing.stopped_at >= timing.started_at

    for response in state.sus_responses:
        assert len(response["answers"]) == 10
        assert all(1 <= a <= 5 for a in response["answers"])
