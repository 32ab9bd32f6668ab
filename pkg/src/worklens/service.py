"""Process boundary: command validation, event commits, and query views.

Every state mutation funnels through `_commit`, which appends one event to
the log and applies it while holding the commit mutex. Event payloads carry
fully resolved ids so replay is deterministic.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Any, Sequence

from . import analytics, collaboration, ingestion, measures
from .collaboration import ChatMessage, FinalSolution, Origin, Solution
from .config import Config, ProviderConfig
from .errors import ConflictError, NotFoundError, RequestError
from .events import EventLog, read_snapshot, write_snapshot
from .ids import new_id, now_ms
from .ingestion import IngestReport, SourceKind
from .pipeline import (
    HTTPProvider,
    LLMProvider,
    MockProvider,
    Pipeline,
    PipelineRun,
    RecordedResponseProvider,
    RunStatus,
)
from .state import AppState, check_invariants


def build_provider(config: ProviderConfig) -> LLMProvider:
    if config.kind == "mock":
        return MockProvider()
    if config.kind == "recorded":
        return RecordedResponseProvider.from_file(config.fixtures_path)
    return HTTPProvider(config.base_url, config.model)


class Service:
    """Owns the event log, the in-memory state, and the pipeline job."""

    def __init__(self, config: Config, provider: LLMProvider | None = None) -> None:
        config.validate()
        self.config = config
        self.provider = provider or build_provider(config.provider)
        self._lock = threading.RLock()
        self._source_locks: dict[str, threading.Lock] = {}
        self._source_locks_guard = threading.Lock()
        self._run_lock = threading.Lock()
        self._active_run_id: str | None = None
        self._log = EventLog(config.data_dir)
        self._state = AppState()
        self._last_sequence_no = 0
        self._replay()

    @classmethod
    def open(cls, data_dir: str | Path, provider: LLMProvider | None = None, **overrides: Any) -> "Service":
        return cls(Config(data_dir=Path(data_dir), **overrides), provider=provider)

    # -- persistence --------------------------------------------------------

    def _replay(self) -> None:
        snapshot = read_snapshot(self.config.data_dir)
        if snapshot is not None:
            state_dict, last_sequence_no = snapshot
            self._state = AppState.from_dict(state_dict)
            self._last_sequence_no = last_sequence_no
        for event in self._log.read_from(self._last_sequence_no):
            self._state.apply(event)
            self._last_sequence_no = event.sequence_no

    def _commit(self, kind: str, payload: dict) -> None:
        with self._lock:
            event = self._log.append(kind, payload)
            self._state.apply(event)
            self._last_sequence_no = event.sequence_no

    def snapshot(self) -> Path:
        """Write a snapshot so future startups replay only tail events."""
        with self._lock:
            return write_snapshot(self.config.data_dir, self._state.to_dict(), self._last_sequence_no)

    def state_hash(self) -> str:
        with self._lock:
            return self._state.state_hash()

    def verify_invariants(self) -> None:
        with self._lock:
            check_invariants(self._state)

    # -- ingestion ----------------------------------------------------------

    def _source_lock(self, source_id: str) -> threading.Lock:
        with self._source_locks_guard:
            return self._source_locks.setdefault(source_id, threading.Lock())

    def ingest_records(self, kind: SourceKind | str, source_name: str, records: Sequence[Any]) -> IngestReport:
        """Ingest one dump batch; runs for the same source are serialized."""
        try:
            kind = SourceKind(kind)
        except ValueError:
            raise RequestError(f"unknown source kind: {kind}", code="invalid_source_kind") from None
        sid = ingestion.source_id(kind, source_name)
        with self._source_lock(sid):
            with self._lock:
                existing = self._state.dedup_keys()
            at = now_ms()
            complaints, report = ingestion.build_ingest_batch(
                kind, source_name, records, existing, ingested_at=at
            )
            if complaints:
                self._commit(
                    "complaints_ingested",
                    {
                        "source_id": sid,
                        "complaints": [c.to_dict() for c in complaints],
                        "ingested_at": at,
                    },
                )
        return report

    def ingest_dump_file(self, kind: SourceKind | str, source_name: str, path: str | Path) -> IngestReport:
        return self.ingest_records(kind, source_name, ingestion.read_dump_file(path))

    def add_manual_issue(self, author_handle: str, body: str) -> dict:
        complaint = ingestion.build_manual_issue(author_handle, body)
        self._commit("manual_issue_added", {"complaint": complaint.to_dict()})
        return complaint.to_dict()

    def list_sources(self) -> list[dict]:
        with self._lock:
            return [source.to_dict() for source in self._state.sources()]

    # -- pipeline -----------------------------------------------------------

    def _build_pipeline(self, provider: LLMProvider | None) -> Pipeline:
        return Pipeline(
            provider or self.provider,
            chunk_budget=self.config.chunk_budget,
            parallelism=self.config.parallelism,
        )

    def run_pipeline(self, *, wait: bool = True, provider: LLMProvider | None = None) -> dict:
        """Run categorize -> summarize-all -> suggest-solutions-all as one job."""
        if not self._run_lock.acquire(blocking=False):
            raise ConflictError("a pipeline run is already executing", code="already_running")
        try:
            with self._lock:
                corpus = self._state.corpus()
            if not corpus:
                raise RequestError("no complaints ingested yet", code="empty_corpus")
            run_id = new_id()
            self._active_run_id = run_id
        except BaseException:
            self._run_lock.release()
            raise

        if wait:
            try:
                return self._execute_run(run_id, provider)
            finally:
                self._finish_run()
        thread = threading.Thread(
            target=self._run_in_background, args=(run_id, provider), daemon=True
        )
        thread.start()
        return {"run_id": run_id, "status": "running"}

    def _run_in_background(self, run_id: str, provider: LLMProvider | None) -> None:
        try:
            self._execute_run(run_id, provider)
        except Exception:
            pass  # failed runs are committed with status=failed; nothing else to do
        finally:
            self._finish_run()

    def _finish_run(self) -> None:
        self._active_run_id = None
        self._run_lock.release()

    def _execute_run(self, run_id: str, provider: LLMProvider | None) -> dict:
        with self._lock:
            corpus = self._state.corpus()
            prior_summaries = {
                cat.name_key: cat.summary
                for cat in self._state.categories.values()
                if cat.summary is not None
            }
        pipeline = self._build_pipeline(provider)
        artifacts = pipeline.execute_full_run(
            corpus, run_id=run_id, prior_summaries=prior_summaries
        )

        with self._lock:
            categories_payload = []
            ai_solutions: list[Solution] = []
            finished_at = artifacts.run.finished_at
            for draft in artifacts.categories:
                existing = self._state.category_by_key(draft.name_key)
                category_id = existing.id if existing else new_id()
                summary = draft.summary
                description = analytics.first_sentence(summary) if summary else ""
                categories_payload.append(
                    {
                        "id": category_id,
                        "name": draft.display_name,
                        "name_key": draft.name_key,
                        "description": description,
                        "summary": summary,
                        "member_ids": draft.member_ids,
                    }
                )
                for body in draft.solution_bodies:
                    ai_solutions.append(
                        Solution(
                            id=new_id(),
                            category_id=category_id,
                            body=body,
                            origin=Origin.AI,
                            created_at=finished_at,
                            run_id=artifacts.run.id,
                        )
                    )
            self._commit(
                "pipeline_committed",
                {
                    "run": artifacts.run.to_dict(),
                    "categories": categories_payload,
                    "ai_solutions": [s.to_dict() for s in ai_solutions],
                    "unassigned_ids": artifacts.unassigned_ids,
                },
            )
            return self._run_payload(self._state.runs[artifacts.run.id])

    @staticmethod
    def _run_payload(run: PipelineRun) -> dict:
        return {
            "run_id": run.id,
            "status": run.status.value,
            "started_at": run.started_at,
            "finished_at": run.finished_at,
            "provider_id": run.provider_id,
            "chunk_count": run.chunk_count,
            "request_count": len(run.requests),
        }

    def run_status(self, run_id: str) -> dict:
        if run_id == self._active_run_id:
            return {"run_id": run_id, "status": "running"}
        with self._lock:
            run = self._state.runs.get(run_id)
            if run is None:
                raise NotFoundError(f"unknown pipeline run: {run_id}")
            return self._run_payload(run)

    def get_run(self, run_id: str) -> PipelineRun:
        with self._lock:
            run = self._state.runs.get(run_id)
        if run is None:
            raise NotFoundError(f"unknown pipeline run: {run_id}")
        return run

    # -- analytics ----------------------------------------------------------

    def zoom_out(self) -> dict:
        with self._lock:
            categories = list(self._state.categories.values())
            categorized = len(self._state.categorized_ids())
            unassigned = len(self._state.complaints) - categorized
            return analytics.build_zoom_out(categories, total_unassigned=unassigned).to_dict()

    def zoom_in(self, category_id: str, page: int = 1, page_size: int = 20) -> dict:
        with self._lock:
            category = analytics.require_category(self._state.categories, category_id)
            return analytics.build_zoom_in(category, self._state.complaints, page, page_size).to_dict()

    def list_unassigned(self) -> list[dict]:
        with self._lock:
            return [analytics.post_payload(c) for c in self._state.unassigned_complaints()]

    def upvote_problem(self, category_id: str, voter_handle: str) -> int:
        if not voter_handle.strip():
            raise RequestError("voter_handle must be non-empty", code="empty_voter_handle")
        with self._lock:
            category = analytics.require_category(self._state.categories, category_id)
            if voter_handle not in category.voter_handles:
                self._commit(
                    "problem_upvoted",
                    {"category_id": category_id, "voter_handle": voter_handle},
                )
            return self._state.categories[category_id].upvote_count

    # -- collaboration ------------------------------------------------------

    def _require_category(self, category_id: str):
        return analytics.require_category(self._state.categories, category_id)

    def get_chat(self, category_id: str) -> list[dict]:
        with self._lock:
            self._require_category(category_id)
            messages = sorted(self._state.chats.get(category_id, []), key=ChatMessage.sort_key)
            return [m.to_dict() for m in messages]

    def post_chat_message(self, category_id: str, author_handle: str, body: str) -> dict:
        if not body.strip():
            raise RequestError("message body must be non-empty", code="empty_body")
        if not author_handle.strip():
            raise RequestError("author_handle must be non-empty", code="empty_author")
        with self._lock:
            self._require_category(category_id)
            message = ChatMessage(new_id(), category_id, author_handle, body, now_ms())
            self._commit("chat_posted", {"message": message.to_dict()})
            return message.to_dict()

    def get_document(self, category_id: str) -> dict:
        with self._lock:
            self._require_category(category_id)
            document = self._state.documents.get(category_id)
            if document is None:
                return collaboration.SharedDocument(category_id).to_dict()
            return document.to_dict()

    def edit_document(self, category_id: str, base_version: int, new_body: str) -> dict:
        with self._lock:
            self._require_category(category_id)
            current = self._state.documents.get(category_id)
            current_version = current.version if current else 0
            if base_version != current_version:
                raise ConflictError(
                    f"document changed: base_version {base_version} != current {current_version}",
                    code="version_conflict",
                    current_version=current_version,
                    current_body=current.body if current else "",
                )
            self._commit(
                "document_edited",
                {"category_id": category_id, "body": new_body, "version": current_version + 1},
            )
            return self._state.documents[category_id].to_dict()

    def annotate_document(
        self, category_id: str, author_handle: str, start: int, end: int, note: str
    ) -> dict:
        if not note.strip():
            raise RequestError("annotation note must be non-empty", code="empty_note")
        with self._lock:
            self._require_category(category_id)
            document = self._state.documents.get(category_id)
            body = document.body if document else ""
            collaboration.validate_anchor(start, end, body)
            annotation = collaboration.Annotation(new_id(), author_handle, start, end, note, now_ms())
            self._commit(
                "document_annotated",
                {"category_id": category_id, "annotation": annotation.to_dict()},
            )
            return annotation.to_dict()

    def list_solutions(self, category_id: str) -> list[dict]:
        with self._lock:
            self._require_category(category_id)
            ordered = collaboration.order_solutions(self._state.solutions_for(category_id))
            return [collaboration.solution_payload(s, self.config.disclaimer_text) for s in ordered]

    def propose_solution(self, category_id: str, author_handle: str, body: str) -> dict:
        if not body.strip():
            raise RequestError("solution body must be non-empty", code="empty_body")
        if not author_handle.strip():
            raise RequestError("author_handle must be non-empty", code="empty_author")
        with self._lock:
            self._require_category(category_id)
            solution = Solution(
                id=new_id(),
                category_id=category_id,
                body=body,
                origin=Origin.HUMAN,
                created_at=now_ms(),
                author_handle=author_handle,
            )
            self._commit("solution_proposed", {"solution": solution.to_dict()})
            return collaboration.solution_payload(solution, self.config.disclaimer_text)

    def vote_solution(self, solution_id: str, voter_handle: str, *, category_id: str | None = None) -> int:
        if not voter_handle.strip():
            raise RequestError("voter_handle must be non-empty", code="empty_voter_handle")
        with self._lock:
            if category_id is not None:
                self._require_category(category_id)
            solution = self._state.solutions.get(solution_id)
            if solution is None:
                raise NotFoundError(f"unknown solution: {solution_id}")
            if category_id is not None and solution.category_id != category_id:
                raise RequestError(
                    "solution belongs to a different category", code="cross_category_solution"
                )
            if voter_handle not in solution.voter_handles:
                self._commit(
                    "solution_voted",
                    {"solution_id": solution_id, "voter_handle": voter_handle},
                )
            return self._state.solutions[solution_id].vote_count

    def generate_ai_solutions(self, category_id: str, provider: LLMProvider | None = None) -> list[dict]:
        """On-demand AI suggestions for one category; nothing stored on parse failure."""
        with self._lock:
            category = self._require_category(category_id)
            members = [self._state.complaints[cid] for cid in category.member_complaint_ids]
        pipeline = self._build_pipeline(provider)
        started = now_ms()
        result = pipeline.solutions(category.name, members)
        run = PipelineRun(
            id=new_id(),
            started_at=started,
            finished_at=now_ms(),
            provider_id=pipeline.provider_id,
            chunk_count=1,
            requests=result.requests,
            status=RunStatus.SUCCEEDED,
        )
        with self._lock:
            self._require_category(category_id)
            solutions = [
                Solution(
                    id=new_id(),
                    category_id=category_id,
                    body=body,
                    origin=Origin.AI,
                    created_at=run.finished_at,
                    run_id=run.id,
                )
                for body in result.items
            ]
            self._commit(
                "ai_solutions_added",
                {
                    "run": run.to_dict(),
                    "category_id": category_id,
                    "solutions": [s.to_dict() for s in solutions],
                },
            )
            return [collaboration.solution_payload(s, self.config.disclaimer_text) for s in solutions]

    def finalize_solution(
        self, category_id: str, solution_id: str, decided_by: Sequence[str], *, replace: bool = False
    ) -> dict:
        with self._lock:
            self._require_category(category_id)
            solution = self._state.solutions.get(solution_id)
            if solution is None:
                raise NotFoundError(f"unknown solution: {solution_id}")
            if solution.category_id != category_id:
                raise RequestError(
                    "solution belongs to a different category", code="cross_category_solution"
                )
            if category_id in self._state.finals and not replace:
                raise ConflictError(
                    "category already has a final solution; pass replace to overwrite",
                    code="already_finalized",
                )
            final = FinalSolution(category_id, solution_id, now_ms(), sorted(set(decided_by)))
            self._commit("solution_finalized", {"final": final.to_dict()})
            return self.get_final(category_id)

    def get_final(self, category_id: str) -> dict | None:
        with self._lock:
            self._require_category(category_id)
            final = self._state.finals.get(category_id)
            if final is None:
                return None
            payload = final.to_dict()
            payload["solution"] = collaboration.solution_payload(
                self._state.solutions[final.solution_id], self.config.disclaimer_text
            )
            return payload

    # -- measurement --------------------------------------------------------

    def start_task(self, session_id: str, task_index: int) -> dict:
        measures.validate_task_index(task_index)
        with self._lock:
            key = self._state.timing_key(session_id, task_index)
            if key in self._state.timings:
                raise ConflictError(
                    f"task {task_index} already started for session {session_id}",
                    code="already_started",
                )
            self._commit(
                "task_started",
                {"session_id": session_id, "task_index": task_index, "at": now_ms()},
            )
            return self._state.timings[key].to_dict()

    def stop_task(self, session_id: str, task_index: int) -> dict:
        measures.validate_task_index(task_index)
        with self._lock:
            key = self._state.timing_key(session_id, task_index)
            timing = self._state.timings.get(key)
            if timing is None:
                raise ConflictError(
                    f"task {task_index} was never started for session {session_id}",
                    code="not_started",
                )
            if timing.stopped_at is not None:
                raise ConflictError(
                    f"task {task_index} already stopped for session {session_id}",
                    code="already_stopped",
                )
            self._commit(
                "task_stopped",
                {"session_id": session_id, "task_index": task_index, "at": now_ms()},
            )
            return self._state.timings[key].to_dict()

    def record_sus(self, session_id: str, answers: list[int]) -> dict:
        score = measures.sus_composite(answers)
        rating = measures.sus_adjectival(score)
        self._commit(
            "sus_recorded",
            {
                "session_id": session_id,
                "answers": answers,
                "score": score,
                "rating": rating,
                "at": now_ms(),
            },
        )
        return {"session_id": session_id, "score": score, "rating": rating}
