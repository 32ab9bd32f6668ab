"""Pipeline execution: chunking, retries, cross-chunk category merge, full runs."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

from ..errors import ProviderError, RequestError, ResponseParseError
from ..ids import new_id, now_ms
from ..ingestion import Complaint
from .prompts import (
    DEFAULT_TEMPLATES,
    NON_PROBLEM_MARKERS,
    PromptKind,
    PromptTemplate,
    display_category_name,
    normalize_category_name,
    parse_category_mapping,
    parse_numbered_list,
    render_prompt,
)
from .providers import LLMProvider


class RunStatus(str, Enum):
    SUCCEEDED = "succeeded"
    FAILED = "failed"
    PARTIAL = "partial"


@dataclass
class RequestRecord:
    """One provider exchange, stored verbatim so runs can be replayed."""

    kind: PromptKind
    prompt: str
    response: str

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "prompt": self.prompt, "response": self.response}

    @classmethod
    def from_dict(cls, data: dict) -> "RequestRecord":
        return cls(PromptKind(data["kind"]), data["prompt"], data["response"])


@dataclass
class PipelineRun:
    id: str
    started_at: int
    finished_at: int
    provider_id: str
    chunk_count: int
    requests: list[RequestRecord]
    status: RunStatus

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "provider_id": self.provider_id,
            "chunk_count": self.chunk_count,
            "requests": [r.to_dict() for r in self.requests],
            "status": self.status.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineRun":
        return cls(
            id=data["id"],
            started_at=data["started_at"],
            finished_at=data["finished_at"],
            provider_id=data["provider_id"],
            chunk_count=data["chunk_count"],
            requests=[RequestRecord.from_dict(r) for r in data["requests"]],
            status=RunStatus(data["status"]),
        )


@dataclass
class CategoryAssignment:
    complaint_id: str
    category_name: str  # normalized key
    run_id: str


@dataclass
class CategorizationResult:
    assignments: list[CategoryAssignment]
    display_names: dict[str, str]  # normalized key -> display name, first seen wins
    unassigned_ids: list[str]
    requests: list[RequestRecord]
    status: RunStatus
    chunk_count: int

    @property
    def category_names(self) -> set[str]:
        return set(self.display_names.values())


@dataclass
class SummaryResult:
    text: str
    chunk_count: int
    requests: list[RequestRecord]


@dataclass
class SolutionsResult:
    items: list[str]
    requests: list[RequestRecord]


@dataclass
class CategoryDraft:
    """A category produced by one full run, before commit."""

    name_key: str
    display_name: str
    member_ids: list[str]
    summary: str | None
    solution_bodies: list[str] = field(default_factory=list)


@dataclass
class RunArtifacts:
    run: PipelineRun
    categories: list[CategoryDraft]
    unassigned_ids: list[str]
    error: str | None = None


class Pipeline:
    """Executes the three prompt kinds against a provider.

    Requests are retried with exponential backoff; chunk requests can run
    concurrently up to `parallelism` while results keep chunk order.
    """

    def __init__(
        self,
        provider: LLMProvider,
        *,
        chunk_budget: int = 50,
        parallelism: int = 1,
        templates: dict[PromptKind, PromptTemplate] | None = None,
        max_attempts: int = 3,
        backoff_base: float = 0.5,
        sleep: Callable[[float], None] = time.sleep,
    ) -> None:
        if chunk_budget < 1:
            raise RequestError("chunk_budget must be >= 1", code="invalid_config")
        self.provider = provider
        self.chunk_budget = chunk_budget
        self.parallelism = max(1, parallelism)
        self.templates = templates or DEFAULT_TEMPLATES
        self.max_attempts = max_attempts
        self.backoff_base = backoff_base
        self._sleep = sleep

    @property
    def provider_id(self) -> str:
        return getattr(self.provider, "provider_id", "unknown")

    def _request(self, kind: PromptKind, prompt: str) -> RequestRecord:
        last_error: Exception | None = None
        for attempt in range(1, self.max_attempts + 1):
            try:
                return RequestRecord(kind, prompt, self.provider.complete(prompt))
            except Exception as exc:
                last_error = exc
                if attempt < self.max_attempts and self.backoff_base > 0:
                    self._sleep(self.backoff_base * 2 ** (attempt - 1))
        raise ProviderError(
            f"provider failed after {self.max_attempts} attempts: {last_error}"
        )

    def _request_many(self, kind: PromptKind, prompts: Sequence[str]) -> list[RequestRecord]:
        if self.parallelism > 1 and len(prompts) > 1:
            with ThreadPoolExecutor(max_workers=self.parallelism) as pool:
                return list(pool.map(lambda p: self._request(kind, p), prompts))
        return [self._request(kind, prompt) for prompt in prompts]

    def _chunks(self, complaints: Sequence[Complaint]) -> list[list[Complaint]]:
        return [
            list(complaints[i : i + self.chunk_budget])
            for i in range(0, len(complaints), self.chunk_budget)
        ]

    def categorize(self, complaints: Sequence[Complaint], *, run_id: str) -> CategorizationResult:
        """Assign each complaint to exactly one problem category or leave it unassigned.

        Non-problem labels are dropped (their complaints become unassigned);
        category names merge across chunks by normalized name. One unparseable
        chunk leaves that chunk unassigned and marks the result partial.
        """
        if not complaints:
            raise RequestError("no complaints to categorize", code="empty_corpus")
        chunks = self._chunks(complaints)
        template = self.templates[PromptKind.CATEGORIZE]
        prompts = [render_prompt(template, [c.body for c in chunk]) for chunk in chunks]
        records = self._request_many(PromptKind.CATEGORIZE, prompts)

        assignments: list[CategoryAssignment] = []
        display_names: dict[str, str] = {}
        assigned_ids: set[str] = set()
        status = RunStatus.SUCCEEDED

        for chunk, record in zip(chunks, records):
            try:
                mapping = parse_category_mapping(record.response)
            except ResponseParseError:
                status = RunStatus.PARTIAL
                continue
            for raw_name, indices in mapping.items():
                key = normalize_category_name(raw_name)
                if not key or key in NON_PROBLEM_MARKERS:
                    continue
                display_names.setdefault(key, display_category_name(raw_name))
                for index in indices:
                    if not 0 <= index < len(chunk):
                        continue
                    complaint = chunk[index]
                    if complaint.id in assigned_ids:
                        continue
                    assigned_ids.add(complaint.id)
                    assignments.append(CategoryAssignment(complaint.id, key, run_id))

        unassigned_ids = [c.id for c in complaints if c.id not in assigned_ids]
        return CategorizationResult(
            assignments=assignments,
            display_names=display_names,
            unassigned_ids=unassigned_ids,
            requests=records,
            status=status,
            chunk_count=len(chunks),
        )

    def summarize(self, category_name: str, complaints: Sequence[Complaint]) -> SummaryResult:
        """Summarize a category; over budget, summarize chunks then merge the summaries."""
        if not complaints:
            raise RequestError("category has no member complaints", code="empty_category")
        template = self.templates[PromptKind.SUMMARIZE]
        chunks = self._chunks(complaints)
        if len(chunks) == 1:
            record = self._request(
                PromptKind.SUMMARIZE,
                render_prompt(template, [c.body for c in complaints], category_name),
            )
            return SummaryResult(self._summary_text(record), 1, [record])

        prompts = [
            render_prompt(template, [c.body for c in chunk], category_name) for chunk in chunks
        ]
        records = self._request_many(PromptKind.SUMMARIZE, prompts)
        merge_record = self._request(
            PromptKind.SUMMARIZE,
            render_prompt(template, [self._summary_text(r) for r in records], category_name),
        )
        return SummaryResult(self._summary_text(merge_record), len(chunks), [*records, merge_record])

    @staticmethod
    def _summary_text(record: RequestRecord) -> str:
        text = record.response.strip()
        if not text:
            raise ResponseParseError("summary response is empty")
        return text

    def solutions(self, category_name: str, complaints: Sequence[Complaint]) -> SolutionsResult:
        """Generate candidate solutions; the full member data block goes into the prompt."""
        if not complaints:
            raise RequestError("category has no member complaints", code="empty_category")
        template = self.templates[PromptKind.SOLUTIONS]
        record = self._request(
            PromptKind.SOLUTIONS,
            render_prompt(template, [c.body for c in complaints], category_name),
        )
        items = parse_numbered_list(record.response)
        if not items:
            raise ResponseParseError("solutions response has no parseable list items")
        return SolutionsResult(items, [record])

    def execute_full_run(
        self,
        complaints: Sequence[Complaint],
        *,
        run_id: str | None = None,
        prior_summaries: dict[str, str] | None = None,
    ) -> RunArtifacts:
        """categorize -> summarize each category -> generate solutions, as one run.

        A categorize provider failure fails the whole run with no artifacts;
        per-category summarize/solutions failures degrade that category and
        mark the run partial. Committing the artifacts is the caller's job.
        """
        run_id = run_id or new_id()
        started = now_ms()
        prior = prior_summaries or {}

        try:
            categorization = self.categorize(complaints, run_id=run_id)
        except ProviderError as exc:
            chunk_count = len(self._chunks(complaints))
            run = PipelineRun(
                run_id, started, now_ms(), self.provider_id, chunk_count, [], RunStatus.FAILED
            )
            return RunArtifacts(run=run, categories=[], unassigned_ids=[], error=str(exc))

        requests = list(categorization.requests)
        status = categorization.status
        by_id = {c.id: c for c in complaints}
        members: dict[str, list[Complaint]] = {key: [] for key in categorization.display_names}
        for assignment in categorization.assignments:
            members[assignment.category_name].append(by_id[assignment.complaint_id])

        drafts: list[CategoryDraft] = []
        for key, display in categorization.display_names.items():
            category_members = members[key]
            if not category_members:
                continue
            try:
                summary_result = self.summarize(display, category_members)
                requests.extend(summary_result.requests)
                summary: str | None = summary_result.text
            except (ProviderError, ResponseParseError):
                summary = prior.get(key)
                status = RunStatus.PARTIAL
            try:
                solutions_result = self.solutions(display, category_members)
                requests.extend(solutions_result.requests)
                solution_bodies = solutions_result.items
            except (ProviderError, ResponseParseError):
                solution_bodies = []
                status = RunStatus.PARTIAL
            drafts.append(
                CategoryDraft(
                    name_key=key,
                    display_name=display,
                    member_ids=[c.id for c in category_members],
                    summary=summary,
                    solution_bodies=solution_bodies,
                )
            )

        run = PipelineRun(
            id=run_id,
            started_at=started,
            finished_at=now_ms(),
            provider_id=self.provider_id,
            chunk_count=categorization.chunk_count,
            requests=requests,
            status=status,
        )
        return RunArtifacts(
            run=run,
            categories=drafts,
            unassigned_ids=categorization.unassigned_ids,
        )
