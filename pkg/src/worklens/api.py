"""HTTP/JSON API over the service; every error returns a structured document."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import ServiceError
from .service import Service


class IngestBody(BaseModel):
    source_name: str
    records: list[dict]


class ManualIssueBody(BaseModel):
    author_handle: str = ""
    body: str


class RunBody(BaseModel):
    wait: bool = False


class UpvoteBody(BaseModel):
    voter_handle: str


class ChatBody(BaseModel):
    author_handle: str
    body: str


class DocumentEditBody(BaseModel):
    base_version: int
    body: str


class AnnotationBody(BaseModel):
    author_handle: str
    start: int
    end: int
    note: str


class SolutionBody(BaseModel):
    author_handle: str
    body: str


class FinalizeBody(BaseModel):
    solution_id: str
    decided_by: list[str] = Field(default_factory=list)
    replace: bool = False


class SusBody(BaseModel):
    session_id: str
    answers: list[int]


def create_app(service: Service, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="worklens", version="0.1.0")

    @app.exception_handler(ServiceError)
    async def service_error_handler(_: Request, exc: ServiceError) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status, content={"error": exc.to_dict()})

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(_: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "invalid_request", "message": str(exc.errors())}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    # -- ingestion --------------------------------------------------------

    @app.post("/ingest/{kind}")
    def ingest(kind: str, body: IngestBody) -> dict:
        return service.ingest_records(kind, body.source_name, body.records).to_dict()

    @app.get("/sources")
    def sources() -> list[dict]:
        return service.list_sources()

    @app.post("/issues")
    def add_issue(body: ManualIssueBody) -> dict:
        return service.add_manual_issue(body.author_handle, body.body)

    # -- pipeline ---------------------------------------------------------

    @app.post("/pipeline/run")
    def run_pipeline(body: RunBody | None = None) -> dict:
        wait = body.wait if body is not None else False
        return service.run_pipeline(wait=wait)

    @app.get("/pipeline/runs/{run_id}")
    def run_status(run_id: str) -> dict:
        return service.run_status(run_id)

    # -- problems (zoom views, votes) --------------------------------------

    @app.get("/problems")
    def zoom_out() -> dict:
        return service.zoom_out()

    @app.get("/problems/unassigned")
    def unassigned() -> dict:
        posts = service.list_unassigned()
        return {"posts": posts, "total": len(posts)}

    @app.get("/problems/{category_id}")
    def zoom_in(
        category_id: str,
        page: int = Query(default=1),
        page_size: int = Query(default=20),
    ) -> dict:
        return service.zoom_in(category_id, page, page_size)

    @app.post("/problems/{category_id}/upvote")
    def upvote(category_id: str, body: UpvoteBody) -> dict:
        return {"upvote_count": service.upvote_problem(category_id, body.voter_handle)}

    # -- collaboration ------------------------------------------------------

    @app.get("/problems/{category_id}/chat")
    def get_chat(category_id: str) -> dict:
        return {"messages": service.get_chat(category_id)}

    @app.post("/problems/{category_id}/chat")
    def post_chat(category_id: str, body: ChatBody) -> dict:
        return service.post_chat_message(category_id, body.author_handle, body.body)

    @app.get("/problems/{category_id}/document")
    def get_document(category_id: str) -> dict:
        return service.get_document(category_id)

    @app.put("/problems/{category_id}/document")
    def edit_document(category_id: str, body: DocumentEditBody) -> dict:
        return service.edit_document(category_id, body.base_version, body.body)

    @app.post("/problems/{category_id}/document/annotations")
    def annotate(category_id: str, body: AnnotationBody) -> dict:
        return service.annotate_document(category_id, body.author_handle, body.start, body.end, body.note)

    @app.get("/problems/{category_id}/solutions")
    def list_solutions(category_id: str) -> dict:
        return {"solutions": service.list_solutions(category_id)}

    @app.post("/problems/{category_id}/solutions")
    def propose_solution(category_id: str, body: SolutionBody) -> dict:
        return service.propose_solution(category_id, body.author_handle, body.body)

    @app.post("/problems/{category_id}/solutions/{solution_id}/vote")
    def vote_solution(category_id: str, solution_id: str, body: UpvoteBody) -> dict:
        count = service.vote_solution(solution_id, body.voter_handle, category_id=category_id)
        return {"vote_count": count}

    @app.post("/problems/{category_id}/ai-solutions")
    def ai_solutions(category_id: str) -> dict:
        return {"solutions": service.generate_ai_solutions(category_id)}

    @app.post("/problems/{category_id}/final")
    def finalize(category_id: str, body: FinalizeBody) -> dict:
        return service.finalize_solution(
            category_id, body.solution_id, body.decided_by, replace=body.replace
        )

    @app.get("/problems/{category_id}/final")
    def get_final(category_id: str) -> dict:
        return {"final": service.get_final(category_id)}

    # -- measurement --------------------------------------------------------

    @app.post("/sessions/{session_id}/tasks/{task_index}/start")
    def start_task(session_id: str, task_index: int) -> dict:
        return service.start_task(session_id, task_index)

    @app.post("/sessions/{session_id}/tasks/{task_index}/stop")
    def stop_task(session_id: str, task_index: int) -> dict:
        return service.stop_task(session_id, task_index)

    @app.post("/sus")
    def record_sus(body: SusBody) -> dict:
        return service.record_sus(body.session_id, body.answers)

    if ui_dir is not None and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
