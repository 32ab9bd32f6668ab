"""Error types shared across modules; the API maps them to structured error documents."""

from __future__ import annotations

from typing import Any


class ServiceError(Exception):
    """Base for errors that surface as structured API error documents."""

    http_status = 500
    code = "internal_error"

    def __init__(self, message: str, *, code: str | None = None, **details: Any) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        doc: dict[str, Any] = {"code": self.code, "message": self.message}
        doc.update(self.details)
        return doc


class RequestError(ServiceError):
    """Invalid input supplied by the caller."""

    http_status = 400
    code = "invalid_request"


class NotFoundError(ServiceError):
    """Referenced entity does not exist."""

    http_status = 404
    code = "not_found"


class ConflictError(ServiceError):
    """State precondition failed (version mismatch, duplicate finalize, running job)."""

    http_status = 409
    code = "conflict"


class ProviderError(ServiceError):
    """Chat-completion provider failed after retries."""

    http_status = 502
    code = "provider_error"


class ResponseParseError(ServiceError):
    """Provider response did not match the expected shape."""

    http_status = 502
    code = "unparseable_response"
