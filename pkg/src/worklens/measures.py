"""Session measurement utilities: task timing and SUS questionnaire scoring."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .errors import RequestError

TASK_COUNT = 6
SUS_ITEM_COUNT = 10

ADJECTIVAL_LABELS = ("Excellent", "Good", "Okay", "Awful", "Poor")


@dataclass
class TaskTiming:
    session_id: str
    task_index: int
    started_at: int
    stopped_at: int | None = None

    @property
    def duration_seconds(self) -> float | None:
        if self.stopped_at is None:
            return None
        return (self.stopped_at - self.started_at) / 1000.0

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "task_index": self.task_index,
            "started_at": self.started_at,
            "stopped_at": self.stopped_at,
            "duration_seconds": self.duration_seconds,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TaskTiming":
        return cls(data["session_id"], data["task_index"], data["started_at"], data.get("stopped_at"))


def validate_task_index(task_index: int) -> None:
    if not 1 <= task_index <= TASK_COUNT:
        raise RequestError(
            f"task_index must be in 1..{TASK_COUNT}", code="invalid_task_index"
        )


def validate_sus_answers(answers: list[int]) -> None:
    if len(answers) != SUS_ITEM_COUNT:
        raise RequestError(
            f"exactly {SUS_ITEM_COUNT} answers are required", code="invalid_sus_answers"
        )
    for answer in answers:
        if isinstance(answer, bool) or not isinstance(answer, int) or not 1 <= answer <= 5:
            raise RequestError("answers must be integers in 1..5", code="invalid_sus_answers")


def sus_composite(answers: list[int]) -> float:
    """Brooke composite: 2.5 x sum(odd items: a-1; even items: 5-a) in [0, 100]."""
    validate_sus_answers(answers)
    total = 0
    for position, answer in enumerate(answers, start=1):
        total += (answer - 1) if position % 2 == 1 else (5 - answer)
    return 2.5 * total


def sus_adjectival(score: float) -> str:
    """Adjectival band for a composite score; 68 exactly rates Okay."""
    if not 0 <= score <= 100:
        raise RequestError("score must be in [0, 100]", code="invalid_sus_score")
    if score > 80.3:
        return "Excellent"
    if score > 68:
        return "Good"
    if score == 68:
        return "Okay"
    if score >= 51:
        return "Awful"
    return "Poor"


def score_answer_rows(rows: list[list[int]]) -> list[dict]:
    """Score multiple 10-answer rows; used by the CLI and the HTTP endpoint."""
    results = []
    for answers in rows:
        score = sus_composite(answers)
        results.append({"answers": answers, "score": score, "rating": sus_adjectival(score)})
    return results


def read_answers_csv(path: str | Path) -> list[list[int]]:
    """Read rows of 10 answers from a CSV file; a header row is skipped if present."""
    rows: list[list[int]] = []
    with open(path, newline="", encoding="utf-8") as handle:
        for row_no, row in enumerate(csv.reader(handle), start=1):
            cells = [cell.strip() for cell in row if cell.strip()]
            if not cells:
                continue
            if row_no == 1 and not any(_is_int(cell) for cell in cells):
                continue
            try:
                rows.append([int(cell) for cell in cells])
            except ValueError:
                raise RequestError(
                    f"row {row_no} of {path} is not a row of integers", code="invalid_sus_answers"
                ) from None
    return rows


def _is_int(cell: str) -> bool:
    try:
        int(cell)
        return True
    except ValueError:
        return False
