"""Append-only JSONL event log and JSON state snapshots.

Sequence numbers are gapless and strictly increasing. A corrupt or truncated
record refuses replay with a diagnostic naming the last valid sequence_no.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ServiceError
from .ids import now_ms

LOG_FILENAME = "events.jsonl"
SNAPSHOT_FILENAME = "snapshot.json"


class LogCorruptError(ServiceError):
    http_status = 500
    code = "corrupt_event_log"

    def __init__(self, message: str, *, last_valid_sequence_no: int) -> None:
        super().__init__(message, last_valid_sequence_no=last_valid_sequence_no)
        self.last_valid_sequence_no = last_valid_sequence_no


@dataclass
class Event:
    sequence_no: int
    kind: str
    payload: dict
    recorded_at: int

    def to_dict(self) -> dict:
        return {
            "sequence_no": self.sequence_no,
            "kind": self.kind,
            "payload": self.payload,
            "recorded_at": self.recorded_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Event":
        return cls(data["sequence_no"], data["kind"], data["payload"], data["recorded_at"])


class EventLog:
    """One JSONL file; append is the single serialized commit point."""

    def __init__(self, data_dir: str | Path) -> None:
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.path = self.data_dir / LOG_FILENAME
        self._next_sequence_no = 1

    def append(self, kind: str, payload: dict) -> Event:
        event = Event(self._next_sequence_no, kind, payload, now_ms())
        line = json.dumps(event.to_dict(), ensure_ascii=False)
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(line + "\n")
            handle.flush()
            os.fsync(handle.fileno())
        self._next_sequence_no += 1
        return event

    def read_from(self, after_sequence_no: int = 0) -> list[Event]:
        """Read events with sequence_no > after_sequence_no, verifying gaplessness."""
        events: list[Event] = []
        expected = after_sequence_no + 1
        last_valid = after_sequence_no
        if not self.path.exists():
            self._next_sequence_no = max(self._next_sequence_no, expected)
            return events
        with open(self.path, encoding="utf-8") as handle:
            for raw_line in handle:
                line = raw_line.strip()
                if not line:
                    continue
                try:
                    data = json.loads(line)
                    event = Event.from_dict(data)
                except (json.JSONDecodeError, KeyError, TypeError):
                    raise LogCorruptError(
                        f"corrupt event log record after sequence_no {last_valid}; "
                        f"last valid sequence_no is {last_valid}",
                        last_valid_sequence_no=last_valid,
                    ) from None
                if event.sequence_no <= after_sequence_no:
                    last_valid = event.sequence_no
                    continue
                if event.sequence_no != expected:
                    raise LogCorruptError(
                        f"event log sequence gap: expected {expected}, "
                        f"found {event.sequence_no}; last valid sequence_no is {last_valid}",
                        last_valid_sequence_no=last_valid,
                    )
                events.append(event)
                last_valid = event.sequence_no
                expected += 1
        self._next_sequence_no = last_valid + 1
        return events


def write_snapshot(data_dir: str | Path, state_dict: dict, last_sequence_no: int) -> Path:
    path = Path(data_dir) / SNAPSHOT_FILENAME
    document = {"last_sequence_no": last_sequence_no, "state": state_dict}
    tmp_path = path.with_suffix(".json.tmp")
    with open(tmp_path, "w", encoding="utf-8") as handle:
        json.dump(document, handle, ensure_ascii=False)
        handle.flush()
        os.fsync(handle.fileno())
    tmp_path.replace(path)
    return path


def read_snapshot(data_dir: str | Path) -> tuple[dict, int] | None:
    """Return (state_dict, last_sequence_no) or None when no snapshot exists."""
    path = Path(data_dir) / SNAPSHOT_FILENAME
    if not path.exists():
        return None
    with open(path, encoding="utf-8") as handle:
        document = json.load(handle)
    return document["state"], document["last_sequence_no"]
