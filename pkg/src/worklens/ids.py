"""Sortable time-ordered identifiers and UTC millisecond timestamps."""

from __future__ import annotations

import os
import threading
import time

# Crockford base32, as used by ULID: lexicographic order matches numeric order.
_ALPHABET = "0123456789ABCDEFGHJKMNPQRSTVWXYZ"

_lock = threading.Lock()
_last_ms = 0
_last_rand = 0


def now_ms() -> int:
    """Current UTC time in milliseconds since the epoch."""
    return time.time_ns() // 1_000_000


def _encode(value: int, length: int) -> str:
    chars = ["0"] * length
    for i in range(length - 1, -1, -1):
        chars[i] = _ALPHABET[value & 0x1F]
        value >>= 5
    return "".join(chars)


def new_id(at_ms: int | None = None) -> str:
    """Return a 26-char identifier: 48-bit timestamp + 80-bit randomness.

    Monotonic within this process: ids minted in the same millisecond get
    incremented randomness, so lexicographic order always follows mint order.
    """
    global _last_ms, _last_rand
    ts = now_ms() if at_ms is None else at_ms
    with _lock:
        if ts <= _last_ms:
            ts = _last_ms
            _last_rand += 1
        else:
            _last_ms = ts
            _last_rand = int.from_bytes(os.urandom(10), "big")
        rand = _last_rand & ((1 << 80) - 1)
    return _encode(ts, 10) + _encode(rand, 16)
