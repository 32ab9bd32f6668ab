"""Prompt templates, rendering, and response parsing.

Each template embeds its instruction text verbatim; tests assert that every
outgoing request still contains the phrases in REQUIRED_PHRASES after
rendering. The categorize template appends a machine-readability instruction
so responses come back as a strict JSON object {category -> [item indices]}.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..errors import ResponseParseError


class PromptKind(str, Enum):
    CATEGORIZE = "categorize"
    SUMMARIZE = "summarize"
    SOLUTIONS = "solutions"


CATEGORIZE_INSTRUCTION = (
    "Please categorize the following data into specific problem categories. "
    "The goal is to sort the large chunk of data into distinct categories for "
    "better comprehension. You should have a problem category with a name and "
    "a list of statements related to the problem. If you find a category or "
    "theme that is not a problem, do not include it"
)

SUMMARIZE_INSTRUCTION = (
    "Given the following dataset of complaints related to X (where X "
    "represents an identified problem category), please provide a concise "
    "summary of the problem to facilitate a comprehensive understanding."
)

SOLUTIONS_INSTRUCTION = (
    "Given the following dataset of complaints related to X (where X "
    "represents an identified problem category), please provide solutions to "
    "each problem category"
)

JSON_SHAPE_INSTRUCTION = (
    "Respond with a single JSON object mapping each problem category name to "
    "the array of bracketed item numbers that belong to it. Use the category "
    'name "Unassigned" for items that do not describe a problem.'
)

# Phrases that must appear verbatim in every outgoing request of each kind.
# They survive rendering because none of them contains the X placeholder.
REQUIRED_PHRASES: dict[PromptKind, tuple[str, ...]] = {
    PromptKind.CATEGORIZE: (
        "categorize the following data into specific problem categories",
        "If you find a category or theme that is not a problem, do not include it",
    ),
    PromptKind.SUMMARIZE: (
        "please provide a concise summary of the problem to facilitate a comprehensive understanding.",
    ),
    PromptKind.SOLUTIONS: ("please provide solutions to each problem category",),
}

# Category labels that mark non-problems; matching categories are dropped and
# their complaints become unassigned.
NON_PROBLEM_MARKERS = frozenset({"unassigned", "not a problem", "non-problem", "no problem", "none"})


@dataclass(frozen=True)
class PromptTemplate:
    """Template with a {data} placeholder and, for summarize/solutions, an X placeholder."""

    kind: PromptKind
    template_text: str


DEFAULT_TEMPLATES: dict[PromptKind, PromptTemplate] = {
    PromptKind.CATEGORIZE: PromptTemplate(
        PromptKind.CATEGORIZE,
        CATEGORIZE_INSTRUCTION + "\n\nData:\n{data}\n\n" + JSON_SHAPE_INSTRUCTION,
    ),
    PromptKind.SUMMARIZE: PromptTemplate(
        PromptKind.SUMMARIZE,
        SUMMARIZE_INSTRUCTION + "\n\nData:\n{data}",
    ),
    PromptKind.SOLUTIONS: PromptTemplate(
        PromptKind.SOLUTIONS,
        SOLUTIONS_INSTRUCTION + "\n\nData:\n{data}",
    ),
}

_ITEM_LINE = re.compile(r"^\[(\d+)\] (.*)$", re.MULTILINE)
_NUMBERED_ITEM = re.compile(r"^\s*\d+[.)]\s+(.*\S)\s*$")


def data_block(bodies: Sequence[str]) -> str:
    """Render complaint bodies as indexed lines; newlines inside a body are flattened."""
    return "\n".join(f"[{i}] {' '.join(body.split())}" for i, body in enumerate(bodies))


def parse_data_block(prompt: str) -> list[tuple[int, str]]:
    """Recover the indexed items embedded in a rendered prompt."""
    return [(int(m.group(1)), m.group(2)) for m in _ITEM_LINE.finditer(prompt)]


def render_prompt(
    template: PromptTemplate,
    bodies: Sequence[str],
    category_name: str | None = None,
) -> str:
    text = template.template_text.replace("{data}", data_block(bodies))
    if category_name is not None:
        text = re.sub(r"\bX\b", lambda _: category_name, text)
    return text


def normalize_category_name(name: str) -> str:
    """Identity key for category merging: trimmed, whitespace-collapsed, case-folded."""
    return " ".join(name.split()).casefold()


def display_category_name(name: str) -> str:
    """Display form: trimmed and whitespace-collapsed, original case kept."""
    return " ".join(name.split())


def parse_category_mapping(response: str) -> dict[str, list[int]]:
    """Parse a categorize response into {category name -> item indices}.

    Tolerates a fenced ```json block; anything else malformed raises.
    """
    text = response.strip()
    fence = re.search(r"```(?:json)?\s*(.*?)```", text, re.DOTALL)
    if fence:
        text = fence.group(1).strip()
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ResponseParseError("categorize response is not valid JSON") from exc
    if not isinstance(parsed, dict):
        raise ResponseParseError("categorize response must be a JSON object")
    mapping: dict[str, list[int]] = {}
    for name, indices in parsed.items():
        if not isinstance(name, str) or not isinstance(indices, list):
            raise ResponseParseError("categorize response must map names to index arrays")
        cleaned: list[int] = []
        for value in indices:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ResponseParseError("categorize response indices must be integers")
            cleaned.append(value)
        mapping[name] = cleaned
    return mapping


def parse_numbered_list(response: str) -> list[str]:
    """Parse a numbered list ("1. ..." / "2) ...") into item texts.

    Unnumbered continuation lines are folded into the current item.
    """
    items: list[str] = []
    for line in response.splitlines():
        match = _NUMBERED_ITEM.match(line)
        if match:
            items.append(match.group(1))
        elif items and line.strip():
            items[-1] = items[-1] + " " + line.strip()
    return items
