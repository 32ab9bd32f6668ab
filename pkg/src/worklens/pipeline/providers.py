"""Chat-completion providers: live HTTP, deterministic mock, recorded replay."""

from __future__ import annotations

import json
import os
import re
from pathlib import Path
from typing import Iterable, Protocol

from ..errors import ProviderError
from .prompts import (
    CATEGORIZE_INSTRUCTION,
    SOLUTIONS_INSTRUCTION,
    SUMMARIZE_INSTRUCTION,
    parse_data_block,
)

API_KEY_ENV = "WORKLENS_API_KEY"


class LLMProvider(Protocol):
    provider_id: str

    def complete(self, prompt: str) -> str:
        """Return the model response for one prompt."""


# Ordered lexicon: a complaint goes to the first category whose keyword appears.
MOCK_LEXICON: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("Payment", ("payment", "fee", "withdraw")),
    ("Scam", ("scam", "fraud")),
    ("Usability", ("crash", "login", "bug")),
    ("Poor Customer Support", ("support", "ticket")),
    ("Platform Policy", ("policy", "connects")),
)

_CATEGORY_OF_PROMPT = re.compile(r"related to (.+?) \(where ")


def _prompt_category(prompt: str) -> str:
    match = _CATEGORY_OF_PROMPT.search(prompt)
    return match.group(1) if match else "the problem"


class MockProvider:
    """Offline test double: responses are a pure function of the prompt text."""

    provider_id = "mock"

    def lexicon_category(self, body: str) -> str:
        lowered = body.lower()
        for name, keywords in MOCK_LEXICON:
            if any(keyword in lowered for keyword in keywords):
                return name
        return "Unassigned"

    def complete(self, prompt: str) -> str:
        if CATEGORIZE_INSTRUCTION[:40] in prompt:
            return self._categorize(prompt)
        if "please provide a concise summary" in prompt:
            return self._summarize(prompt)
        if "please provide solutions" in prompt:
            return self._solutions(prompt)
        raise ProviderError("mock provider received an unrecognized prompt")

    def _categorize(self, prompt: str) -> str:
        buckets: dict[str, list[int]] = {name: [] for name, _ in MOCK_LEXICON}
        buckets["Unassigned"] = []
        for index, body in parse_data_block(prompt):
            buckets[self.lexicon_category(body)].append(index)
        return json.dumps({name: idx for name, idx in buckets.items() if idx})

    def _summarize(self, prompt: str) -> str:
        name = _prompt_category(prompt)
        count = len(parse_data_block(prompt))
        return f"Workers filed {count} complaints about {name}; the reports describe the same recurring problem."

    def _solutions(self, prompt: str) -> str:
        name = _prompt_category(prompt)
        return (
            f"1. Document every {name} incident and pool the evidence in a shared record.\n"
            f"2. Raise the pooled {name} complaints with the platform as one joint statement.\n"
            f"3. Publish a community guide that helps workers avoid known {name} pitfalls."
        )


class RecordedResponseProvider:
    """Replays stored prompt -> response pairs; unknown prompts fail loudly."""

    def __init__(self, pairs: Iterable[tuple[str, str]], *, provider_id: str = "recorded") -> None:
        self.provider_id = provider_id
        self._responses = {prompt: response for prompt, response in pairs}

    @classmethod
    def from_file(cls, path: str | Path) -> "RecordedResponseProvider":
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        pairs = [(entry["prompt"], entry["response"]) for entry in data["pairs"]]
        return cls(pairs, provider_id=f"recorded:{path}")

    @classmethod
    def from_run(cls, run) -> "RecordedResponseProvider":
        """Replay from a PipelineRun's verbatim request records."""
        return cls(
            [(record.prompt, record.response) for record in run.requests],
            provider_id=f"recorded:run:{run.id}",
        )

    def complete(self, prompt: str) -> str:
        try:
            return self._responses[prompt]
        except KeyError:
            raise ProviderError("no recorded response for prompt") from None


class HTTPProvider:
    """Live chat-completion endpoint; API key comes from the environment."""

    def __init__(
        self,
        base_url: str,
        model: str,
        *,
        api_key_env: str = API_KEY_ENV,
        timeout: float = 60.0,
    ) -> None:
        self.base_url = base_url.rstrip("/")
        self.model = model
        self.api_key_env = api_key_env
        self.timeout = timeout
        self.provider_id = f"live:{self.base_url}/{model}"

    def complete(self, prompt: str) -> str:
        import httpx

        api_key = os.environ.get(self.api_key_env, "")
        if not api_key:
            raise ProviderError(f"missing API key: set {self.api_key_env}")
        try:
            response = httpx.post(
                f"{self.base_url}/chat/completions",
                json={
                    "model": self.model,
                    "messages": [{"role": "user", "content": prompt}],
                },
                headers={"Authorization": f"Bearer {api_key}"},
                timeout=self.timeout,
            )
            response.raise_for_status()
            payload = response.json()
            return payload["choices"][0]["message"]["content"]
        except ProviderError:
            raise
        except Exception as exc:
            raise ProviderError(f"chat-completion request failed: {exc}") from exc
