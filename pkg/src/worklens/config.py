"""Service configuration, loaded from a JSON file."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .collaboration import DEFAULT_DISCLAIMER
from .errors import RequestError

PROVIDER_KINDS = ("live", "mock", "recorded")


@dataclass
class ProviderConfig:
    kind: str = "mock"
    base_url: str | None = None
    model: str | None = None
    fixtures_path: str | None = None

    def validate(self) -> None:
        if self.kind not in PROVIDER_KINDS:
            raise RequestError(f"provider kind must be one of {PROVIDER_KINDS}", code="invalid_config")
        if self.kind == "recorded" and not self.fixtures_path:
            raise RequestError("recorded provider requires fixtures_path", code="invalid_config")
        if self.kind == "live" and not (self.base_url and self.model):
            raise RequestError("live provider requires base_url and model", code="invalid_config")


@dataclass
class Config:
    data_dir: Path
    http_port: int = 8080
    provider: ProviderConfig = field(default_factory=ProviderConfig)
    chunk_budget: int = 50
    parallelism: int = 1
    disclaimer_text: str = DEFAULT_DISCLAIMER

    def validate(self) -> None:
        if self.chunk_budget < 1:
            raise RequestError("chunk_budget must be >= 1", code="invalid_config")
        if not 1 <= self.http_port <= 65535:
            raise RequestError("http_port must be in 1..65535", code="invalid_config")
        if self.parallelism < 1:
            raise RequestError("parallelism must be >= 1", code="invalid_config")
        self.provider.validate()

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        provider = ProviderConfig(**data.get("provider", {}))
        config = cls(
            data_dir=Path(data["data_dir"]),
            http_port=data.get("http_port", 8080),
            provider=provider,
            chunk_budget=data.get("chunk_budget", 50),
            parallelism=data.get("parallelism", 1),
            disclaimer_text=data.get("disclaimer_text", DEFAULT_DISCLAIMER),
        )
        config.validate()
        return config

    @classmethod
    def load(cls, path: str | Path) -> "Config":
        with open(path, encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def to_dict(self) -> dict:
        return {
            "data_dir": str(self.data_dir),
            "http_port": self.http_port,
            "provider": {
                "kind": self.provider.kind,
                "base_url": self.provider.base_url,
                "model": self.provider.model,
                "fixtures_path": self.provider.fixtures_path,
            },
            "chunk_budget": self.chunk_budget,
            "parallelism": self.parallelism,
            "disclaimer_text": self.disclaimer_text,
        }
