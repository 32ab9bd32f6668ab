"""Shared fixtures: temp-dir services, providers, and seeded corpora."""

from __future__ import annotations

from pathlib import Path

import pytest

from worklens import demo
from worklens.config import Config
from worklens.pipeline import MockProvider, RecordedResponseProvider
from worklens.service import Service

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def mock_provider() -> MockProvider:
    return MockProvider()


@pytest.fixture
def make_service(tmp_path_factory):
    """Factory for isolated services; each call gets a fresh data dir."""

    def factory(provider=None, **overrides) -> Service:
        data_dir = tmp_path_factory.mktemp("data")
        config = Config(data_dir=data_dir, **overrides)
        return Service(config, provider=provider or MockProvider())

    return factory


@pytest.fixture
def service(make_service) -> Service:
    return make_service()


@pytest.fixture
def demo_service(make_service) -> Service:
    """Service seeded with the demo corpus and the recorded provider."""
    svc = make_service(provider=RecordedResponseProvider(demo.recorded_demo_pairs()))
    svc.ingest_records("subreddit", demo.SUBREDDIT_SOURCE, demo.demo_subreddit_records())
    svc.ingest_records("app_store_review", demo.REVIEW_SOURCE, demo.demo_review_records())
    return svc


@pytest.fixture
def categorized_service(demo_service) -> Service:
    demo_service.run_pipeline(wait=True)
    return demo_service


def category_id_by_name(svc: Service, name: str) -> str:
    for bar in svc.zoom_out()["bars"]:
        if bar["name"] == name:
            return bar["category_id"]
    raise AssertionError(f"no category named {name}")
