"""Prompt pipeline: categorize complaints, summarize categories, suggest solutions."""

from .prompts import (
    DEFAULT_TEMPLATES,
    REQUIRED_PHRASES,
    PromptKind,
    PromptTemplate,
    data_block,
    normalize_category_name,
    parse_category_mapping,
    parse_numbered_list,
    render_prompt,
)
from .providers import (
    HTTPProvider,
    LLMProvider,
    MockProvider,
    RecordedResponseProvider,
)
from .runner import (
    CategorizationResult,
    CategoryAssignment,
    CategoryDraft,
    Pipeline,
    PipelineRun,
    RequestRecord,
    RunArtifacts,
    RunStatus,
    SolutionsResult,
    SummaryResult,
)

__all__ = [
    "DEFAULT_TEMPLATES",
    "REQUIRED_PHRASES",
    "PromptKind",
    "PromptTemplate",
    "data_block",
    "normalize_category_name",
    "parse_category_mapping",
    "parse_numbered_list",
    "render_prompt",
    "HTTPProvider",
    "LLMProvider",
    "MockProvider",
    "RecordedResponseProvider",
    "CategorizationResult",
    "CategoryAssignment",
    "CategoryDraft",
    "Pipeline",
    "PipelineRun",
    "RequestRecord",
    "RunArtifacts",
    "RunStatus",
    "SolutionsResult",
    "SummaryResult",
]
