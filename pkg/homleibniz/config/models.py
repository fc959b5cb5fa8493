"""Pydantic models for persisted homleibniz configuration."""

from __future__ import annotations

from pydantic import BaseModel, Field

DEFAULT_SEPARATING_MAX_MULTIPLIER = 8
DEFAULT_JSON_INDENT = 2


class SearchConfig(BaseModel):
    """Bounds for the exhaustive searches."""

    separating_max_multiplier: int = Field(default=DEFAULT_SEPARATING_MAX_MULTIPLIER, ge=1)


class ReportConfig(BaseModel):
    """Report emission defaults used by the CLI."""

    json_indent: int = Field(default=DEFAULT_JSON_INDENT, ge=0)
    check_all: bool = False


class HomLeibnizConfig(BaseModel):
    """Top-level persisted homleibniz config."""

    search: SearchConfig = Field(default_factory=SearchConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)
