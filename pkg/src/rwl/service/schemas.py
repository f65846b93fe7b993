"""Pydantic request/response models shared by the HTTP API and the CLI."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field


class FamilyParams(BaseModel):
    """Graph family selector; king2/grid2 are accepted as shorthands for
    the 2-row boards."""

    kind: str
    n: int
    m: Optional[int] = None


class CountRequest(BaseModel):
    family: Optional[FamilyParams] = None
    graph_text: Optional[str] = None
    source: Optional[str] = None  # cosmetic label for graph_text input
    method: Literal["dp", "walk", "formula", "all"] = "all"


class Report(BaseModel):
    """One unit of machine-readable output.

    ``value`` is always an exact decimal string (or null); floating point
    appears only inside ``params`` for quadrature residuals and asymptotic
    ratios, rendered to 15 significant digits.
    """

    input: str
    method: str
    value: Optional[str] = None
    params: dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: float = 0.0
    status: str = "ok"


class ReportList(BaseModel):
    reports: list[Report]


class TableRequest(BaseModel):
    family: str
    m: Optional[int] = None
    n_max: int


class VerifyRequest(BaseModel):
    claim: str
    n_max: Optional[int] = None
    terms: Optional[int] = None
    tol: Optional[float] = None
    points: Optional[list[int]] = None
    random_graphs: int = 0
    seed: int = 0


class SeriesRequest(BaseModel):
    egf: Literal["gg2", "a087547", "a182525"]
    terms: int = 25


class ServiceInfo(BaseModel):
    name: str
    version: str
    families: list[str]
    methods: list[str]
    claims: list[str]
    series: list[str]
    limits: dict[str, int]
    workers: int
