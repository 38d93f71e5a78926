"""Request and response bodies for the HTTP service.

Digit expansions travel as literals in the same notation the CLI
prints, so any value in a response can be fed back into a request.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Notation = Literal["dotted", "tail"]


class SqrtRequest(BaseModel):
    a: int = Field(description="integer whose square root is wanted")
    base: int = 11
    prec: int = Field(6, ge=1)
    method: Literal["hensel", "binomial"] = "hensel"
    format: Optional[Notation] = None


class SqrtResponse(BaseModel):
    principal: str
    negated: str


class HenselRequest(BaseModel):
    poly: str = Field(description='terms like "x^2-x" or coefficients "0,-1,1"')
    base: int = 241
    prec: int = Field(3, ge=1)
    format: Optional[Notation] = None


class HenselResponse(BaseModel):
    roots: list[str]
    seeds: list[int]


class IdempotentsRequest(BaseModel):
    base: int = 10
    prec: int = Field(12, ge=1)
    format: Optional[Notation] = None


class IdempotentsResponse(BaseModel):
    idempotents: list[str]


class PeriodsRequest(BaseModel):
    base: int = 11
    prec: int = Field(6, ge=1)
    format: Optional[Notation] = None


class PeriodsResponse(BaseModel):
    a: str
    b: str


class LogRequest(BaseModel):
    x: str = Field(description="integer, dotted literal, or tail literal")
    base: int = 10
    prec: Optional[int] = Field(None, ge=1)
    format: Optional[Notation] = None


class LogResponse(BaseModel):
    value: str
    precision: int


class ConvertRequest(BaseModel):
    literal: str
    base: int
    to: Literal["dotted", "tail", "integer"]
    prec: Optional[int] = Field(None, ge=1)


class ConvertResponse(BaseModel):
    result: str


class NotebookEntry(BaseModel):
    label: str
    citation: str
    expected: str
    computed: str
    status: str
    corrected: Optional[str] = None


class NotebookResponse(BaseModel):
    version: str
    precision_override: Optional[int]
    entries: list[NotebookEntry]
    passed: int
    failed: int
    discrepancies: int
    ok: bool


class HealthResponse(BaseModel):
    name: str
    version: str
