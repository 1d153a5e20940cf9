"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class PairRequest(BaseModel):
    t1: str = Field(description="first ED string, EDS text format")
    t2: str = Field(description="second ED string, EDS text format")


class IntersectRequest(PairRequest):
    mode: Literal["decide", "witness", "shortest", "longest", "count"] = "decide"


class IntersectResponse(BaseModel):
    answer: bool
    witness: Optional[str] = None
    length: Optional[int] = None
    count: Optional[int] = None


class MatchingStatisticsResponse(BaseModel):
    ms: list[int]


class CommonStringResponse(BaseModel):
    length: int
    witness: str


class EdsmRequest(BaseModel):
    pattern: str
    text: str
    mode: Literal["decide", "report"] = "decide"


class EdsmResponse(BaseModel):
    found: bool
    end_segments: Optional[list[int]] = None
    start_segments: Optional[list[int]] = None


class ApproxRequest(PairRequest):
    metric: Literal["hamming", "edit"] = "edit"
    k: Optional[int] = None


class ApproxEdsmRequest(BaseModel):
    pattern: str
    text: str
    metric: Literal["hamming", "edit"] = "edit"
    k: Optional[int] = None


class ApproxResponse(BaseModel):
    finite: bool
    distance: Optional[int] = None
    pair: Optional[tuple[str, str]] = None
    end_segments: Optional[list[int]] = None
    start_segments: Optional[list[int]] = None


class UnaryRequest(BaseModel):
    t1: str = Field(description="compact unary text: one segment per line")
    t2: str


class UnaryResponse(BaseModel):
    nonempty: bool
    lengths: list[int]


class AcronymRequest(BaseModel):
    dictionary: list[str]
    words: list[str]
    minlens: Optional[list[int]] = None


class AcronymResponse(BaseModel):
    answer: bool
    acronyms: list[str]


class GenerateRandomRequest(BaseModel):
    seed: int
    min_segments: int = 1
    max_segments: int = 6
    min_variants: int = 1
    max_variants: int = 4
    min_length: int = 1
    max_length: int = 4
    alphabet: int = 3
    eps_prob: float = 0.2


class GenerateRandomResponse(BaseModel):
    eds: str


class GenerateOvRequest(BaseModel):
    vectors: list[str]


class GenerateOvResponse(BaseModel):
    t1: str
    t2: str
