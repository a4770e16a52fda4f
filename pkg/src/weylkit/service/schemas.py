"""Pydantic request/response models for the service API."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field


class SystemParams(BaseModel):
    series: str = Field(pattern="^[A-Ga-g]$")
    rank: int = Field(ge=1, le=4)
    p: int = Field(ge=2)


class ElementPayload(BaseModel):
    """An affine group element given by a word or by its alcove tuple."""

    word: Optional[Union[str, list[str]]] = None
    alcove: Optional[list[int]] = None


class CharPayload(BaseModel):
    basis: Literal["weyl", "weight"] = "weyl"
    terms: list[dict] = Field(default_factory=list)


class RootsRequest(BaseModel):
    series: str = Field(pattern="^[A-Ga-g]$")
    rank: int = Field(ge=1, le=4)


class RootsResponse(BaseModel):
    series: str
    rank: int
    cartan: list[list[int]]
    positive_roots: list[list[int]]
    coroots: list[list[int]]
    coxeter_number: int
    rho: list[int]


class ElementsRequest(BaseModel):
    params: SystemParams
    max_len: int = Field(ge=0, le=16)
    dominant_only: bool = False


class ElementRecord(BaseModel):
    word: str
    alcove: list[int]
    length: int
    descents: list[str]
    dominant: Optional[bool] = None


class ElementsResponse(BaseModel):
    count: int
    elements: list[ElementRecord]


class DescentRequest(BaseModel):
    params: SystemParams
    element: ElementPayload


class DescentResponse(BaseModel):
    word: str
    alcove: list[int]
    length: int
    descents: list[str]


class KLRequest(BaseModel):
    params: SystemParams
    y: ElementPayload
    w: ElementPayload
    variant: Literal["kl", "r"] = "kl"


class KLResponse(BaseModel):
    variant: str
    coeffs: list[int]
    degree: int
    eval_one: int
    eval_minus_one: int


class CharRequest(BaseModel):
    params: SystemParams
    chi: list[int]
    times: Optional[list[int]] = None


class CharResponse(BaseModel):
    weyl: CharPayload
    weight: CharPayload
    dim: int


class TranslateRequest(BaseModel):
    params: SystemParams
    source: list[int]
    target: list[int]
    chi: Optional[list[int]] = None
    char: Optional[CharPayload] = None


class TranslateResponse(BaseModel):
    weyl: CharPayload
    weight: CharPayload
    dim: int


class DecomposeRequest(BaseModel):
    params: SystemParams
    weight: list[int]
    assume_lcf: bool = False


class DecomposeResponse(BaseModel):
    report: dict
    coefficients: dict[str, int]


class VerifyRequest(BaseModel):
    params: SystemParams
    max_len: int = Field(default=6, ge=0, le=16)
    box_radius: int = Field(default=10, ge=0, le=40)
    base: Literal["antidominant", "dominant"] = "antidominant"
    lam: Union[Literal["auto"], list[int]] = "auto"
    mu: Optional[list[int]] = None
    nu: Optional[list[int]] = None
    assume_lcf: bool = False
    jobs: int = Field(default=1, ge=1, le=16)


class VerifyResponse(BaseModel):
    ok: bool
    report: dict


class CacheRequest(BaseModel):
    params: SystemParams
    action: Literal["info", "clear", "save", "load"]
    path: Optional[str] = None


class CacheResponse(BaseModel):
    action: str
    entries: int
    path: Optional[str] = None
