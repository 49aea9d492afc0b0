"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class RootsRequest(BaseModel):
    type: str


class RootsResponse(BaseModel):
    type: str
    rank: int
    cartan: list[list[int]]
    positive_coroots: list[list[str]]
    num_positive_coroots: int
    rho: list[str]
    weyl_order: int
    longest_element_word: str


class PLambdaRequest(BaseModel):
    type: str
    weight: str


class FactorModel(BaseModel):
    coroot: list[str]
    shift: str
    text: str


class TermModel(BaseModel):
    exponents: list[int]
    coeff: str


class PLambdaResponse(BaseModel):
    type: str
    weight: list[str]
    degree: int
    degree_check: bool
    divisibility_check: bool
    factors: list[FactorModel]
    expanded: str
    expanded_terms: list[TermModel]


class WitnessRequest(BaseModel):
    type: str
    weight: str
    point: str


class WitnessResponse(BaseModel):
    type: str
    weight: list[str]
    point: list[str]
    witness_word: str
    witness_reduced_word: list[int]
    witness_matrix: list[list[int]]
    value_at_x: str
    strategy: str
    expanded: str
    degree: int


class OracleRequest(BaseModel):
    factors: str | list[int]


class OracleResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: list[int] = Field(alias="lambda")
    dim_invariant_space: int
    scalar: str
    passed: bool = Field(alias="pass")
    formula: str
    oracle_canonical: str


class GlueDemoRequest(BaseModel):
    example: str = "tildeA"
    cutoff: Optional[int] = None


class CornerInfo(BaseModel):
    dim: int
    square_zero_generator: Optional[bool] = None


class GlueDemoResponse(BaseModel):
    example: str
    dim: int
    basis: list[str]
    radical_dim: int
    corners: dict[str, CornerInfo]
    faithful: bool
    global_dimension: str
    resolutions: dict[str, str]


class QuiverArrow(BaseModel):
    name: str
    src: str
    tgt: str


class QuiverSpec(BaseModel):
    vertices: list[str]
    arrows: list[QuiverArrow]
    relations: list[list[dict]] = []
    idempotents: str | dict = "vertices"


class GlueHomdimRequest(BaseModel):
    example: Optional[str] = None
    algebra: Optional[QuiverSpec] = None
    cutoff: Optional[int] = None


class GlueHomdimResponse(BaseModel):
    cutoff: int
    status: str
    value: Optional[int] = None
    per_simple: dict[str, str]
    example: Optional[str] = None


class ModuleSpec(BaseModel):
    dim: int
    action: dict[str, list[list[str | int | float]]]


class GlueAxiomsRequest(BaseModel):
    example: Optional[str] = None
    algebra: Optional[QuiverSpec] = None
    modules: Optional[list[ModuleSpec]] = None
    corrupt_mu: bool = False
    cutoff: Optional[int] = None


class AxiomCheck(BaseModel):
    check: str
    module: str
    passed: bool
    detail: Optional[str] = None


class GlueAxiomsResponse(BaseModel):
    passed: bool
    checks: list[AxiomCheck]
    modules: list[str]
    corrupt_mu: bool
    example: Optional[str] = None


class HomEqualityRequest(BaseModel):
    example: str = "hatA"


class HomPair(BaseModel):
    source: str
    target: str
    module_hom_dim: int
    coalgebra_hom_dim: int


class HomEqualityResponse(BaseModel):
    example: str
    passed: bool
    pairs: list[HomPair]


class SelftestRequest(BaseModel):
    seed: int = 0
    suites: Optional[list[str]] = None


class SuiteResult(BaseModel):
    passed: bool
    detail: str


class SelftestResponse(BaseModel):
    seed: int
    passed: bool
    results: dict[str, SuiteResult]


class ErrorResponse(BaseModel):
    detail: str
