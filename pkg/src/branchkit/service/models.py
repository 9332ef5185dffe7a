"""Request/response schemas shared by the HTTP service and the CLI."""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator

SeriesKind = Literal["A", "B", "C", "D"]


class SeriesWeightParams(BaseModel):
    series: SeriesKind
    n: int = Field(ge=1, le=12)
    m: list[str]

    @field_validator("m")
    @classmethod
    def _nonempty(cls, v: list[str]) -> list[str]:
        if not v:
            raise ValueError("weight must have at least one entry")
        return v


class HvRequest(SeriesWeightParams):
    check: bool = False
    trials: int = Field(default=12, ge=1, le=500)
    seed: int = 0


class HvResponse(BaseModel):
    polynomial: dict
    report: dict | None = None


class TableauxRequest(SeriesWeightParams):
    pass


class TableauxResponse(BaseModel):
    count: int
    tableaux: list[dict]


class BasisRequest(SeriesWeightParams):
    verify: bool = False
    trials: int = Field(default=25, ge=1, le=500)
    seed: int = 0


class BasisItem(BaseModel):
    tableau: dict
    weight: dict
    polynomial: dict
    checks: dict | None = None


class BasisResponse(BaseModel):
    count: int
    items: list[BasisItem]


class VerifyRequest(SeriesWeightParams):
    trials: int = Field(default=50, ge=1, le=1000)
    seed: int = 0
    jobs: int = Field(default=1, ge=1, le=64)


class VerifyResponse(BaseModel):
    report: dict

    @property
    def ok(self) -> bool:
        return bool(self.report.get("pass"))


class DimRequest(SeriesWeightParams):
    pass


class DimResponse(BaseModel):
    dim: int


class ActRequest(BaseModel):
    series: SeriesKind
    n: int = Field(ge=1, le=12)
    op: str  # "F:1,-1", "E:-2,-1" or "L:-2,-1"
    polynomial: dict


class ActResponse(BaseModel):
    polynomial: dict


class RelationsRequest(BaseModel):
    series: SeriesKind
    n: int = Field(ge=2, le=12)
    trials: int = Field(default=100, ge=1, le=2000)
    seed: int = 0


class RelationsResponse(BaseModel):
    report: dict

    @property
    def ok(self) -> bool:
        return bool(self.report.get("pass"))


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
