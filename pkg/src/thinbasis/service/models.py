"""Request and response models for the HTTP service.

Integers that may exceed 2**53 - 1 (n, x, N) are accepted either as
JSON numbers or as decimal strings; pydantic coerces both to int.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class ConstructionParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    h: int | None = None
    r: list[int] | None = None
    P: int | None = None
    k1: int | None = None
    g: int | None = None
    aprime: list[int] | None = None

    def construction_kwargs(self) -> dict:
        return {
            "h": self.h,
            "r": self.r,
            "P": self.P,
            "k1": self.k1,
            "g": self.g,
            "aprime": self.aprime,
        }


class ConstructRequest(ConstructionParams):
    pass


class DecomposeRequest(ConstructionParams):
    n: int = Field(ge=0)


class EnumerateRequest(ConstructionParams):
    x: int


class VerifyRequest(ConstructionParams):
    N: int = Field(ge=0)
    jobs: int = Field(default=1, ge=1)
    seed: int = 0


class ProfileRequest(ConstructionParams):
    x: int = Field(ge=1)


class CompareRequest(ConstructionParams):
    x: int = Field(ge=1)


class Envelope(BaseModel):
    schema_version: str
    construction: str
    command: str
    result: dict[str, Any]
