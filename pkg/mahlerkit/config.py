"""Run configuration shared by the command line and the report."""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


class RunConfig(BaseSettings):
    """Truncation order, search bounds and I/O settings.

    Every field can be preset through ``MAHLERKIT_<FIELD>``; command-line
    flags override the environment.
    """

    order: int = Field(64, ge=16)
    k: int = Field(2, ge=2)
    max_dim: int = Field(8, ge=1)
    dm: int = Field(2, ge=0)
    dx: int = Field(4, ge=0)
    dr: int = Field(4, ge=0)
    r_max: int = Field(8, ge=0)
    s_max: Optional[int] = Field(None, ge=0)
    q_list: List[int] = Field(default_factory=lambda: [3, 5])
    input: Optional[str] = None
    output: Optional[str] = None
    format: Literal["json", "text"] = "json"
    seed: int = 20240601
    workers: int = Field(4, ge=1)
    timings: bool = False

    class Config:
        env_prefix = "MAHLERKIT_"
        case_sensitive = False

    @field_validator("q_list")
    @classmethod
    def _odd_primes(cls, value: List[int]) -> List[int]:
        from sympy import isprime

        for q in value:
            if q < 3 or not isprime(q):
                raise ValueError(f"q must be an odd prime, got {q}")
        return value

    def with_overrides(self, **changes: object) -> "RunConfig":
        """Copy with the non-None values applied and validated."""
        data = self.model_dump()
        data.update({key: value for key, value in changes.items() if value is not None})
        return RunConfig(**data)
