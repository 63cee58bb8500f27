# qalink/core/domain/dtos/rational_tangle_spec_dto.py

from typing import List

from pydantic import BaseModel, Field, field_validator


class RationalTangleSpec(BaseModel):
    """
    Replace crossing `crossing` by the rational tangle C(a_1, ..., a_m).
    `epsilon` is the host crossing's slope sign, copied from the diagram
    when left unset.
    """
    coefficients: List[int] = Field(min_length=1)
    crossing: int = Field(ge=0)
    epsilon: int | None = None

    @field_validator("coefficients")
    @classmethod
    def _nonzero(cls, v: List[int]) -> List[int]:
        if any(a == 0 for a in v):
            raise ValueError(f"tangle coefficients must be nonzero: {v}")
        return v

    @field_validator("epsilon")
    @classmethod
    def _sign(cls, v: int | None) -> int | None:
        if v is not None and v not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        return v
