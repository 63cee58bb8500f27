# qalink/core/domain/dtos/continued_fraction_dto.py

from typing import List

from pydantic import BaseModel, field_validator


class ContinuedFraction(BaseModel):
    """
    Terms a_1..a_m of  a_m + 1/(a_{m-1} + 1/(... + 1/a_1)).
    """
    terms: List[int]

    @field_validator("terms")
    @classmethod
    def _nonzero(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("continued fraction needs at least one term")
        if any(a == 0 for a in v):
            raise ValueError(f"terms must be nonzero: {v}")
        return v

    @classmethod
    def of(cls, *terms: int) -> "ContinuedFraction":
        return cls(terms=list(terms))
