# qalink/core/domain/dtos/det_matrix_spec_dto.py

from pydantic import BaseModel, Field

from ..enums.surgery_enums import DetMatrixKind


class DetMatrixSpec(BaseModel):
    """
    One of the three determinant matrices of the (p,q,r) family.
    q and r are the lengths of the two chains of 2's; 0 means no chain.
    """
    kind: DetMatrixKind
    p: int = Field(ge=1)
    q: int = Field(default=0, ge=0)
    r: int = Field(default=0, ge=0)
