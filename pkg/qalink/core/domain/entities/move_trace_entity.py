# qalink/core/domain/entities/move_trace_entity.py

from typing import List

from pydantic import BaseModel, Field

from ..enums.diagram_enums import MoveKind


class MoveRecord(BaseModel):
    """
    One Reidemeister move applied by the simplifier.

    `darts` are (crossing index, corner) pairs in the diagram the move was
    applied to: one for R1, the two corners of the bigon for R2, the three
    corners of the triangle for R3 (starting at the side the moving strand
    runs along).
    """
    kind: MoveKind
    darts: List[List[int]] = Field(default_factory=list)
    crossings_before: int
    crossings_after: int
