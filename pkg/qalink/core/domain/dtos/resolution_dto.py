# qalink/core/domain/dtos/resolution_dto.py

from dataclasses import dataclass

from ..enums.diagram_enums import ResolutionKind


@dataclass(frozen=True)
class Resolution:
    kind: ResolutionKind
    crossing: int

    @classmethod
    def zero(cls, crossing: int) -> "Resolution":
        return cls(ResolutionKind.ZERO, crossing)

    @classmethod
    def infinity(cls, crossing: int) -> "Resolution":
        return cls(ResolutionKind.INFINITY, crossing)
