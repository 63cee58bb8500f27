# qalink/core/domain/enums/diagram_enums.py

from enum import Enum


class FaceColor(str, Enum):
    BLACK = "black"
    WHITE = "white"

    def other(self) -> "FaceColor":
        return FaceColor.WHITE if self is FaceColor.BLACK else FaceColor.BLACK


class ResolutionKind(str, Enum):
    """
    The two planar smoothings of a crossing, read in the crossing's tangle frame.
    """
    ZERO = "zero"           # joins NW-NE and SW-SE
    INFINITY = "infinity"   # joins NW-SW and NE-SE


class MoveKind(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


class UnknotVerdict(str, Enum):
    YES = "Yes"
    UNKNOWN = "Unknown"
