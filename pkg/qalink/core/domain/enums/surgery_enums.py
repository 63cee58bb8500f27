# qalink/core/domain/enums/surgery_enums.py

from enum import Enum


class SurgeryForm(str, Enum):
    """
    The two equivalent outputs of the black-graph construction.
    """
    CLASP = "clasp"     # one unknot per vertex framed by its weight, clasps for edges
    CURVES = "curves"   # 0-framed unknots plus one +-1 framed curve per edge


class DetMatrixKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"
