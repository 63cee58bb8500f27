# qalink/core/domain/entities/certificate_entity.py

from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from ..enums.certificate_enums import CertifyStatus, UnknownReason
from .move_trace_entity import MoveRecord

CERTIFICATE_SCHEMA_VERSION = 1


class CertificateLeaf(BaseModel):
    """
    A diagram recognised as the unknot: `trace` replays it to a
    0-crossing one-component diagram.
    """
    kind: Literal["leaf"] = "leaf"
    pd: str
    det: int = 1
    trace: List[MoveRecord] = Field(default_factory=list)


class CertificateNode(BaseModel):
    """
    Resolution of `crossing` (0-based index into `pd`) with
    det == zero.det + infinity.det.
    """
    kind: Literal["node"] = "node"
    pd: str
    crossing: int
    det: int
    zero: "CertificateTree"
    infinity: "CertificateTree"


CertificateTree = Annotated[Union[CertificateNode, CertificateLeaf], Field(discriminator="kind")]

CertificateNode.model_rebuild()


class QACertificate(BaseModel):
    schema_version: int = CERTIFICATE_SCHEMA_VERSION
    root: CertificateTree

    def node_count(self) -> int:
        stack, n = [self.root], 0
        while stack:
            t = stack.pop()
            n += 1
            if isinstance(t, CertificateNode):
                stack += [t.zero, t.infinity]
        return n

    def depth(self) -> int:
        def go(t) -> int:
            if isinstance(t, CertificateLeaf):
                return 0
            return 1 + max(go(t.zero), go(t.infinity))
        return go(self.root)


class CertifyResult(BaseModel):
    """
    Outcome of a certificate search. UNKNOWN never means "not quasi-alternating".
    """
    status: CertifyStatus
    det: int
    certificate: Optional[QACertificate] = None
    reason: Optional[UnknownReason] = None
    nodes: int = 0
    memo_hits: int = 0

    @property
    def certified(self) -> bool:
        return self.status is CertifyStatus.CERTIFIED
