# qalink/core/usecases/certify_link_use_case.py

import threading
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ...config import get_settings
from ...utils.log import get_logger
from ..domain.entities.certificate_entity import (
    CertificateLeaf,
    CertificateNode,
    CertificateTree,
    CertifyResult,
    QACertificate,
)
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.enums.certificate_enums import CertifyStatus, UnknownReason
from ..domain.exceptions import BudgetExhausted, Disconnected, ZeroDeterminant
from ..services.canonical_code_service import canonical_code
from ..services.face_service import piece_count
from ..services.pd_codec_service import serialize_pd
from ..services.reidemeister_service import simplify_with_trace
from ..services.resolution_service import resolve_both
from ..services.tait_service import determinant

Candidate = Tuple[int, LinkDiagram, int, LinkDiagram, int]


@dataclass
class _SearchContext:
    """State of one execute() call: memo, counters and the branch pool."""

    budget: int
    memoize: bool
    pool: Optional[ThreadPoolExecutor] = None
    memo: Dict[str, Optional[CertificateTree]] = field(default_factory=dict)
    nodes: int = 0
    hits: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)
    local: threading.local = field(default_factory=threading.local)

    def charge(self) -> None:
        with self.lock:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted(self.budget)

    def recall(self, key: str) -> Tuple[bool, Optional[CertificateTree]]:
        if not self.memoize:
            return False, None
        with self.lock:
            if key in self.memo:
                self.hits += 1
                return True, self.memo[key]
        return False, None

    def store(self, key: str, tree: Optional[CertificateTree]) -> None:
        if self.memoize:
            with self.lock:
                self.memo[key] = tree


class CertifyLinkUseCase:
    """
    Depth-first search for a quasi-alternating certificate.

    A node with det 1 is a leaf if the simplifier reaches the unknot.
    Otherwise every crossing whose two resolutions have positive
    determinants adding up to the node's determinant is tried, the most
    balanced split first. Results are memoized by canonical code, failures
    included. With jobs > 1 the zero branch is handed to a thread pool
    while the calling thread explores the infinity branch.

    The instance only holds configuration; each execute() call gets its own
    memo, budget and pool, so one instance may be shared across threads.
    """

    def __init__(
        self,
        budget: Optional[int] = None,
        jobs: Optional[int] = None,
        memoize: bool = True,
        logger=None,
    ):
        s = get_settings()
        self._budget = s.CERTIFY_BUDGET if budget is None else budget
        self._jobs = max(1, s.CERTIFY_JOBS if jobs is None else jobs)
        self._memoize = memoize
        self._logger = logger or get_logger(self.__class__.__name__)

    # --- search ---

    def _candidates(self, d: LinkDiagram, det: int) -> List[Candidate]:
        out = []
        for ci in range(d.n):
            d0, dinf = resolve_both(d, ci)
            det0, detinf = determinant(d0), determinant(dinf)
            if det0 >= 1 and detinf >= 1 and det0 + detinf == det:
                out.append((ci, d0, det0, dinf, detinf))
        out.sort(key=lambda c: (-min(c[2], c[4]), c[0]))
        return out

    def _leaf(self, d: LinkDiagram) -> Optional[CertificateLeaf]:
        s, trace = simplify_with_trace(d)
        if s.n == 0 and s.free_loops == 1:
            return CertificateLeaf(pd=serialize_pd(d), det=1, trace=trace)
        return None

    def _branches(self, ctx: _SearchContext, d0: LinkDiagram, det0: int, dinf: LinkDiagram, detinf: int):
        if ctx.pool is None or getattr(ctx.local, "worker", False):
            zero = self._search(ctx, d0, det0)
            if zero is None:
                return None, None
            return zero, self._search(ctx, dinf, detinf)
        fut: Future = ctx.pool.submit(self._worker_search, ctx, d0, det0)
        inf = self._search(ctx, dinf, detinf)
        return fut.result(), inf

    def _worker_search(self, ctx: _SearchContext, d: LinkDiagram, det: int) -> Optional[CertificateTree]:
        ctx.local.worker = True
        return self._search(ctx, d, det)

    def _search(self, ctx: _SearchContext, d: LinkDiagram, det: int) -> Optional[CertificateTree]:
        key = canonical_code(d)
        found, tree = ctx.recall(key)
        if found:
            return tree
        ctx.charge()

        result: Optional[CertificateTree] = None
        if det == 1:
            result = self._leaf(d)
        else:
            for ci, d0, det0, dinf, detinf in self._candidates(d, det):
                zero, inf = self._branches(ctx, d0, det0, dinf, detinf)
                if zero is not None and inf is not None:
                    result = CertificateNode(pd=serialize_pd(d), crossing=ci, det=det, zero=zero, infinity=inf)
                    break
        ctx.store(key, result)
        return result

    # --- entry point ---

    def execute(self, d: LinkDiagram) -> CertifyResult:
        pieces = piece_count(d)
        if pieces > 1:
            raise Disconnected(pieces)
        det = determinant(d)
        if det == 0:
            raise ZeroDeterminant()

        pool = ThreadPoolExecutor(max_workers=self._jobs - 1) if self._jobs > 1 else None
        ctx = _SearchContext(budget=self._budget, memoize=self._memoize, pool=pool)
        try:
            tree = self._search(ctx, d, det)
        except BudgetExhausted:
            self._logger.warning("certify_budget_exhausted", budget=self._budget, crossings=d.n, det=det)
            return CertifyResult(status=CertifyStatus.UNKNOWN, det=det, reason=UnknownReason.BUDGET_EXHAUSTED,
                                 nodes=ctx.nodes, memo_hits=ctx.hits)
        finally:
            if pool is not None:
                pool.shutdown(wait=True, cancel_futures=True)

        if tree is None:
            self._logger.info("certify_unknown", crossings=d.n, det=det, nodes=ctx.nodes)
            return CertifyResult(status=CertifyStatus.UNKNOWN, det=det, reason=UnknownReason.NO_CERTIFICATE,
                                 nodes=ctx.nodes, memo_hits=ctx.hits)
        cert = QACertificate(root=tree)
        self._logger.info("certify_done", crossings=d.n, det=det, nodes=ctx.nodes,
                          memo_hits=ctx.hits, depth=cert.depth())
        return CertifyResult(status=CertifyStatus.CERTIFIED, det=det, certificate=cert,
                             nodes=ctx.nodes, memo_hits=ctx.hits)
