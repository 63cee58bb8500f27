# qalink/core/usecases/verify_certificate_use_case.py

from typing import List, Optional

from ...utils.log import get_logger
from ..domain.entities.certificate_entity import (
    CERTIFICATE_SCHEMA_VERSION,
    CertificateLeaf,
    CertificateTree,
    QACertificate,
)
from ..domain.enums.diagram_enums import ResolutionKind
from ..domain.exceptions import QALinkError
from ..services.canonical_code_service import canonical_code
from ..services.pd_codec_service import parse_pd
from ..services.reidemeister_service import replay_trace
from ..services.resolution_service import resolve
from ..services.tait_service import determinant


class VerifyCertificateUseCase:
    """
    Re-checks a certificate from its text alone. Every diagram is parsed
    again, every determinant recomputed, each child compared with the
    actual resolution of its parent, and every leaf trace replayed.
    """

    def __init__(self, logger=None):
        self._logger = logger or get_logger(self.__class__.__name__)
        self.failures: List[str] = []

    def _fail(self, path: str, msg: str) -> bool:
        self.failures.append(f"{path or 'root'}: {msg}")
        return False

    def _check(self, t: CertificateTree, path: str, expected_code: Optional[str]) -> bool:
        try:
            d = parse_pd(t.pd)
            actual = determinant(d)
        except QALinkError as exc:
            return self._fail(path, f"unreadable diagram: {exc}")

        if expected_code is not None and canonical_code(d) != expected_code:
            return self._fail(path, "diagram is not the resolution of its parent")
        if t.det != actual:
            return self._fail(path, f"det field {t.det}, recomputed {actual}")
        if actual < 1:
            return self._fail(path, "determinant is 0")

        if isinstance(t, CertificateLeaf):
            if actual != 1:
                return self._fail(path, f"leaf determinant {actual}")
            try:
                end = replay_trace(d, t.trace)
            except QALinkError as exc:
                return self._fail(path, f"trace does not replay: {exc}")
            if end.n != 0 or end.free_loops != 1:
                return self._fail(path, f"trace ends at {end.n} crossings, {end.free_loops} loops")
            return True

        if not 0 <= t.crossing < d.n:
            return self._fail(path, f"no crossing {t.crossing}")
        if t.zero.det + t.infinity.det != t.det:
            return self._fail(path, f"{t.zero.det} + {t.infinity.det} != {t.det}")
        zero_code = canonical_code(resolve(d, t.crossing, ResolutionKind.ZERO))
        inf_code = canonical_code(resolve(d, t.crossing, ResolutionKind.INFINITY))
        ok_zero = self._check(t.zero, f"{path}/0", zero_code)
        ok_inf = self._check(t.infinity, f"{path}/inf", inf_code)
        return ok_zero and ok_inf

    def execute(self, cert: QACertificate) -> bool:
        self.failures = []
        if cert.schema_version != CERTIFICATE_SCHEMA_VERSION:
            ok = self._fail("", f"unsupported schema_version {cert.schema_version}")
        else:
            ok = self._check(cert.root, "", None)
        if not ok:
            self._logger.warning("certificate_rejected", failures=self.failures[:5], total=len(self.failures))
        return ok
