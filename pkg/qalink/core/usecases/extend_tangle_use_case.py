# qalink/core/usecases/extend_tangle_use_case.py

from dataclasses import dataclass
from typing import Optional, Tuple

from ...utils.log import get_logger
from ..domain.dtos.rational_tangle_spec_dto import RationalTangleSpec
from ..domain.entities.certificate_entity import CertificateNode, QACertificate
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.exceptions import BadParameters, NoSuchCrossing, NotExtending
from ..services.pd_codec_service import DiagramBuilder, parse_pd
from ..services.tangle_service import rational_tangle


@dataclass(frozen=True)
class ExtendedDiagram:
    diagram: LinkDiagram
    tangle_crossings: Tuple[int, ...]   # indices of the inserted crossings in `diagram`
    qa_at_tangle: bool                  # quasi-alternating at each of them, when the host was certified there


class ExtendTangleUseCase:
    """
    Replace one crossing by an alternating rational tangle C(a_1..a_m)
    that extends it: every a_i has the crossing's slope sign.
    """

    def __init__(self, logger=None):
        self._logger = logger or get_logger(self.__class__.__name__)

    @staticmethod
    def _certified_at(d: LinkDiagram, crossing: int, cert: Optional[QACertificate]) -> bool:
        if cert is None or not isinstance(cert.root, CertificateNode):
            return False
        root = parse_pd(cert.root.pd)
        return cert.root.crossing == crossing and root.crossings == d.crossings and root.free_loops == d.free_loops

    def execute(self, d: LinkDiagram, spec: RationalTangleSpec,
                certificate: Optional[QACertificate] = None) -> ExtendedDiagram:
        if not 0 <= spec.crossing < d.n:
            raise NoSuchCrossing(spec.crossing, d.n)
        host = d.crossings[spec.crossing]
        if spec.epsilon is not None and spec.epsilon != host.epsilon:
            raise BadParameters(f"tangle epsilon {spec.epsilon} differs from the crossing's {host.epsilon}",
                                crossing=spec.crossing)
        eps = host.epsilon
        for a in spec.coefficients:
            if eps * a < 1:
                raise NotExtending(a, eps)

        b = DiagramBuilder.continuing(d)
        b.add_loops(d.free_loops)
        b.add_crossings(cr for ci, cr in enumerate(d.crossings) if ci != spec.crossing)
        t = rational_tangle(b, spec.coefficients)
        frame = host.frame()
        for end, label in (("NW", t.nw), ("NE", t.ne), ("SE", t.se), ("SW", t.sw)):
            b.glue(frame[end], label)
        b.mark(d.marked_edge)
        out = b.build()

        inserted = tuple(range(d.n - 1, out.n))
        qa = self._certified_at(d, spec.crossing, certificate)
        self._logger.info("tangle_extended", crossing=spec.crossing, coefficients=spec.coefficients,
                          crossings=out.n, qa_at_tangle=qa)
        return ExtendedDiagram(out, inserted, qa)
