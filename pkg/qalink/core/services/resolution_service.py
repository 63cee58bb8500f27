# qalink/core/services/resolution_service.py

from typing import Tuple

from ..domain.dtos.resolution_dto import Resolution
from ..domain.entities.link_diagram_entity import Crossing, LinkDiagram
from ..domain.enums.diagram_enums import ResolutionKind
from ..domain.exceptions import NoSuchCrossing
from .pd_codec_service import DiagramBuilder

Pairing = Tuple[Tuple[int, int], Tuple[int, int]]


def smoothing_pairs(cr: Crossing, kind: ResolutionKind) -> Pairing:
    """
    The two arc pairs joined by a smoothing, read in the crossing's frame:
    zero joins NW-NE and SW-SE, infinity joins NW-SW and NE-SE.
    """
    f = cr.frame()
    if kind is ResolutionKind.ZERO:
        return (f["NW"], f["NE"]), (f["SW"], f["SE"])
    return (f["NW"], f["SW"]), (f["NE"], f["SE"])


def resolve(d: LinkDiagram, crossing: int, kind: ResolutionKind) -> LinkDiagram:
    if not 0 <= crossing < d.n:
        raise NoSuchCrossing(crossing, d.n)
    b = DiagramBuilder(free_loops=d.free_loops)
    b.add_crossings(cr for ci, cr in enumerate(d.crossings) if ci != crossing)
    for x, y in smoothing_pairs(d.crossings[crossing], kind):
        b.glue(x, y)
    b.mark(d.marked_edge)
    return b.build()


def resolve_both(d: LinkDiagram, crossing: int) -> Tuple[LinkDiagram, LinkDiagram]:
    return resolve(d, crossing, ResolutionKind.ZERO), resolve(d, crossing, ResolutionKind.INFINITY)


def apply_resolution(d: LinkDiagram, r: Resolution) -> LinkDiagram:
    return resolve(d, r.crossing, r.kind)
