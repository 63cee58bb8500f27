# qalink/core/services/diagram_service.py

from typing import Iterable, List, Optional

from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.exceptions import MalformedInput
from .face_service import crossing_pieces
from .pd_codec_service import DiagramBuilder


def split_components(d: LinkDiagram) -> List[LinkDiagram]:
    """
    Connected pieces as independent diagrams, crossing pieces first (in
    order of their first crossing), then one diagram per free loop.
    """
    out: List[LinkDiagram] = []
    for piece in crossing_pieces(d):
        b = DiagramBuilder()
        b.add_crossings(d.crossings[ci] for ci in piece)
        if d.marked_edge is not None and any(d.marked_edge in d.crossings[ci].labels for ci in piece):
            b.mark(d.marked_edge)
        out.append(b.build())
    out.extend(LinkDiagram((), 1) for _ in range(d.free_loops))
    return out


def disjoint_union(ds: Iterable[LinkDiagram]) -> LinkDiagram:
    b = DiagramBuilder()
    offset = 0
    marked: Optional[int] = None
    for d in ds:
        for cr in d.crossings:
            b.add_crossing([x + offset for x in cr.labels], cr.epsilon)
        if marked is None and d.marked_edge is not None:
            marked = d.marked_edge + offset
        b.add_loops(d.free_loops)
        offset += max(d.arcs, default=0)
    b.mark(marked)
    return b.build()


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing; slope signs flip."""
    b = DiagramBuilder(free_loops=d.free_loops)
    b.add_crossings(cr.mirrored() for cr in d.crossings)
    b.mark(d.marked_edge)
    return b.build()


def with_mark(d: LinkDiagram, arc: Optional[int]) -> LinkDiagram:
    if arc is not None and arc not in d.positions:
        raise MalformedInput(f"mark={arc} is not an arc of the diagram")
    return d.with_mark(arc)
