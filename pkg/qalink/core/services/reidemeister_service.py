# qalink/core/services/reidemeister_service.py
"""
Crossing-reducing Reidemeister moves on PD codes.

Moves are located by corners ("darts"): dart (c, i) is the corner of
crossing c between positions i and i+1. A move is applied by rebuilding
the diagram through DiagramBuilder, so labels are renumbered after every
move and a recorded trace is only meaningful replayed from the same start.
"""

from typing import List, Optional, Sequence, Tuple

from ...config import get_settings
from ..domain.entities.coloring_entity import Dart
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.entities.move_trace_entity import MoveRecord
from ..domain.enums.diagram_enums import MoveKind, UnknotVerdict
from ..domain.exceptions import InvalidMove
from .face_service import next_dart, trace_faces
from .pd_codec_service import DiagramBuilder


def _over(pos: int) -> bool:
    return pos % 2 == 1


def _rebuild_without(d: LinkDiagram, drop: Sequence[int]) -> DiagramBuilder:
    b = DiagramBuilder.continuing(d)
    b.add_loops(d.free_loops)
    b.add_crossings(cr for ci, cr in enumerate(d.crossings) if ci not in drop)
    return b


# --- R1 ---

def r1_valid(d: LinkDiagram, ci: int, i: int) -> bool:
    return 0 <= ci < d.n and d.crossings[ci].at(i) == d.crossings[ci].at(i + 1)


def apply_r1(d: LinkDiagram, ci: int, i: int) -> LinkDiagram:
    if not r1_valid(d, ci, i):
        raise InvalidMove("R1", [[ci, i]], "no kink at this corner")
    x = d.crossings[ci]
    b = _rebuild_without(d, [ci])
    b.glue(x.at(i + 2), x.at(i + 3))
    b.mark(d.marked_edge if d.marked_edge != x.at(i) else x.at(i + 2))
    return b.build()


def find_r1(d: LinkDiagram) -> Optional[Tuple[int, int]]:
    for ci in range(d.n):
        for i in range(4):
            if r1_valid(d, ci, i):
                return ci, i
    return None


# --- R2 ---

def r2_valid(d: LinkDiagram, first: Dart, second: Dart) -> bool:
    (c1, i), (c2, j) = first, second
    if c1 == c2 or not (0 <= c1 < d.n and 0 <= c2 < d.n):
        return False
    if next_dart(d, first) != second or next_dart(d, second) != first:
        return False
    # the strand along the first side is over (or under) at both crossings
    return _over(i) == _over(j + 1)


def apply_r2(d: LinkDiagram, first: Dart, second: Dart) -> LinkDiagram:
    if not r2_valid(d, first, second):
        raise InvalidMove("R2", [list(first), list(second)], "not a removable bigon")
    (c1, i), (c2, j) = first, second
    x, y = d.crossings[c1], d.crossings[c2]
    b = _rebuild_without(d, [c1, c2])
    b.glue(x.at(i + 2), y.at(j + 3))
    b.glue(y.at(j + 2), x.at(i + 3))
    mark = d.marked_edge
    if mark in (x.at(i), x.at(i + 1)):
        mark = x.at(i + 2)
    b.mark(mark)
    return b.build()


def find_r2(d: LinkDiagram) -> Optional[Tuple[Dart, Dart]]:
    for f in trace_faces(d):
        if f.sides == 2 and r2_valid(d, f.darts[0], f.darts[1]):
            return f.darts[0], f.darts[1]
    return None


# --- R3 ---

def r3_valid(d: LinkDiagram, darts: Sequence[Dart]) -> bool:
    if len(darts) != 3:
        return False
    (c1, i1), (c2, i2), (c3, i3) = darts
    if len({c1, c2, c3}) != 3 or not all(0 <= c < d.n for c in (c1, c2, c3)):
        return False
    if any(next_dart(d, darts[k]) != darts[(k + 1) % 3] for k in range(3)):
        return False
    # the strand along the first side passes both its crossings on the same level
    return _over(i1) == _over(i2 + 1)


def apply_r3(d: LinkDiagram, darts: Sequence[Dart]) -> LinkDiagram:
    """
    Slide the strand along the triangle's first side across the opposite crossing.

    The triangle has sides s1 (from c1 to c2), s2 (c2 to c3) and s3 (c3 to c1);
    strand A runs along s1, B along s2, C along s3. Each crossing keeps its
    slope sign and which strand is on top.
    """
    if not r3_valid(d, darts):
        raise InvalidMove("R3", [list(t) for t in darts], "not a movable triangle")
    (c1, i1), (c2, i2), (c3, i3) = darts
    x1, x2, x3 = d.crossings[c1], d.crossings[c2], d.crossings[c3]
    a1, c1_out = x1.at(i1 + 2), x1.at(i1 + 3)
    b2, a2 = x2.at(i2 + 2), x2.at(i2 + 3)
    c3_out, b3 = x3.at(i3 + 2), x3.at(i3 + 3)
    a_over = _over(i1)
    b_over_c = _over(i3 + 1)

    b = _rebuild_without(d, [c1, c2, c3])
    s1, s2, s3 = b.fresh(), b.fresh(), b.fresh()

    ac = [a2, c3_out, s1, s3]
    ab = [s1, b3, a1, s2]
    bc = [b2, s3, s2, c1_out]
    b.add_crossing(ac[1:] + ac[:1] if a_over else ac, x1.epsilon)
    b.add_crossing(ab[1:] + ab[:1] if a_over else ab, x2.epsilon)
    b.add_crossing(bc[1:] + bc[:1] if b_over_c else bc, x3.epsilon)

    mark = d.marked_edge
    sides = {x1.at(i1): a1, x2.at(i2): b2, x3.at(i3): c3_out}
    b.mark(sides.get(mark, mark))
    return b.build()


def r3_candidates(d: LinkDiagram) -> List[Tuple[Dart, Dart, Dart]]:
    out = []
    for f in trace_faces(d):
        if f.sides != 3:
            continue
        for k in range(3):
            darts = tuple(f.darts[(k + t) % 3] for t in range(3))
            if r3_valid(d, darts):
                out.append(darts)
    return out


# --- simplification ---

def _reducing_move(d: LinkDiagram) -> Optional[Tuple[MoveRecord, LinkDiagram]]:
    hit = find_r1(d)
    if hit is not None:
        out = apply_r1(d, *hit)
        return MoveRecord(kind=MoveKind.R1, darts=[list(hit)], crossings_before=d.n, crossings_after=out.n), out
    hit2 = find_r2(d)
    if hit2 is not None:
        out = apply_r2(d, *hit2)
        return MoveRecord(kind=MoveKind.R2, darts=[list(t) for t in hit2],
                          crossings_before=d.n, crossings_after=out.n), out
    return None


def _enabling_r3(d: LinkDiagram) -> Optional[Tuple[MoveRecord, LinkDiagram]]:
    for darts in r3_candidates(d):
        out = apply_r3(d, darts)
        if find_r1(out) is not None or find_r2(out) is not None:
            return MoveRecord(kind=MoveKind.R3, darts=[list(t) for t in darts],
                              crossings_before=d.n, crossings_after=out.n), out
    return None


def simplify_with_trace(d: LinkDiagram, r3_factor: Optional[int] = None) -> Tuple[LinkDiagram, List[MoveRecord]]:
    """
    Greedy R1/R2 reduction; an R3 move is taken only when it makes an R1 or
    R2 move available right after, at most r3_factor * n times per call.
    """
    factor = get_settings().R3_FACTOR if r3_factor is None else r3_factor
    r3_left = factor * d.n
    trace: List[MoveRecord] = []
    while True:
        step = _reducing_move(d)
        if step is None and r3_left > 0:
            step = _enabling_r3(d)
            if step is not None:
                r3_left -= 1
        if step is None:
            return d, trace
        record, d = step
        trace.append(record)


def simplify(d: LinkDiagram, r3_factor: Optional[int] = None) -> LinkDiagram:
    return simplify_with_trace(d, r3_factor)[0]


def replay_trace(d: LinkDiagram, trace: Sequence[MoveRecord]) -> LinkDiagram:
    """Re-apply recorded moves, checking each one's precondition. Raises InvalidMove."""
    for rec in trace:
        darts = [tuple(t) for t in rec.darts]
        if rec.kind is MoveKind.R1 and len(darts) == 1:
            d = apply_r1(d, *darts[0])
        elif rec.kind is MoveKind.R2 and len(darts) == 2:
            d = apply_r2(d, darts[0], darts[1])
        elif rec.kind is MoveKind.R3 and len(darts) == 3:
            d = apply_r3(d, darts)
        else:
            raise InvalidMove(rec.kind.value, rec.darts, "wrong number of corners")
        if d.n != rec.crossings_after:
            raise InvalidMove(rec.kind.value, rec.darts, f"left {d.n} crossings, trace says {rec.crossings_after}")
    return d


def is_unknot(d: LinkDiagram) -> UnknotVerdict:
    """Yes only when simplification reaches the crossingless one-component diagram."""
    s = simplify(d)
    if s.n == 0 and s.free_loops == 1:
        return UnknotVerdict.YES
    return UnknotVerdict.UNKNOWN
