# qalink/core/services/face_service.py

from collections import deque
from typing import Dict, List, Optional

from ..domain.entities.coloring_entity import CheckerboardColoring, Dart, Face
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.enums.diagram_enums import FaceColor
from ..domain.exceptions import Disconnected, EmptyDiagram, NonPlanar


def next_dart(d: LinkDiagram, dart: Dart) -> Dart:
    """Walk along the arc leaving `dart`'s corner and turn into the next corner of the same region."""
    ci, k = dart
    cj, j = d.other_end(ci, k)
    return (cj, (j - 1) % 4)


def trace_faces(d: LinkDiagram) -> List[Face]:
    seen = set()
    out: List[Face] = []
    for ci in range(d.n):
        for i in range(4):
            if (ci, i) in seen:
                continue
            darts, arcs = [], []
            cur = (ci, i)
            while cur not in seen:
                seen.add(cur)
                darts.append(cur)
                arcs.append(d.crossings[cur[0]].at(cur[1]))
                cur = next_dart(d, cur)
            out.append(Face(tuple(darts), tuple(arcs)))
    return out


def crossing_pieces(d: LinkDiagram) -> List[List[int]]:
    """Crossing indices grouped by connected piece of the 4-valent graph, in first-index order."""
    parent = list(range(d.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ends in d.positions.values():
        a, b = find(ends[0][0]), find(ends[-1][0])
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: Dict[int, List[int]] = {}
    for ci in range(d.n):
        groups.setdefault(find(ci), []).append(ci)
    return list(groups.values())


def piece_count(d: LinkDiagram) -> int:
    """Connected pieces of the diagram, crossingless circles included."""
    return len(crossing_pieces(d)) + d.free_loops


def check_planar(d: LinkDiagram, traced: Optional[List[Face]] = None) -> None:
    traced = trace_faces(d) if traced is None else traced
    piece_of = {ci: pi for pi, piece in enumerate(crossing_pieces(d)) for ci in piece}
    face_count: Dict[int, int] = {}
    for f in traced:
        pi = piece_of[f.darts[0][0]]
        face_count[pi] = face_count.get(pi, 0) + 1
    for pi, piece in enumerate(crossing_pieces(d)):
        v, e, f = len(piece), 2 * len(piece), face_count.get(pi, 0)
        if v - e + f != 2:
            raise NonPlanar(v, e, f)


def faces(d: LinkDiagram) -> CheckerboardColoring:
    """
    Faces of a connected diagram with their checkerboard coloring.

    At each crossing corners 0 and 2 get one color and corners 1 and 3 the
    other. The unbounded face is taken to be the face with the most sides
    (the first one on ties) and is colored white.
    """
    if d.n == 0:
        if d.free_loops == 0:
            raise EmptyDiagram()
        if d.free_loops > 1:
            raise Disconnected(d.free_loops)
        return CheckerboardColoring(
            faces=(Face((), ()), Face((), ())),
            colors=(FaceColor.BLACK, FaceColor.WHITE),
            unbounded=1,
        )
    pieces = piece_count(d)
    if pieces > 1:
        raise Disconnected(pieces)

    traced = trace_faces(d)
    check_planar(d, traced)
    face_of = {dart: fi for fi, f in enumerate(traced) for dart in f.darts}

    colors: List[Optional[FaceColor]] = [None] * len(traced)
    colors[0] = FaceColor.BLACK
    queue = deque([0])
    while queue:
        fi = queue.popleft()
        for ci, k in traced[fi].darts:
            for step in range(1, 4):
                want = colors[fi] if step % 2 == 0 else colors[fi].other()
                fj = face_of[(ci, (k + step) % 4)]
                if colors[fj] is None:
                    colors[fj] = want
                    queue.append(fj)
                elif colors[fj] is not want:
                    raise NonPlanar(d.n, 2 * d.n, len(traced))

    unbounded = max(range(len(traced)), key=lambda i: (traced[i].sides, -i))
    coloring = CheckerboardColoring(tuple(traced), tuple(colors), unbounded)
    if coloring.color_of(unbounded) is FaceColor.BLACK:
        coloring = coloring.swapped()
    return coloring
