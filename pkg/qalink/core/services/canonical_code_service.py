# qalink/core/services/canonical_code_service.py

from collections import deque
from typing import Dict, List, Tuple

from ..domain.entities.link_diagram_entity import LinkDiagram
from .diagram_service import split_components

CrossingCode = Tuple[int, int, int, int, int]


def _traversal_code(d: LinkDiagram, start: int, rotation: int) -> Tuple[CrossingCode, ...]:
    """
    Breadth-first walk from `start` read from position `rotation`. Every
    other crossing is read so that the arc it was reached through sits at
    position 0 or 1; labels are numbered in order of appearance.
    """
    rot: Dict[int, int] = {start: rotation}
    order: List[int] = [start]
    queue = deque([start])
    while queue:
        ci = queue.popleft()
        for p in range(4):
            cj, j = d.other_end(ci, (p + rot[ci]) % 4)
            if cj not in rot:
                rot[cj] = 0 if j < 2 else 2
                order.append(cj)
                queue.append(cj)

    labels: Dict[int, int] = {}
    out: List[CrossingCode] = []
    for ci in order:
        cr = d.crossings[ci]
        quad = [labels.setdefault(cr.at(p + rot[ci]), len(labels) + 1) for p in range(4)]
        out.append((*quad, cr.epsilon))
    return tuple(out)


def component_code(d: LinkDiagram) -> Tuple[CrossingCode, ...]:
    """Least traversal code of a connected diagram with crossings."""
    return min(_traversal_code(d, s, r) for s in range(d.n) for r in (0, 2))


def canonical_code(d: LinkDiagram) -> str:
    """
    A string equal for two diagrams exactly when one is a relabelling and
    reordering of the other. The marked edge is ignored.
    """
    parts = sorted(component_code(c) for c in split_components(d) if c.n)
    body = "|".join(";".join(f"{a},{b},{c},{e},{s:+d}" for a, b, c, e, s in code) for code in parts)
    return f"{body}#loops={d.free_loops}"
