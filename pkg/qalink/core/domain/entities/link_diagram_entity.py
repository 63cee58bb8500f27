# qalink/core/domain/entities/link_diagram_entity.py

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple


@dataclass(frozen=True)
class Crossing:
    """
    One crossing of a PD code.

    (a, b, c, d) are the four arc labels read counterclockwise starting from
    the incoming under-strand: the under-strand is (a, c), the over-strand
    is (b, d). `epsilon` is the slope sign of the over-strand in the
    crossing's tangle frame.
    """
    a: int
    b: int
    c: int
    d: int
    epsilon: int = -1

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")

    @property
    def labels(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def at(self, pos: int) -> int:
        return self.labels[pos % 4]

    def rotated(self, k: int) -> "Crossing":
        """Start the tuple k positions later. Only even k keeps the same crossing."""
        lb = self.labels
        return Crossing(*(lb[(i + k) % 4] for i in range(4)), epsilon=self.epsilon)

    def frame(self) -> Dict[str, int]:
        """
        Arc labels at the NW, NE, SE, SW corners of the tangle frame.
        epsilon -1 puts (a,b,c,d) at (SW,SE,NE,NW); +1 puts them at (SE,NE,NW,SW).
        """
        a, b, c, d = self.labels
        if self.epsilon < 0:
            return {"SW": a, "SE": b, "NE": c, "NW": d}
        return {"SE": a, "NE": b, "NW": c, "SW": d}

    def mirrored(self) -> "Crossing":
        # Over and under swap: the old over-strand b becomes the incoming under-strand.
        return Crossing(self.b, self.c, self.d, self.a, epsilon=-self.epsilon)


@dataclass(frozen=True)
class LinkDiagram:
    """
    Combinatorial planar link diagram.

    `free_loops` counts crossingless unknotted circles (the 0-crossing unknot
    has `free_loops == 1`). `marked_edge` is the arc whose black region is
    removed when the black graph is reduced; arc 1 is used when unset.
    """
    crossings: Tuple[Crossing, ...] = ()
    free_loops: int = 0
    marked_edge: Optional[int] = None

    def __post_init__(self):
        if self.free_loops < 0:
            raise ValueError("free_loops must be >= 0")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def is_empty(self) -> bool:
        return not self.crossings and self.free_loops == 0

    @cached_property
    def arcs(self) -> Tuple[int, ...]:
        return tuple(sorted({x for cr in self.crossings for x in cr.labels}))

    @cached_property
    def positions(self) -> Dict[int, List[Tuple[int, int]]]:
        """arc -> [(crossing index, position), ...] (two entries on valid diagrams)."""
        out: Dict[int, List[Tuple[int, int]]] = {}
        for ci, cr in enumerate(self.crossings):
            for pos, x in enumerate(cr.labels):
                out.setdefault(x, []).append((ci, pos))
        return out

    def other_end(self, ci: int, pos: int) -> Tuple[int, int]:
        """The other (crossing, position) occurrence of the arc at (ci, pos)."""
        x = self.crossings[ci].at(pos)
        ends = self.positions[x]
        if ends[0] == (ci, pos % 4):
            return ends[1]
        return ends[0]

    @cached_property
    def component_count(self) -> int:
        parent: Dict[int, int] = {x: x for x in self.arcs}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for cr in self.crossings:
            for u, v in ((cr.a, cr.c), (cr.b, cr.d)):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        return len({find(x) for x in self.arcs}) + self.free_loops

    @property
    def mark(self) -> Optional[int]:
        if self.marked_edge is not None:
            return self.marked_edge
        return self.arcs[0] if self.arcs else None

    def with_mark(self, arc: Optional[int]) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.free_loops, arc)
