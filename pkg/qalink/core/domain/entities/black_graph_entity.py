# qalink/core/domain/entities/black_graph_entity.py

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple


@dataclass(frozen=True)
class GraphEdge:
    u: int
    v: int
    mu: int         # incidence sign, +1 or -1
    crossing: int   # index of the crossing this edge passes through

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class BlackGraph:
    """
    Signed planar multigraph on the black regions of a diagram.

    Vertices are face indices of the coloring the graph was built from.
    `weights` are computed once on the full graph and carried unchanged
    through `reduce`. `vertex_arcs` holds the arcs on each black region's
    boundary; `removed` is the vertex deleted by reduction, if any.
    """
    vertices: Tuple[int, ...]
    edges: Tuple[GraphEdge, ...]
    weights: Dict[int, int] = field(default_factory=dict)
    vertex_arcs: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    removed: Optional[int] = None

    @property
    def is_reduced(self) -> bool:
        return self.removed is not None

    def incident(self, v: int) -> List[GraphEdge]:
        return [e for e in self.edges if e.u == v or e.v == v]


@dataclass(frozen=True)
class GoeritzMatrix:
    vertices: Tuple[int, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> List[List[int]]:
        return [list(r) for r in self.entries]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))
