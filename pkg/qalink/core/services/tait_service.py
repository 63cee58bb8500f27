# qalink/core/services/tait_service.py

from typing import Dict, FrozenSet, List, Optional

from ..domain.entities.black_graph_entity import BlackGraph, GoeritzMatrix, GraphEdge
from ..domain.entities.coloring_entity import CheckerboardColoring
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.enums.diagram_enums import FaceColor
from ..domain.exceptions import EmptyDiagram, MarkError
from .face_service import faces, piece_count
from .integer_matrix_service import bareiss_det


def incidence(coloring: CheckerboardColoring, ci: int) -> int:
    """
    +1 when the black corners of crossing `ci` are the ones swept
    counterclockwise from the over-strand (corners 1 and 3), else -1.
    """
    black_odd = coloring.color_of(coloring.face_of[(ci, 1)]) is FaceColor.BLACK
    return 1 if black_odd else -1


def black_graph(d: LinkDiagram, coloring: Optional[CheckerboardColoring] = None) -> BlackGraph:
    if d.n == 0:
        raise EmptyDiagram()
    coloring = coloring or faces(d)

    vertices = coloring.faces_of(FaceColor.BLACK)
    edges: List[GraphEdge] = []
    for ci in range(d.n):
        mu = incidence(coloring, ci)
        first = 1 if mu > 0 else 0
        u = coloring.face_of[(ci, first)]
        v = coloring.face_of[(ci, first + 2)]
        edges.append(GraphEdge(min(u, v), max(u, v), mu, ci))

    weights: Dict[int, int] = {v: 0 for v in vertices}
    for e in edges:
        weights[e.u] -= e.mu
        weights[e.v] -= e.mu
    vertex_arcs: Dict[int, FrozenSet[int]] = {v: frozenset(coloring.faces[v].arcs) for v in vertices}
    return BlackGraph(tuple(vertices), tuple(edges), weights, vertex_arcs)


def reduce(g: BlackGraph, marked: int) -> BlackGraph:
    """Delete the black region along `marked` and its edges. Weights are kept as they were."""
    touching = [v for v in g.vertices if marked in g.vertex_arcs.get(v, ())]
    if len(touching) != 1:
        raise MarkError(marked, len(touching))
    gone = touching[0]
    return BlackGraph(
        vertices=tuple(v for v in g.vertices if v != gone),
        edges=tuple(e for e in g.edges if gone not in (e.u, e.v)),
        weights={v: w for v, w in g.weights.items() if v != gone},
        vertex_arcs={v: a for v, a in g.vertex_arcs.items() if v != gone},
        removed=gone,
    )


def goeritz(g: BlackGraph) -> GoeritzMatrix:
    """
    Diagonal: the vertex weight with self-loops taken back out.
    Off-diagonal: summed incidence signs of the edges joining the two vertices.
    """
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    m = [[0] * len(order) for _ in order]
    for v in order:
        m[index[v]][index[v]] = g.weights[v]
    for e in g.edges:
        if e.is_loop:
            m[index[e.u]][index[e.u]] += 2 * e.mu
        else:
            m[index[e.u]][index[e.v]] += e.mu
            m[index[e.v]][index[e.u]] += e.mu
    return GoeritzMatrix(tuple(order), tuple(tuple(r) for r in m))


def reduced_black_graph(d: LinkDiagram, marked: Optional[int] = None,
                        coloring: Optional[CheckerboardColoring] = None) -> BlackGraph:
    g = black_graph(d, coloring)
    return reduce(g, d.mark if marked is None else marked)


def determinant(d: LinkDiagram, marked: Optional[int] = None,
                coloring: Optional[CheckerboardColoring] = None) -> int:
    """
    |det| of the Goeritz matrix. Split diagrams give 0, the crossingless
    unknot gives 1 (empty matrix).
    """
    if d.n == 0:
        if d.free_loops == 0:
            raise EmptyDiagram()
        return 1 if d.free_loops == 1 else 0
    if piece_count(d) > 1:
        return 0
    return abs(bareiss_det(goeritz(reduced_black_graph(d, marked, coloring)).entries))
