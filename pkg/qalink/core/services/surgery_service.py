# qalink/core/services/surgery_service.py

from typing import List, Optional, Sequence, Tuple

from ..domain.entities.black_graph_entity import BlackGraph
from ..domain.entities.coloring_entity import CheckerboardColoring
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.entities.surgery_entity import SurgeryComponent, SurgeryDiagram
from ..domain.enums.surgery_enums import SurgeryForm
from ..domain.exceptions import BadParameters, Disconnected
from .face_service import piece_count
from .integer_matrix_service import bareiss_det
from .resolution_service import resolve_both
from .tait_service import black_graph, goeritz, reduce


def _clasp_form(reduced: BlackGraph) -> SurgeryDiagram:
    m = goeritz(reduced).entries
    n = len(m)
    return SurgeryDiagram(
        form=SurgeryForm.CLASP,
        components=[SurgeryComponent(p=m[i][i]) for i in range(n)],
        linking=[[0 if i == j else m[i][j] for j in range(n)] for i in range(n)],
    )


def _curves_form(full: BlackGraph, reduced: BlackGraph) -> SurgeryDiagram:
    """
    One 0-framed unknot per remaining vertex, then one curve per edge framed
    by the edge sign, linking its endpoints +1 and -1. Edges into the deleted
    vertex link a single unknot; self-loops add nothing.
    """
    order = sorted(reduced.vertices)
    index = {v: i for i, v in enumerate(order)}
    edges = [e for e in full.edges if not e.is_loop and (e.u in index or e.v in index)]
    n = len(order) + len(edges)
    lk = [[0] * n for _ in range(n)]
    for k, e in enumerate(edges):
        c = len(order) + k
        for v, sign in ((e.u, 1), (e.v, -1)):
            if v in index:
                lk[index[v]][c] = lk[c][index[v]] = sign
    return SurgeryDiagram(
        form=SurgeryForm.CURVES,
        components=[SurgeryComponent(p=0) for _ in order] + [SurgeryComponent(p=e.mu) for e in edges],
        linking=lk,
    )


def branched_cover_presentation(d: LinkDiagram, form: SurgeryForm = SurgeryForm.CLASP,
                                marked: Optional[int] = None,
                                coloring: Optional[CheckerboardColoring] = None) -> SurgeryDiagram:
    """Surgery presentation of the branched double cover, read off the reduced black graph."""
    if d.n == 0:
        if d.free_loops == 1:
            return SurgeryDiagram(form=form)
        raise Disconnected(d.free_loops)
    pieces = piece_count(d)
    if pieces > 1:
        raise Disconnected(pieces)
    full = black_graph(d, coloring)
    reduced = reduce(full, d.mark if marked is None else marked)
    if form is SurgeryForm.CURVES:
        return _curves_form(full, reduced)
    return _clasp_form(reduced)


def presentation_matrix(s: SurgeryDiagram) -> List[List[int]]:
    n = s.size
    return [[s.components[i].p if i == j else s.components[i].q * s.linking[i][j] for j in range(n)]
            for i in range(n)]


def h1_order(s: SurgeryDiagram) -> int:
    """|H_1| of the surgered manifold; 0 when H_1 is infinite."""
    return abs(bareiss_det(presentation_matrix(s)))


def _unit_fraction(x: int) -> SurgeryComponent:
    return SurgeryComponent(p=1 if x > 0 else -1, q=abs(x))


def necklace(n: int, m: int, q: Sequence[int], s: Sequence[int]) -> SurgeryDiagram:
    """
    Closed chain of 2mn unknots with coefficients 1/q_1, 1/s_1, ..., 1/q_m, 1/s_m
    repeated n times. Neighbours link once, with signs alternating +1, -1
    around the chain.
    """
    if n < 1 or m < 1 or len(q) != m or len(s) != m or any(x == 0 for x in (*q, *s)):
        raise BadParameters(f"necklace needs n, m >= 1 and m nonzero q's and s's, got n={n} m={m} q={list(q)} s={list(s)}",
                            n=n, m=m, q=list(q), s=list(s))
    coeffs = [_unit_fraction(x) for _ in range(n) for j in range(m) for x in (q[j], s[j])]
    size = len(coeffs)
    lk = [[0] * size for _ in range(size)]
    for i in range(size):
        j = (i + 1) % size
        sign = 1 if i % 2 == 0 else -1
        lk[i][j] += sign
        lk[j][i] += sign
    return SurgeryDiagram(form=SurgeryForm.CLASP, components=coeffs, linking=lk)


def necklace_conway_terms(q: Sequence[int], s: Sequence[int]) -> List[int]:
    """[-2q_1, 2s_1, ..., -2q_m, 2s_m]"""
    out: List[int] = []
    for qj, sj in zip(q, s):
        out += [-2 * qj, 2 * sj]
    return out


def triad_orders(d: LinkDiagram, crossing: int) -> Tuple[int, int, int]:
    """|H_1| of the covers of d and of its two resolutions at `crossing`."""
    d0, dinf = resolve_both(d, crossing)
    return tuple(h1_order(branched_cover_presentation(x)) for x in (d, d0, dinf))
