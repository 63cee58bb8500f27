# qalink/core/services/plumbing_service.py

from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.entities.surgery_entity import PlumbingTree
from ..domain.exceptions import BadParameters, NotBlowable
from .face_service import faces
from .integer_matrix_service import bareiss_det
from .tait_service import black_graph, goeritz, reduce

# None: a new isolated vertex; v: next to vertex v; (u, v): on the edge u-v
BlowUpSite = Union[None, int, Tuple[int, int]]


def intersection_matrix(t: PlumbingTree) -> List[List[int]]:
    order = t.vertices
    index = {v: i for i, v in enumerate(order)}
    m = [[0] * len(order) for _ in order]
    for v in order:
        m[index[v]][index[v]] = t.weights[v]
    for a, b in t.edges:
        m[index[a]][index[b]] = m[index[b]][index[a]] = 1
    return m


def plumbing_det(t: PlumbingTree) -> int:
    return abs(bareiss_det(intersection_matrix(t)))


def blow_down(t: PlumbingTree, v: int) -> PlumbingTree:
    if v not in t.weights:
        raise BadParameters(f"no vertex {v}", vertex=v)
    nbrs = t.neighbors(v)
    if t.weights[v] != -1 or len(nbrs) > 2:
        raise NotBlowable(v, t.weights[v], len(nbrs))
    weights = {u: w + (1 if u in nbrs else 0) for u, w in t.weights.items() if u != v}
    edges = [e for e in t.edges if v not in e]
    if len(nbrs) == 2:
        edges.append((nbrs[0], nbrs[1]))
    return PlumbingTree(weights=weights, edges=edges)


def blow_up(t: PlumbingTree, site: BlowUpSite = None, sign: int = -1) -> PlumbingTree:
    """
    Insert a (-1)-vertex, the inverse of blow_down. Returns the new tree;
    the new vertex is max(vertices) + 1.
    """
    if sign != -1:
        raise BadParameters("only -1 blow-ups are supported", sign=sign)
    new = max(t.weights, default=-1) + 1
    weights = dict(t.weights)
    edges = list(t.edges)
    weights[new] = -1
    if site is None:
        pass
    elif isinstance(site, int):
        if site not in weights:
            raise BadParameters(f"no vertex {site}", vertex=site)
        weights[site] -= 1
        edges.append((site, new))
    else:
        u, v = min(site), max(site)
        if (u, v) not in edges:
            raise BadParameters(f"no edge {site}", edge=list(site))
        edges.remove((u, v))
        weights[u] -= 1
        weights[v] -= 1
        edges += [(u, new), (new, v)]
    return PlumbingTree(weights=weights, edges=edges)


def star_plumbing(center: int, arms: Sequence[Sequence[int]]) -> PlumbingTree:
    """Center vertex 0; each arm is a chain of weights leading away from it."""
    weights: Dict[int, int] = {0: center}
    edges: List[Tuple[int, int]] = []
    nxt = 1
    for arm in arms:
        prev = 0
        for w in arm:
            weights[nxt] = w
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return PlumbingTree(weights=weights, edges=edges)


def _as_tree(g) -> Optional[PlumbingTree]:
    pairs = [(min(e.u, e.v), max(e.u, e.v)) for e in g.edges]
    if any(a == b for a, b in pairs) or len(set(pairs)) != len(pairs):
        return None
    if len(pairs) != len(g.vertices) - 1:
        return None
    m = goeritz(g)
    weights = {v: m.entries[i][i] for i, v in enumerate(m.vertices)}
    try:
        return PlumbingTree(weights=weights, edges=pairs)
    except ValueError:
        return None


def plumbing_from_black_graph(d: LinkDiagram) -> PlumbingTree:
    """
    A reduced black graph that is a tree, read as a plumbing tree (Goeritz
    diagonal as weights). Both colorings and every deletable vertex are tried.
    """
    coloring = faces(d)
    for c in (coloring, coloring.swapped()):
        g = black_graph(d, c)
        for v in g.vertices:
            arc = min(g.vertex_arcs[v])
            tree = _as_tree(reduce(g, arc))
            if tree is not None:
                return tree
    raise BadParameters("no reduced black graph of this diagram is a tree")
