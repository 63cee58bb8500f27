# qalink/core/services/kauffman_service.py

from math import isqrt
from typing import Dict, Optional

from ...config import get_settings
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.exceptions import EmptyDiagram, TooLarge

# i**k as a Gaussian integer (re, im)
_POWERS_OF_I = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _state_loops(d: LinkDiagram, state: int) -> int:
    parent: Dict[int, int] = {x: x for x in d.arcs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for ci, cr in enumerate(d.crossings):
        if state >> ci & 1:     # A-smoothing
            join(cr.a, cr.b)
            join(cr.c, cr.d)
        else:                   # B-smoothing
            join(cr.a, cr.d)
            join(cr.b, cr.c)
    return len({find(x) for x in d.arcs}) + d.free_loops


def kauffman_det(d: LinkDiagram, max_crossings: Optional[int] = None) -> int:
    """
    |<D>| at A = exp(i*pi/4), by summing over all 2^n states.

    At that value the loop factor -A^2 - A^-2 vanishes, so only states with
    a single loop contribute, each with A^(#A - #B), which up to a global
    unit is i^(#A).
    """
    bound = get_settings().KAUFFMAN_MAX_CROSSINGS if max_crossings is None else max_crossings
    if d.n > bound:
        raise TooLarge(d.n, bound)
    if d.n == 0:
        if d.free_loops == 0:
            raise EmptyDiagram()
        return 1 if d.free_loops == 1 else 0

    re, im = 0, 0
    for state in range(1 << d.n):
        if _state_loops(d, state) == 1:
            dr, di = _POWERS_OF_I[bin(state).count("1") % 4]
            re += dr
            im += di
    return isqrt(re * re + im * im)
