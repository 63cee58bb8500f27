# qalink/core/services/tangle_service.py
"""
Two-string tangles assembled inside a DiagramBuilder.

A tangle is tracked by the arc labels at its four ends NW, NE, SE, SW.
A crossing with slope sign eps sits in the tangle frame with its over
strand running SE-NW (eps = -1) or SW-NE (eps = +1).
"""

from dataclasses import dataclass, replace
from typing import Sequence

from ..domain.exceptions import BadParameters
from .pd_codec_service import DiagramBuilder


@dataclass(frozen=True)
class Tangle:
    nw: int
    ne: int
    se: int
    sw: int


def zero_tangle(b: DiagramBuilder) -> Tangle:
    x, y = b.fresh(), b.fresh()
    return Tangle(nw=x, ne=x, se=y, sw=y)


def infinity_tangle(b: DiagramBuilder) -> Tangle:
    x, y = b.fresh(), b.fresh()
    return Tangle(nw=x, ne=y, se=y, sw=x)


def add_framed_crossing(b: DiagramBuilder, nw: int, ne: int, se: int, sw: int, epsilon: int) -> None:
    if epsilon < 0:
        b.add_crossing((sw, se, ne, nw), -1)
    else:
        b.add_crossing((se, ne, nw, sw), 1)


def twist_horizontal(b: DiagramBuilder, t: Tangle, epsilon: int) -> Tangle:
    """One crossing on the east side; adds epsilon to the fraction."""
    p, q = b.fresh(), b.fresh()
    add_framed_crossing(b, nw=t.ne, ne=p, se=q, sw=t.se, epsilon=epsilon)
    return replace(t, ne=p, se=q)


def twist_vertical(b: DiagramBuilder, t: Tangle, epsilon: int) -> Tangle:
    """One crossing on the south side; adds epsilon to the reciprocal of the fraction."""
    p, q = b.fresh(), b.fresh()
    add_framed_crossing(b, nw=t.sw, ne=t.se, se=q, sw=p, epsilon=epsilon)
    return replace(t, sw=p, se=q)


def rational_tangle(b: DiagramBuilder, terms: Sequence[int]) -> Tangle:
    """
    C(a_1, ..., a_m) with fraction a_m + 1/(a_{m-1} + 1/(... + 1/a_1)).
    Twists alternate direction and end horizontally; every crossing of a
    term a_i has slope sign sign(a_i).
    """
    if not terms or any(a == 0 for a in terms):
        raise BadParameters(f"rational tangle needs nonzero terms, got {list(terms)}", terms=list(terms))
    m = len(terms)
    t = zero_tangle(b) if (m - 1) % 2 == 0 else infinity_tangle(b)
    for i, a in enumerate(terms, start=1):
        eps = 1 if a > 0 else -1
        horizontal = (m - i) % 2 == 0
        for _ in range(abs(a)):
            t = twist_horizontal(b, t, eps) if horizontal else twist_vertical(b, t, eps)
    return t


def vertical_column(b: DiagramBuilder, n: int) -> Tangle:
    """The tangle 1/n: n crossings stacked vertically."""
    t = infinity_tangle(b)
    eps = 1 if n > 0 else -1
    for _ in range(abs(n)):
        t = twist_vertical(b, t, eps)
    return t


def tangle_sum(b: DiagramBuilder, left: Tangle, right: Tangle) -> Tangle:
    b.glue(left.ne, right.nw)
    b.glue(left.se, right.sw)
    return Tangle(nw=left.nw, ne=right.ne, se=right.se, sw=left.sw)


def numerator_closure(b: DiagramBuilder, t: Tangle) -> None:
    b.glue(t.ne, t.nw)
    b.glue(t.se, t.sw)
