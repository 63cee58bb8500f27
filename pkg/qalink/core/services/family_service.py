# qalink/core/services/family_service.py

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..domain.dtos.continued_fraction_dto import ContinuedFraction
from ..domain.entities.link_diagram_entity import LinkDiagram
from ..domain.exceptions import BadParameters, DegenerateFraction
from .pd_codec_service import DiagramBuilder
from .tangle_service import add_framed_crossing, numerator_closure, rational_tangle, tangle_sum, vertical_column


def pretzel(*twists: int) -> LinkDiagram:
    """P(n_1, ..., n_k): the numerator closure of 1/n_1 + ... + 1/n_k."""
    if len(twists) < 2:
        raise BadParameters(f"pretzel needs at least 2 columns, got {len(twists)}", twists=list(twists))
    if any(n == 0 for n in twists):
        raise BadParameters(f"pretzel twists must be nonzero, got {list(twists)}", twists=list(twists))
    b = DiagramBuilder()
    t = vertical_column(b, twists[0])
    for n in twists[1:]:
        t = tangle_sum(b, t, vertical_column(b, n))
    numerator_closure(b, t)
    return b.build()


def pretzel_det(*twists: int) -> int:
    """|sum_i prod_{j != i} n_j|"""
    total = 0
    for i in range(len(twists)):
        prod = 1
        for j, n in enumerate(twists):
            if j != i:
                prod *= n
        total += prod
    return abs(total)


def torus_2_2k(k: int) -> LinkDiagram:
    if k < 1:
        raise BadParameters(f"torus link T(2,2k) needs k >= 1, got {k}", k=k)
    b = DiagramBuilder()
    numerator_closure(b, rational_tangle(b, [2 * k]))
    return b.build()


def _fraction(terms: Sequence[int]) -> Fraction:
    x = Fraction(terms[0])
    for a in terms[1:]:
        if x == 0:
            raise DegenerateFraction(list(terms))
        x = a + 1 / x
    if x == 0:
        raise DegenerateFraction(list(terms))
    return x


def cf_eval(cf: ContinuedFraction) -> Tuple[int, int]:
    """
    (p, q) with p = |numerator| and q the signed denominator reduced mod p,
    so 0 < q < p (q = 1 when p = 1).
    """
    x = _fraction(cf.terms)
    p = abs(x.numerator)
    q = (x.denominator if x > 0 else -x.denominator) % p
    return p, (q or 1)


def positive_terms(p: int, q: int) -> List[int]:
    """All-positive terms a_1..a_m of p/q, by Euclid's algorithm."""
    rev: List[int] = []
    a, b = p, q
    while b:
        t = a // b
        rev.append(t)
        a, b = b, a - t * b
    return rev[::-1]


def normalized_terms(cf: ContinuedFraction) -> List[int]:
    """Same-sign terms are kept; mixed signs are re-expanded positively from (p, q)."""
    if all(a > 0 for a in cf.terms) or all(a < 0 for a in cf.terms):
        return list(cf.terms)
    return positive_terms(*cf_eval(cf))


def two_bridge(cf: ContinuedFraction) -> LinkDiagram:
    """Alternating 4-plat: numerator closure of the rational tangle C(cf). Its determinant is p."""
    cf_eval(cf)
    b = DiagramBuilder()
    numerator_closure(b, rational_tangle(b, normalized_terms(cf)))
    return b.build()


def braid_closure(word: Sequence[int], strands: Optional[int] = None) -> LinkDiagram:
    """
    Closure of a braid word; generator i > 0 crosses strands i and i+1 with
    positive slope, -i with negative slope. Strands run upwards.
    """
    if not word or any(g == 0 for g in word):
        raise BadParameters(f"braid word must be nonempty with nonzero generators, got {list(word)}", word=list(word))
    width = max(abs(g) for g in word) + 1 if strands is None else strands
    if max(abs(g) for g in word) >= width:
        raise BadParameters(f"generator out of range for {width} strands", word=list(word), strands=width)
    b = DiagramBuilder()
    bottom = [b.fresh() for _ in range(width)]
    cur = list(bottom)
    for g in word:
        i = abs(g) - 1
        nw, ne = b.fresh(), b.fresh()
        add_framed_crossing(b, nw=nw, ne=ne, se=cur[i + 1], sw=cur[i], epsilon=1 if g > 0 else -1)
        cur[i], cur[i + 1] = nw, ne
    for top, bot in zip(cur, bottom):
        b.glue(top, bot)
    return b.build()
