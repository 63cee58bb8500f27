# qalink/core/services/det_matrix_service.py
"""
The A, B, C determinant matrices of the (p, q, r) family.

Each is a small head block with off-diagonal p plus two chains of 2's
(off-diagonal -1) hanging off two head vertices through a -1 entry.

    B: head diag (-2p, 1-2p, 1-2p); chain q at head vertex 2, chain r at vertex 1
    C: head diag (1-2p, 1-2p);      chain q at head vertex 1, chain r at vertex 0
    A: head diag (1-2p, 1-2p, 1-2p); chain q at head vertex 1, chain r at vertex 2
"""

from typing import List, Sequence, Tuple

from ..domain.dtos.det_matrix_spec_dto import DetMatrixSpec
from ..domain.enums.surgery_enums import DetMatrixKind
from ..domain.exceptions import BadParameters
from .integer_matrix_service import bareiss_det


def _head(kind: DetMatrixKind, p: int) -> Tuple[List[int], Tuple[int, int]]:
    """Head diagonal and the head vertices carrying the q- and r-chains."""
    if kind is DetMatrixKind.B:
        return [-2 * p, 1 - 2 * p, 1 - 2 * p], (2, 1)
    if kind is DetMatrixKind.C:
        return [1 - 2 * p, 1 - 2 * p], (1, 0)
    return [1 - 2 * p, 1 - 2 * p, 1 - 2 * p], (1, 2)


def det_matrix(spec: DetMatrixSpec) -> List[List[int]]:
    diag, (q_at, r_at) = _head(spec.kind, spec.p)
    h = len(diag)
    size = h + spec.q + spec.r
    m = [[0] * size for _ in range(size)]
    for i in range(h):
        for j in range(h):
            m[i][j] = diag[i] if i == j else spec.p

    start = h
    for at, length in ((q_at, spec.q), (r_at, spec.r)):
        if length == 0:
            continue
        m[at][start] = m[start][at] = -1
        for k in range(length):
            i = start + k
            m[i][i] = 2
            if k + 1 < length:
                m[i][i + 1] = m[i + 1][i] = -1
        start += length
    return m


def det_of(spec: DetMatrixSpec) -> int:
    return bareiss_det(det_matrix(spec))


def _check(p: int, q: int, r: int) -> None:
    if p < 1 or q < 0 or r < 0:
        raise BadParameters(f"need p >= 1 and q, r >= 0, got ({p},{q},{r})", p=p, q=q, r=r)


def b_closed(p: int, q: int, r: int) -> int:
    _check(p, q, r)
    return (r + q) * (3 * p * p) + (6 * p * p - 2 * p)


def c_closed(p: int, q: int, r: int) -> int:
    _check(p, q, r)
    return r * q * (3 * p * p) + r * (-2 * p + 3 * p * p) + q * (-2 * p + 3 * p * p) + (1 - 4 * p + 3 * p * p)


def a_closed(p: int, q: int, r: int) -> int:
    """det A, as det B + det C."""
    return b_closed(p, q, r) + c_closed(p, q, r)


def balanced_slice(kind: DetMatrixKind, p: int, q: int) -> List[List[int]]:
    """Both chains of length q - 1."""
    if q < 1:
        raise BadParameters(f"slice needs q >= 1, got {q}", q=q)
    return det_matrix(DetMatrixSpec(kind=kind, p=p, q=q - 1, r=q - 1))


def recurrence_holds(values: Sequence[int]) -> bool:
    """v[k] == 2 v[k-1] - v[k-2] along a sequence of consecutive chain lengths."""
    return all(values[k] == 2 * values[k - 1] - values[k - 2] for k in range(2, len(values)))


def grid_mismatches(kind: DetMatrixKind, pmax: int, qmax: int, rmax: int, pmin: int = 1) -> List[dict]:
    """Grid points where elimination and the closed form disagree."""
    closed = {DetMatrixKind.A: a_closed, DetMatrixKind.B: b_closed, DetMatrixKind.C: c_closed}[kind]
    out = []
    for p in range(pmin, pmax + 1):
        for q in range(qmax + 1):
            for r in range(rmax + 1):
                got = det_of(DetMatrixSpec(kind=kind, p=p, q=q, r=r))
                want = closed(p, q, r)
                if got != want:
                    out.append({"p": p, "q": q, "r": r, "elimination": got, "closed_form": want})
    return out
