# qalink/core/services/integer_matrix_service.py

from typing import List, Sequence

import numpy as np

Matrix = Sequence[Sequence[int]]


def bareiss_det(rows: Matrix) -> int:
    """
    Exact determinant by fraction-free (Bareiss) elimination.
    Every intermediate division is exact. The 0x0 determinant is 1.
    """
    m: List[List[int]] = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")

    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        akk = m[k][k]
        for i in range(k + 1, n):
            aik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * m[n - 1][n - 1]


def is_symmetric(rows: Matrix) -> bool:
    a = np.asarray(rows, dtype=object)
    if a.size == 0:
        return True
    return a.ndim == 2 and a.shape[0] == a.shape[1] and bool((a == a.T).all())


def float_det(rows: Matrix) -> float:
    """Floating-point determinant, only as an independent check on small matrices."""
    if len(rows) == 0:
        return 1.0
    return float(np.linalg.det(np.asarray(rows, dtype=float)))
