# qalink/core/usecases/grid_check_use_case.py

from typing import Dict, List

from ...utils.log import get_logger
from ..domain.dtos.det_matrix_spec_dto import DetMatrixSpec
from ..domain.enums.surgery_enums import DetMatrixKind
from ..domain.exceptions import BadParameters
from ..services.det_matrix_service import b_closed, c_closed, det_of, grid_mismatches, recurrence_holds


class GridCheckUseCase:
    """
    Closed form against elimination over p in [pmin, pmax], q in [0, qmax],
    r in [0, rmax], plus the chain-length recurrences, positivity, and
    det A = det B + det C on the same grid.
    """

    def __init__(self, logger=None):
        self._logger = logger or get_logger(self.__class__.__name__)

    def execute(self, kind: DetMatrixKind, pmax: int, qmax: int, rmax: int, pmin: int = 1) -> Dict:
        if pmin < 1 or pmax < pmin or qmax < 0 or rmax < 0:
            raise BadParameters("grid needs 1 <= pmin <= pmax and qmax, rmax >= 0",
                                pmin=pmin, pmax=pmax, qmax=qmax, rmax=rmax)
        closed = b_closed if kind is DetMatrixKind.B else c_closed
        mismatches = grid_mismatches(kind, pmax, qmax, rmax, pmin)

        recurrence_failures: List[Dict] = []
        nonpositive: List[Dict] = []
        additivity_failures: List[Dict] = []
        for p in range(pmin, pmax + 1):
            for r in range(rmax + 1):
                if not recurrence_holds([closed(p, q, r) for q in range(qmax + 1)]):
                    recurrence_failures.append({"p": p, "r": r, "along": "q"})
            for q in range(qmax + 1):
                if not recurrence_holds([closed(p, q, r) for r in range(rmax + 1)]):
                    recurrence_failures.append({"p": p, "q": q, "along": "r"})
                for r in range(rmax + 1):
                    if closed(p, q, r) <= 0:
                        nonpositive.append({"p": p, "q": q, "r": r})
                    dets = {k: det_of(DetMatrixSpec(kind=k, p=p, q=q, r=r)) for k in DetMatrixKind}
                    if dets[DetMatrixKind.A] != dets[DetMatrixKind.B] + dets[DetMatrixKind.C]:
                        additivity_failures.append({"p": p, "q": q, "r": r, **{k.value: v for k, v in dets.items()}})

        points = (pmax - pmin + 1) * (qmax + 1) * (rmax + 1)
        self._logger.info("grid_checked", kind=kind.value, points=points, mismatches=len(mismatches))
        return {
            "kind": kind.value,
            "points": points,
            "mismatches": len(mismatches),
            "mismatch_points": mismatches,
            "recurrence_failures": recurrence_failures,
            "nonpositive": nonpositive,
            "additivity_failures": additivity_failures,
        }
