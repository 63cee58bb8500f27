# qalink/adapters/entry/cli/cli_runner.py
"""
Command-line front end.

Subcommands:
- det <pd-file> [--oracle]                 determinant (and the state-sum value)
- certify <pd-file> [--budget N] [--jobs N] [--out cert.json] [--no-memo]
- verify <cert.json>
- family pretzel N1 N2 ... | torus2 K | twobridge A1 A2 ... [--out f.pd]
- family necklace --n N --m M --q Q1 .. --s S1 ..
- family matBC P Q R                       B and C matrices, determinants, closed forms
- cover <pd-file> [--form clasp|curves]    surgery presentation of the branched double cover
- h1 <surgery.json>
- grid-check b|c --pmax P --qmax Q --rmax R [--pmin P0]
- simplify <pd-file>

Standard output carries exactly one JSON document (a RunReport).
Exit codes: 0 success, 1 Unknown or failed verification, 2 input error.
"""

import argparse
import json
import sys
import time
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError

from .... import __version__
from ....config import get_settings
from ....core.domain.dtos.continued_fraction_dto import ContinuedFraction
from ....core.domain.dtos.det_matrix_spec_dto import DetMatrixSpec
from ....core.domain.entities.run_report_entity import RunReport
from ....core.domain.enums.surgery_enums import DetMatrixKind, SurgeryForm
from ....core.domain.exceptions import BadParameters, QALinkError
from ....core.services.det_matrix_service import b_closed, c_closed, det_matrix, det_of
from ....core.services.family_service import cf_eval, pretzel, torus_2_2k, two_bridge
from ....core.services.kauffman_service import kauffman_det
from ....core.services.pd_codec_service import serialize_pd
from ....core.services.reidemeister_service import is_unknot, simplify_with_trace
from ....core.services.surgery_service import branched_cover_presentation, h1_order, necklace
from ....core.services.tait_service import determinant
from ....core.usecases.certify_link_use_case import CertifyLinkUseCase
from ....core.usecases.grid_check_use_case import GridCheckUseCase
from ....core.usecases.verify_certificate_use_case import VerifyCertificateUseCase
from ....utils.log import log_error, log_info, log_warn
from ...external.storage import json_store

# (payload, exit code, input digest)
Outcome = Tuple[Dict[str, Any], int, Optional[str]]


def _cmd_det(args) -> Outcome:
    d, h = json_store.load_pd(args.pd)
    payload: Dict[str, Any] = {"det": determinant(d), "crossings": d.n, "components": d.component_count}
    if args.oracle:
        payload["kauffman_det"] = kauffman_det(d)
    log_info("det", **payload)
    return payload, 0, h


def _cmd_certify(args) -> Outcome:
    d, h = json_store.load_pd(args.pd)
    res = CertifyLinkUseCase(budget=args.budget, jobs=args.jobs, memoize=not args.no_memo).execute(d)
    payload = res.model_dump(mode="json")
    if res.certified and args.out:
        payload["out"] = str(json_store.save_model(args.out, res.certificate))
    log_info("certify", status=res.status.value, det=res.det, nodes=res.nodes)
    return payload, 0 if res.certified else 1, h


def _cmd_verify(args) -> Outcome:
    cert, h = json_store.load_certificate(args.cert)
    uc = VerifyCertificateUseCase()
    ok = uc.execute(cert)
    if not ok:
        log_warn("certificate rejected", failures=len(uc.failures))
    return {"valid": ok, "failures": uc.failures, "nodes": cert.node_count()}, 0 if ok else 1, h


def _pd_payload(d, out: Optional[str]) -> Dict[str, Any]:
    text = serialize_pd(d)
    payload: Dict[str, Any] = {"pd": text, "crossings": d.n, "components": d.component_count, "det": determinant(d)}
    if out:
        payload["out"] = str(json_store.save_pd(out, text))
    return payload


def _cmd_family(args) -> Outcome:
    kind = args.family
    if kind == "pretzel":
        payload = _pd_payload(pretzel(*args.params), args.out)
    elif kind == "torus2":
        if len(args.params) != 1:
            raise BadParameters("torus2 takes exactly one parameter k", params=args.params)
        payload = _pd_payload(torus_2_2k(args.params[0]), args.out)
    elif kind == "twobridge":
        cf = ContinuedFraction(terms=args.params)
        payload = _pd_payload(two_bridge(cf), args.out)
        payload["p"], payload["q"] = cf_eval(cf)
    elif kind == "necklace":
        s = necklace(args.n, args.m, args.q or [], args.s or [])
        payload = {"surgery": s.model_dump(mode="json"), "h1": h1_order(s)}
    else:
        if len(args.params) != 3:
            raise BadParameters("matBC takes P Q R", params=args.params)
        p, q, r = args.params
        payload = {}
        for k, closed in ((DetMatrixKind.B, b_closed), (DetMatrixKind.C, c_closed)):
            spec = DetMatrixSpec(kind=k, p=p, q=q, r=r)
            payload[k.value] = {"matrix": det_matrix(spec), "det": det_of(spec), "closed_form": closed(p, q, r)}
    return payload, 0, None


def _cmd_cover(args) -> Outcome:
    d, h = json_store.load_pd(args.pd)
    s = branched_cover_presentation(d, SurgeryForm(args.form))
    return {"surgery": s.model_dump(mode="json"), "h1": h1_order(s)}, 0, h


def _cmd_h1(args) -> Outcome:
    s, h = json_store.load_surgery(args.surgery)
    return {"h1": h1_order(s), "components": s.size}, 0, h


def _cmd_grid_check(args) -> Outcome:
    kind = DetMatrixKind(args.kind.upper())
    payload = GridCheckUseCase().execute(kind, args.pmax, args.qmax, args.rmax, args.pmin)
    return payload, 0 if payload["mismatches"] == 0 else 1, None


def _cmd_simplify(args) -> Outcome:
    d, h = json_store.load_pd(args.pd)
    s, trace = simplify_with_trace(d)
    verdict = is_unknot(d)
    payload = {
        "pd": serialize_pd(s),
        "crossings_before": d.n,
        "crossings_after": s.n,
        "trace": [m.model_dump(mode="json") for m in trace],
        "unknot": verdict.value,
    }
    return payload, 0, h


def build_parser() -> argparse.ArgumentParser:
    s = get_settings()
    parser = argparse.ArgumentParser(prog="qalink", description="Quasi-alternating link toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="Link determinant from a PD file.")
    p.add_argument("pd")
    p.add_argument("--oracle", action="store_true", help="Also compute the brute-force state sum.")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("certify", help="Search for a quasi-alternating certificate.")
    p.add_argument("pd")
    p.add_argument("--budget", type=int, default=s.CERTIFY_BUDGET, help="Node limit for the search.")
    p.add_argument("--jobs", type=int, default=s.CERTIFY_JOBS, help="Threads for branch exploration.")
    p.add_argument("--out", type=str, help="Write the certificate JSON here.")
    p.add_argument("--no-memo", action="store_true", help="Disable memoization.")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="Re-check a certificate JSON.")
    p.add_argument("cert")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("family", help="Generate a link family member or matrix.")
    p.add_argument("family", choices=["pretzel", "torus2", "twobridge", "necklace", "matBC"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--q", type=int, nargs="+")
    p.add_argument("--s", type=int, nargs="+")
    p.add_argument("--out", type=str, help="Write the PD text here.")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("cover", help="Surgery presentation of the branched double cover.")
    p.add_argument("pd")
    p.add_argument("--form", choices=[f.value for f in SurgeryForm], default=SurgeryForm.CLASP.value)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("h1", help="|H_1| of a surgery diagram JSON.")
    p.add_argument("surgery")
    p.set_defaults(func=_cmd_h1)

    p = sub.add_parser("grid-check", help="Closed forms against elimination.")
    p.add_argument("kind", choices=["b", "c"])
    p.add_argument("--pmin", type=int, default=1)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.set_defaults(func=_cmd_grid_check)

    p = sub.add_parser("simplify", help="Reidemeister simplification with move trace.")
    p.add_argument("pd")
    p.set_defaults(func=_cmd_simplify)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)

    started = time.perf_counter()
    try:
        payload, code, h = args.func(args)
    except (QALinkError, ValidationError, OSError, json.JSONDecodeError) as exc:
        log_error("input error", command=args.command, error=str(exc), kind=exc.__class__.__name__)
        payload, code, h = {"error": str(exc), "error_type": exc.__class__.__name__}, 2, None

    report = RunReport(
        command=argv,
        input_digest=h,
        ok=code == 0,
        payload=payload,
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
        version=__version__,
    )
    sys.stdout.write(json.dumps(report.model_dump(mode="json")) + "\n")
    sys.stdout.flush()
    return code
