"""Command-line front end.

Each subcommand takes a potential (argument, ``-`` or stdin) and prints a text
or JSON report.  Exit status: 0 success, 2 parse error, 3 precondition error,
4 when a needed root lies outside the allowed tower (a partial report is still
printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .classify import EXCEPTIONAL_TEXT, classify, potentials_equivalent
from .cy import WholeSurface, cy_check, fmt_point, format_biform, point_scheme, relations, tau_of_point
from .curves import classify_curve, factor_22, format_factorization
from .errors import (
    AmbiguousThirdPoint, CubicyError, DegreeMismatch, ExtensionUnavailable, ParseError,
    PreconditionViolated, TowerDepthExceeded,
)
from .hdet import check_automorphism, is_hdet_exceptional
from .ncpoly import NcPoly, format_ncpoly, project_c
from .oracle import graded_dims, ideal_member, reference_series
from .parse import parse_expression, parse_matrix, parse_point, parse_potential
from .present import to_clifford, to_dq, verify_centrality, verify_dq
from .scalars import format_scalar, max_depth

SCHEMA_VERSION = "1.0"
COMMANDS = ("classify", "cy-check", "point-scheme", "tau", "hdet", "equiv",
            "present-dq", "present-clifford", "hilbert", "member")


def load_schema() -> dict:
    text = resources.files("cubicy").joinpath("schema/report.schema.json").read_text()
    return json.loads(text)


def exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return 2
    if isinstance(exc, (ExtensionUnavailable, TowerDepthExceeded)):
        return 4
    if isinstance(exc, (PreconditionViolated, DegreeMismatch, AmbiguousThirdPoint)):
        return 3
    return 1


def _s(x) -> str:
    return format_scalar(x)


def _matrix(m) -> str:
    return f"[[{_s(m.a)}, {_s(m.b)}], [{_s(m.c)}, {_s(m.d)}]]"


def _point_scheme_text(ps) -> tuple[str, str | None]:
    if isinstance(ps, WholeSurface):
        return "P1xP1", None
    try:
        return format_factorization(factor_22(ps)), format_biform(ps)
    except ExtensionUnavailable:
        return format_biform(ps), format_biform(ps)


# -- per-command handlers: each returns (result dict, exit status) ------------------

def _classify(args, w):
    rep = classify(w)
    res = {
        "cyclic_part": format_ncpoly(rep.cyclic_part),
        "sp_coords": None if rep.sp_coords is None else [_s(v) for v in rep.sp_coords],
        "quartic_tag": rep.quartic_class.tag if rep.quartic_class else None,
        "lambda": None,
        "cy_status": rep.cy.status if rep.cy else None,
        "cy_witness": None,
        "table_row": rep.table_row,
        "exceptional_id": rep.exceptional_id,
        "relations": [format_ncpoly(r) for r in relations(rep.cyclic_part)] if not rep.cyclic_part.is_zero() else [],
        "point_scheme": None,
        "point_scheme_expanded": None,
        "curve_type": rep.curve_class.tag if rep.curve_class else None,
        "singular_points": [],
        "parameters": {k: _s(v) for k, v in rep.parameters.items()},
        "normalizing_sigma": _matrix(rep.normalizing_sigma) if rep.normalizing_sigma else None,
        "notes": list(rep.notes),
    }
    qc = rep.quartic_class
    if qc is not None and qc.lambda_invariant is not None:
        res["lambda"] = _s(qc.lambda_invariant)
    if rep.cy is not None and rep.cy.witness is not None:
        p, q = rep.cy.witness
        res["cy_witness"] = f"{fmt_point(p)},{fmt_point(q)}"
    if rep.point_scheme is not None:
        res["point_scheme"], res["point_scheme_expanded"] = _point_scheme_text(rep.point_scheme)
    if rep.curve_class is not None:
        res["singular_points"] = [
            {"point": f"{fmt_point(sp.point[0])},{fmt_point(sp.point[1])}", "kind": sp.kind}
            for sp in rep.curve_class.singular_points
        ]
    if rep.exceptional_id:
        res["exceptional_presentation"] = EXCEPTIONAL_TEXT[rep.exceptional_id]
        if rep.exceptional_sigma is not None:
            res["exceptional_sigma"] = _matrix(rep.exceptional_sigma)
    return res, (4 if rep.notes else 0)


def _cy_check(args, w):
    v = cy_check(w)
    res = {"cy_status": v.status, "is_cy": v.is_cy, "witness": None}
    if v.witness is not None:
        res["witness"] = f"{fmt_point(v.witness[0])},{fmt_point(v.witness[1])}"
    return res, 0


def _point_scheme(args, w):
    ps = point_scheme(w)
    text, expanded = _point_scheme_text(ps)
    res = {"point_scheme": text, "point_scheme_expanded": expanded, "curve_type": None}
    try:
        res["curve_type"] = classify_curve(ps).tag
    except ExtensionUnavailable as exc:
        res["notes"] = [str(exc)]
        return res, 4
    return res, 0


def _tau(args, w):
    if not args.point:
        raise ParseError("tau needs --point", None)
    pt = parse_point(args.point)
    p2, p3 = tau_of_point(w, pt)
    return {"point": f"{fmt_point(pt[0])},{fmt_point(pt[1])}",
            "image": f"{fmt_point(p2)},{fmt_point(p3)}"}, 0


def _hdet(args, w):
    c = project_c(w)
    if args.sigma:
        sigma = parse_matrix(args.sigma)
        chk = check_automorphism(c, sigma)
        return {
            "extends": chk.extends,
            "det": _s(chk.det),
            "hdet": None if chk.hdet is None else _s(chk.hdet),
            "hdet_eq_detsq": chk.equals_detsq,
        }, 0
    flag, witness = is_hdet_exceptional(c)
    res = {"exceptional": flag, "witness": None, "extends": True, "det": "1"}
    if witness is not None:
        chk = check_automorphism(c, witness)
        res.update(witness=_matrix(witness), det=_s(chk.det), hdet=_s(chk.hdet),
                   hdet_eq_detsq=chk.equals_detsq)
    return res, 0


def _equiv(args, w):
    if not args.other:
        raise ParseError("equiv needs --other", None)
    w2 = parse_potential(args.other)
    sigma = potentials_equivalent(w, w2)
    return {"equivalent": sigma is not None, "sigma": _matrix(sigma) if sigma else None}, 0


def _present_dq(args, w):
    dq = to_dq(w)
    return {"lambda": _s(dq.lam), "f": dq.f_text(), "relations": dq.relation_texts(),
            "verified": verify_dq(w, dq)}, 0


def _present_clifford(args, w):
    cp = to_clifford(w)
    m1, m2 = cp.matrices
    return {
        "a": _s(cp.a), "b": _s(cp.b), "sigma": _matrix(cp.sigma),
        "M1": [[_s(v) for v in row] for row in m1],
        "M2": [[_s(v) for v in row] for row in m2],
        "relations": [format_ncpoly(r) for r in relations(cp.potential)],
        "central_cubes": verify_centrality(w, args.max_degree),
    }, 0


def _hilbert(args, w):
    c = project_c(w)
    n = args.max_degree
    dims = graded_dims(relations(c), n)
    ref = reference_series(n)
    dev = next((k for k in range(n + 1) if dims[k] != ref[k]), None)
    res = {"dims": dims, "reference": ref, "matches_reference": dev is None,
           "first_deviation": dev, "exceptional_id": None}
    if not cy_check(c).is_cy:
        res["exceptional_id"] = classify(c).exceptional_id
    return res, 0


def _member(args, w):
    if not args.element:
        raise ParseError("member needs --element", None)
    u, _ = parse_expression(args.element)
    return {"degree": u.degree, "member": ideal_member(u, relations(project_c(w)))}, 0


HANDLERS = {
    "classify": _classify, "cy-check": _cy_check, "point-scheme": _point_scheme, "tau": _tau,
    "hdet": _hdet, "equiv": _equiv, "present-dq": _present_dq,
    "present-clifford": _present_clifford, "hilbert": _hilbert, "member": _member,
}


def run(command: str, potential_text: str, args) -> tuple[dict, int]:
    """Build the report for one potential; never raises on library errors."""
    inputs = {"potential": potential_text.strip(), "max_degree": args.max_degree,
              "tower_depth": args.tower_depth, "seed": args.seed}
    for key in ("other", "sigma", "point", "element"):
        val = getattr(args, key, None)
        if val:
            inputs[key] = val
    report = {"schema_version": SCHEMA_VERSION, "command": command, "input": inputs}
    try:
        with max_depth(args.tower_depth):
            w = parse_potential(potential_text)
            inputs["potential"] = format_ncpoly(w)
            result, code = HANDLERS[command](args, w)
        report.update(ok=True, result=result)
        return report, code
    except CubicyError as exc:
        report.update(ok=False, error={"code": exc.code, "message": str(exc)})
        return report, exit_code(exc)


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}", f"potential: {report['input']['potential']}"]
    if not report["ok"]:
        err = report["error"]
        lines.append(f"error [{err['code']}]: {err['message']}")
        return "\n".join(lines)
    res = report["result"]
    if report["command"] == "classify" and res.get("table_row"):
        rels = "; ".join(res["relations"])
        lines.append(f"row {res['table_row']} | {rels} | {res['point_scheme']} | {res['curve_type']}")
    for key, val in res.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            val = "; ".join(", ".join(f"{k}={v}" for k, v in d.items()) for d in val)
        elif isinstance(val, list):
            val = "; ".join(str(v) for v in val) if val else "-"
        elif isinstance(val, dict):
            val = ", ".join(f"{k}={v}" for k, v in val.items()) or "-"
        elif val is None:
            val = "-"
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicy", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("potential", nargs="?", default="-",
                    help="degree-4 potential such as 'w1 - 2*w2'; '-' reads stdin")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--tower-depth", type=int, default=4)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--batch", metavar="FILE", help="newline-delimited potentials")
    ap.add_argument("--other", help="second potential for equiv")
    ap.add_argument("--sigma", help="matrix [[a, b], [c, d]] for hdet")
    ap.add_argument("--point", help="point (p0:p1),(q0:q1) for tau")
    ap.add_argument("--element", help="element tested by member")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.batch:
        with open(args.batch) as fh:
            texts = [ln for ln in fh.read().splitlines() if ln.strip()]
    elif args.potential == "-":
        texts = [sys.stdin.read()]
    else:
        texts = [args.potential]
    status = 0
    for text in texts:
        report, code = run(args.command, text, args)
        if args.format == "json":
            print(json.dumps(report, sort_keys=True))
        else:
            print(render_text(report))
            if len(texts) > 1:
                print()
        status = max(status, code)
    return status


if __name__ == "__main__":
    sys.exit(main())
