"""Command-line interface.

Subcommands: report (full document for one field), breaks (break table),
herbrand (transition breakpoints), mass (cyclic mass report), verify (run
the invariant checks). Output is deterministic; --format json emits the
stable schema (schema_version "1") with rationals as
{"num": "<decimal>", "den": "<decimal>"} so consumers never need bignum
JSON numbers for exact values.

Exit codes: 0 success, 1 invalid parameters (one-line diagnostic on
stderr), 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import verify as verify_mod
from .breaks import b_upper, break_sequence
from .filtration import (
    FieldParams,
    HerbrandMap,
    different_exponent_closed,
    discriminant_exponent,
    herbrand_phi,
    herbrand_psi,
    index_table,
    lower_filtration,
    unit_space_model,
    upper_filtration,
    v_space_model,
)
from .mass import MassReport, cyclic_mass
from .rationals import decimal_string

__all__ = ["run", "main"]

SCHEMA_VERSION = "1"


def _rat(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _rat_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _params_doc(params: FieldParams) -> dict[str, Any]:
    return {
        "p": params.p,
        "f": params.f,
        "q": params.q,
        "characteristic": params.characteristic,
        "e": params.e,
        "zeta_in_field": params.zeta_in_field,
        "e1": _rat(params.e1) if params.characteristic == 0 else None,
        "s": params.s if params.regular else None,
    }


def _mass_doc(report: MassReport) -> dict[str, Any]:
    return {
        "per_break": [
            {"i": i, "b_upper": b, "count": count, "contribution": _rat(contribution)}
            for i, b, count, contribution in report.per_break
        ],
        "tres_ramifiee": (
            None
            if report.tres_ramifiee is None
            else {
                "count": report.tres_ramifiee[0],
                "contribution": _rat(report.tres_ramifiee[1]),
            }
        ),
        "total": _rat(report.total),
        "fraction_of_serre_total": _rat(report.fraction_of_serre_total),
    }


def _space_doc(space) -> dict[str, Any]:
    return {
        "label": space.label,
        "total_dim": space.total_dim,
        "jumps": [{"index": j, "codim": c} for j, c in space.jumps],
    }


def _herbrand_doc(m: HerbrandMap) -> dict[str, Any]:
    return {
        "breakpoints": [{"x": _rat(x), "y": _rat(y)} for x, y in m.breakpoints],
        "slopes": [_rat(s) for s in m.slopes],
    }


def _parse_params(args: argparse.Namespace) -> FieldParams:
    characteristic = 0 if args.char == "0" else args.p
    if characteristic == 0:
        if args.e is None:
            raise ValueError("e must be a positive integer in characteristic 0")
        if args.m is not None:
            raise ValueError("m applies to characteristic p only")
        zeta: Optional[bool]
        if args.zeta is None:
            zeta = True if args.p == 2 else None
            if zeta is None:
                raise ValueError("zeta_in_field must be given in characteristic 0")
        else:
            zeta = args.zeta == "in"
        return FieldParams(p=args.p, f=args.f, e=args.e, zeta_in_field=zeta)
    if args.e is not None:
        raise ValueError("e is undefined in characteristic p")
    if args.zeta == "out":
        raise ValueError("characteristic p fixes zeta_in_field by convention")
    return FieldParams(p=args.p, f=args.f, characteristic=args.p)


def _cmd_report(args: argparse.Namespace, out) -> int:
    params = _parse_params(args)
    upper = upper_filtration(params, max_index=args.max_index)
    char_p = params.characteristic != 0
    if char_p:
        lower = lower_filtration(params, max_index=args.m) if args.m else None
        space = unit_space_model(params, level=args.m or b_upper(args.max_index, params.p))
        table = None
        different = None
        discriminant = None
    else:
        lower = lower_filtration(params)
        space = unit_space_model(params) if params.zeta_in_field else v_space_model(params)
        table = index_table(params) if params.regular else None
        different = different_exponent_closed(params) if params.regular else None
        discriminant = discriminant_exponent(params) if params.regular else None
    report = cyclic_mass(params, display_rows=args.max_index)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "params": _params_doc(params),
        "upper_breaks": list(upper.locations),
        "lower_breaks": list(lower.locations) if lower is not None else None,
        "codimensions": list(upper.codims),
        "index_table": (
            None
            if table is None
            else [{"lo": lo, "hi": hi, "index": idx} for lo, hi, idx in table]
        ),
        "different_exponent": different,
        "discriminant_exponent": discriminant,
        "v_space": _space_doc(space),
        "mass": _mass_doc(report),
    }
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    w = out.write
    w("field parameters\n")
    w(f"  p = {params.p}  f = {params.f}  q = {params.q}\n")
    if char_p:
        w(f"  characteristic = {params.p} (equal characteristic)\n")
    else:
        zeta = "in" if params.zeta_in_field else "out"
        w(f"  characteristic = 0  e = {params.e}  zeta {zeta}\n")
        w(f"  e1 = {_rat_text(params.e1)}")
        if params.regular:
            w(f"  s = {params.s}")
        w("\n")
    trunc = " (truncated)" if upper.truncated else ""
    w(f"upper breaks{trunc}: {', '.join(str(x) for x in upper.locations)}\n")
    if lower is not None:
        w(f"lower breaks: {', '.join(str(x) for x in lower.locations)}\n")
    else:
        w("lower breaks: (pass --m to pick a finite quotient)\n")
    w(f"codimensions: {', '.join(str(c) for c in upper.codims)}\n")
    if table is not None:
        rendered = []
        for lo, hi, idx in table:
            if hi is None:
                rendered.append(f"]{lo}, oo[ -> {idx}")
            elif lo == 0:
                rendered.append(f"[0, {hi}] -> {idx}")
            else:
                rendered.append(f"]{lo}, {hi}] -> {idx}")
        w("index table: " + " ; ".join(rendered) + "\n")
    if different is not None:
        w(f"different exponent: {different}\n")
        w(f"discriminant exponent: {discriminant}\n")
    jumps = ", ".join(f"{j}:{c}" for j, c in space.jumps)
    w(f"space model {space.label} (dim {space.total_dim}) jumps index:codim = {jumps}\n")
    _write_mass_text(report, w)
    return 0


def _write_mass_text(report: MassReport, w) -> None:
    w("cyclic mass\n")
    for i, b, count, contribution in report.per_break:
        w(
            f"  break {b} (i = {i}): {count} extensions, "
            f"contribution {_rat_text(contribution)}\n"
        )
    if report.tres_ramifiee is not None:
        count, contribution = report.tres_ramifiee
        w(f"  deepest break: {count} extensions, contribution {_rat_text(contribution)}\n")
    char_p = report.params.characteristic != 0
    note = " (exact value of the full series)" if char_p else ""
    w(
        f"  total = {_rat_text(report.total)} ~ {decimal_string(report.total)}{note}\n"
    )
    w(f"  fraction of degree-p total: {_rat_text(report.fraction_of_serre_total)}\n")


def _cmd_breaks(args: argparse.Namespace, out) -> int:
    count = args.e if args.e is not None else args.max_index
    if count < 1:
        raise ValueError("need at least one break index")
    q = args.p**args.f
    seq = break_sequence(args.p, q, count)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "p": seq.p,
            "q": seq.q,
            "rows": [
                {"i": i, "a": a, "b_upper": bu, "b_lower": bl}
                for i, a, bu, bl in seq.entries
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    out.write(f"break table for p = {seq.p}, q = {seq.q}\n")
    out.write("    i    a(i)    b_upper    b_lower\n")
    for i, a, bu, bl in seq.entries:
        out.write(f"{i:5d}   {a:5d}   {bu:8d}   {bl}\n")
    return 0


def _cmd_herbrand(args: argparse.Namespace, out) -> int:
    params = _parse_params(args)
    if params.characteristic == 0:
        psi = herbrand_psi(upper_filtration(params))
        phi = herbrand_phi(lower_filtration(params))
    else:
        if args.m is None:
            raise ValueError("characteristic p needs --m to pick a finite quotient")
        phi = herbrand_phi(lower_filtration(params, max_index=args.m))
        psi = phi.inverse()
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "params": _params_doc(params),
            "psi": _herbrand_doc(psi),
            "phi": _herbrand_doc(phi),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    for name, m in (("psi (upper -> lower)", psi), ("phi (lower -> upper)", phi)):
        pts = ", ".join(f"({x}, {y})" for x, y in m.breakpoints)
        slopes = ", ".join(str(s) for s in m.slopes)
        out.write(f"{name}\n  breakpoints: {pts}\n  slopes: {slopes}\n")
    return 0


def _cmd_mass(args: argparse.Namespace, out) -> int:
    params = _parse_params(args)
    report = cyclic_mass(params, display_rows=args.max_index)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "params": _params_doc(params),
            "mass": _mass_doc(report),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    _write_mass_text(report, out.write)
    return 0


def _cmd_verify(args: argparse.Namespace, out) -> int:
    ok = verify_mod.run_all(write=lambda line: out.write(line + "\n"))
    return 0 if ok else 2


def _field_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="residue characteristic")
    sub.add_argument("--f", type=int, default=1, help="residual degree (default 1)")
    sub.add_argument(
        "--char", choices=("0", "p"), default="0", help="field characteristic"
    )
    sub.add_argument("--e", type=int, help="ramification index (characteristic 0)")
    sub.add_argument(
        "--zeta",
        choices=("in", "out"),
        help="is a primitive p-th root of unity in the field",
    )
    sub.add_argument(
        "--m", type=int, help="finite-quotient level for characteristic p"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramify",
        description="Exact ramification filtrations and degree-p mass data for local fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, with_field in (
        ("report", _cmd_report, True),
        ("breaks", _cmd_breaks, False),
        ("herbrand", _cmd_herbrand, True),
        ("mass", _cmd_mass, True),
        ("verify", _cmd_verify, False),
    ):
        s = sub.add_parser(name)
        s.set_defaults(fn=fn)
        if with_field:
            _field_flags(s)
        elif name == "breaks":
            s.add_argument("--p", type=int, required=True)
            s.add_argument("--f", type=int, default=1)
            s.add_argument("--e", type=int, help="number of break indices to list")
        if name != "verify":
            s.add_argument(
                "--max-index",
                type=int,
                default=16,
                dest="max_index",
                help="display/truncation bound for infinite tables (default 16)",
            )
            s.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold those into code 1.
        return 0 if exc.code == 0 else 1
    try:
        return args.fn(args, out)
    except (ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
