"""Command line: info, enumerate, locate, verify, deform, render.

Exit status 0 on success, 1 when a check fails, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import serialize as ser
from .deformed import (InadmissibleDeformationError, abs_det_identity, deformed_locate,
                       make_deformation, parse_matrix)
from .exactgeo import DimensionError
from .locate import locate_details
from .render import RenderError, parse_window, render_svg
from .rootsys import InvalidRootSystemError, build_root_system
from .tiles import contains, tile_of
from .verify import RANK2_ONLY, SUITES, run_suite
from .weyl import GroupTooLargeError, InvariantViolation, enumerate_weyl

VALUE_FLAGS = {"--type", "--point", "--samples", "--radius", "--seed", "--window", "--mode",
               "--S", "--deform", "--suite", "--out"}
_NEGATIVE = re.compile(r"^-[0-9./]")


class UsageError(Exception):
    pass


def _attach_negative_values(argv: list[str]) -> list[str]:
    """``--window -3:3`` -> ``--window=-3:3`` so argparse does not read ``-3:3`` as a flag."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def parse_point(text: str, rank: int) -> tuple:
    try:
        pt = tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse point {text!r}; use comma-separated rationals like 1/2,-3") from None
    if len(pt) != rank:
        raise UsageError(f"point has {len(pt)} coordinates, expected {rank}")
    return pt


def _out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def _matrix_arg(args, rank):
    text = args.S if args.S is not None else getattr(args, "deform", None)
    if text is None:
        return None
    try:
        return parse_matrix(text, rank)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad S {text!r}: {exc}") from None


# --- commands ---------------------------------------------------------------

def cmd_info(args) -> int:
    rs = build_root_system(args.type)
    info = {"type": rs.label, "rank": rs.rank, "weyl_order": rs.weyl_order}
    try:
        W = enumerate_weyl(rs, allow_large=args.allow_large)
        info["regular_count"] = sum(1 for w in W if w.is_regular)
    except GroupTooLargeError:
        info["regular_count"] = None
    info.update({"marks": list(rs.marks), "dual_coxeter": rs.dual_coxeter,
                 "highest_root": list(rs.highest_root.coeffs),
                 "alcove_vertices": ser.matrix(rs.alcove_vertices),
                 "base_point": ser.vector(rs.base_point),
                 "gram": ser.matrix(rs.gram)})
    _out(ser.dumps(info), args.out)
    return 0


def cmd_enumerate(args) -> int:
    rs = build_root_system(args.type)
    W = enumerate_weyl(rs, allow_large=args.allow_large)
    elems = []
    for w in W:
        elems.append({"matrix": ser.matrix(w.matrix), "word": list(w.word),
                      "det_id_minus": ser.rational(w.det_id_minus()), "regular": w.is_regular})
    _out(ser.dumps({"type": rs.label, "order": len(W),
                    "regular_count": sum(e["regular"] for e in elems), "elements": elems}), args.out)
    return 0


def cmd_locate(args) -> int:
    rs = build_root_system(args.type)
    if args.point is None:
        raise UsageError("locate needs --point")
    xi = parse_point(args.point, rs.rank)
    S = _matrix_arg(args, rs.rank)
    if S is None:
        loc = locate_details(rs, xi)
        replay = contains(tile_of(loc.element), xi)
        doc = {"type": rs.label, "point": ser.vector(xi), "element": ser.element(loc.element),
               "tile_dim": loc.tile_dim, "stabilizer": list(loc.stabilizer),
               "contains_check": replay}
        _out(ser.dumps(doc), args.out)
        return 0 if replay else 1
    d = make_deformation(rs, S, assert_path=args.assert_path)
    loc = deformed_locate(d, xi)
    doc = {"type": rs.label, "point": ser.vector(xi), "S": ser.matrix(d.S),
           "certificate": d.admissibility_certificate,
           "open": None if loc.open is None else ser.element(loc.open),
           "on_boundary": loc.on_boundary, "closed": [ser.element(w) for w in loc.closed]}
    _out(ser.dumps(doc), args.out)
    return 0 if loc.closed else 1


def _suite_params(args, rs) -> dict:
    params = {}
    if args.samples is not None:
        params["samples"] = args.samples
    if args.radius is not None:
        params["radius"] = Fraction(args.radius)
    if args.seed is not None:
        params["seed"] = args.seed
    if args.window is not None:
        try:
            params["window"] = int(args.window)
        except ValueError:
            raise UsageError("verify --window takes an integer radius of coroot coordinates") from None
    S = _matrix_arg(args, rs.rank)
    if S is not None:
        params["S"] = S
    if args.assert_path:
        params["assert_path"] = True
    return params


def cmd_verify(args) -> int:
    rs = build_root_system(args.type)
    name = args.suite or "all"
    params = _suite_params(args, rs)
    if name == "all":
        names = [n for n in SUITES if n not in RANK2_ONLY or rs.rank == 2]
    elif name in SUITES:
        if name in RANK2_ONLY and rs.rank != 2:
            raise UsageError(f"suite {name} needs a rank-2 type")
        names = [name]
    else:
        raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    reports = [run_suite(n, rs, **params) for n in names]
    doc = reports[0].to_dict() if len(reports) == 1 else {
        "system": rs.label, "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports]}
    _out(ser.dumps(doc, default=str), args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_deform(args) -> int:
    rs = build_root_system(args.type)
    S = _matrix_arg(args, rs.rank)
    if S is None:
        raise UsageError("deform needs --S")
    try:
        cert = make_deformation(rs, S, assert_path=args.assert_path).admissibility_certificate
    except InadmissibleDeformationError as exc:
        cert, reason = None, str(exc)
    else:
        reason = None
    rep = abs_det_identity(rs, S)
    doc = {"type": rs.label, "S": ser.matrix(S), "admissible": cert is not None,
           "certificate": cert, "reason": reason, "sum_abs_det": ser.rational(rep.total),
           "order": rep.order, "identity_holds": rep.total == rep.order,
           "all_positive": rep.all_positive,
           "rows": [{"word": list(word), "det_S_minus_w": ser.rational(a),
                     "det_id_minus_S_winv": ser.rational(b)} for word, a, b in rep.rows]}
    _out(ser.dumps(doc), args.out)
    return 0 if rep.holds else 1


def cmd_render(args) -> int:
    rs = build_root_system(args.type)
    if rs.rank != 2:
        raise UsageError(f"render needs a rank-2 type, {rs.label} has rank {rs.rank}")
    window = parse_window(args.window or "-3:3")
    mode = args.mode or "tiling"
    S = _matrix_arg(args, rs.rank)
    svg = render_svg(rs, mode, window, S, assert_path=args.assert_path)
    _out(svg, args.out)
    return 0


COMMANDS = {"info": cmd_info, "enumerate": cmd_enumerate, "locate": cmd_locate,
            "verify": cmd_verify, "deform": cmd_deform, "render": cmd_render}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weyltiles",
                                description="Exact tilings by affine Weyl group elements.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--type", required=True, help="root system, e.g. G2")
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--allow-large", action="store_true", help="lift the |W| enumeration cap")
        if name in ("locate", "verify", "deform", "render"):
            sp.add_argument("--S", help='deformation matrix, rows split by ";" e.g. "1/2,0;0,1/2"')
            sp.add_argument("--assert-path", action="store_true",
                            help="accept S without a norm certificate")
        if name == "locate":
            sp.add_argument("--point", help="comma-separated rationals")
            sp.add_argument("--deform", help="same as --S")
        if name == "verify":
            sp.add_argument("--suite", help=f"all or one of: {', '.join(SUITES)}")
            sp.add_argument("--samples", type=int)
            sp.add_argument("--radius")
            sp.add_argument("--seed", type=int)
            sp.add_argument("--window", help="affine window radius for symmetry and base-point suites")
        if name == "render":
            sp.add_argument("--mode", choices=["tiling", "X", "stiefel", "deformed"])
            sp.add_argument("--window", help="lo:hi in drawing coordinates (default -3:3)")
    return p


def main(argv: list[str] | None = None) -> int:
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InvalidRootSystemError, InadmissibleDeformationError, GroupTooLargeError,
            RenderError, DimensionError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
