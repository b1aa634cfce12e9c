"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 semantic failure
(validation error, violated relations, inconsistent solve).  Results go
to stdout, diagnostics to stderr.  ``--json`` emits a single document
with stable key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bott import bott
from .bundle import RelationError, cotangent, gabriel_decompose, solve_derived_arrows, tangent, validate
from .bundleio import BundleFormatError, load_rep, rep_to_dict, save_rep
from .cohomology import GModuleDecomposition, euler, h0, h_graded
from .geometry import build_geometry
from .quiver import quiver_window

USAGE_ERROR = 1
SEMANTIC_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _coords(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _UsageError(f"bad coordinate list {text!r}: expected e.g. '0,-1,2'")


def _levi(text: str) -> tuple:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _UsageError(f"bad levi list {text!r}: expected e.g. '1,3'")


def _fmt_weight(w) -> str:
    return ",".join(str(c) for c in w)


def _print_decomposition(dec: GModuleDecomposition, as_json: bool, out):
    for note in dec.notes:
        print(f"warning: {note}", file=sys.stderr)
    if as_json:
        doc = {
            "entries": [
                {"weight": list(e.weight), "mult": e.multiplicity, "dim": e.dimension}
                for e in dec.entries
            ],
            "total": dec.total_dimension,
        }
        print(json.dumps(doc), file=out)
        return
    for e in dec.entries:
        print(
            f"weight={_fmt_weight(e.weight)} mult={e.multiplicity} dim={e.dimension}",
            file=out,
        )
    print(f"total={dec.total_dimension}", file=out)


def _build_parser() -> _Parser:
    parser = _Parser(prog="homquiver", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bott", help="cohomology of an irreducible bundle")
    p.add_argument("type")
    p.add_argument("--levi", type=_levi, default=())
    p.add_argument("coords", type=int, nargs="+",
                   help="weight coordinates; put -- before negative values")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("quiver", help="finite forward window of the quiver")
    p.add_argument("type")
    p.add_argument("--levi", type=_levi, default=())
    p.add_argument("--center", type=_coords, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="validate a bundle file and its relations")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve", help="complete generating arrows to a full representation")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gabriel", help="interval decomposition of an A_m-type bundle")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("make", help="write a builder bundle to a file")
    p.add_argument("what", choices=["tangent", "cotangent"])
    p.add_argument("type")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("h0", help="global sections of a bundle file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("hgr", help="graded cohomology in one degree")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("euler", help="Euler characteristic of a bundle file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    return parser


def _load_checked(path):
    rep = load_rep(path)
    errors = validate(rep)
    if errors:
        raise _SemanticError("; ".join(errors))
    return rep


class _SemanticError(Exception):
    pass


def _geometry(type_name, levi=()):
    # a malformed Cartan type or Levi index is a parse problem, not a
    # semantic one
    try:
        return build_geometry(type_name, levi)
    except ValueError as exc:
        raise _UsageError(str(exc))


def _run(args, out) -> int:
    if args.command == "bott":
        geom = _geometry(args.type, args.levi)
        lam = tuple(args.coords)
        res = bott(geom, lam)
        if args.json:
            doc = (
                {"singular": True}
                if res.is_singular
                else {
                    "singular": False,
                    "degree": res.degree,
                    "weight": list(res.weight),
                    "dim": res.dimension,
                }
            )
            print(json.dumps(doc), file=out)
        elif res.is_singular:
            print("singular", file=out)
        else:
            print(
                f"degree={res.degree} weight={_fmt_weight(res.weight)} dim={res.dimension}",
                file=out,
            )
        return 0

    if args.command == "quiver":
        geom = _geometry(args.type, args.levi)
        window = quiver_window(geom, args.center, args.radius)
        if args.json:
            doc = {
                "vertices": [list(v) for v in window.vertices],
                "arrows": [
                    {
                        "from": list(a.source),
                        "root": list(a.root.simple),
                        "to": list(a.target),
                        "kind": a.kind,
                    }
                    for a in window.arrows
                ],
            }
            print(json.dumps(doc), file=out)
        else:
            for v in window.vertices:
                print(f"vertex {_fmt_weight(v)}", file=out)
            for a in window.arrows:
                print(
                    f"arrow {_fmt_weight(a.source)} -> {_fmt_weight(a.target)} "
                    f"root={_fmt_weight(a.root.simple)} kind={a.kind}",
                    file=out,
                )
        return 0

    if args.command == "check":
        rep = _load_checked(args.file)
        if rep.geometry.is_borel:
            from .bundle import check_relations

            violated = check_relations(rep)
            if violated:
                for inst in violated:
                    print(
                        f"violated: at ({_fmt_weight(inst.source)}) roots "
                        f"({_fmt_weight(inst.beta.simple)}) ({_fmt_weight(inst.gamma.simple)}) "
                        f"N={inst.coefficient}",
                        file=sys.stderr,
                    )
                raise _SemanticError(f"{len(violated)} violated relation instance(s)")
        else:
            print(
                "warning: non-Borel parabolic, relations unchecked",
                file=sys.stderr,
            )
        if args.json:
            print(json.dumps({"ok": True}), file=out)
        else:
            print("ok", file=out)
        return 0

    if args.command == "solve":
        rep = _load_checked(args.file)
        completed = solve_derived_arrows(rep)
        save_rep(completed, args.output)
        if args.json:
            print(json.dumps({"ok": True, "output": args.output}), file=out)
        else:
            print(f"solved: wrote {args.output}", file=out)
        return 0

    if args.command == "gabriel":
        rep = _load_checked(args.file)
        dec = gabriel_decompose(rep)
        chain = dec.path.vertices
        if args.json:
            doc = {
                "direction": list(dec.path.direction.simple)
                if dec.path.direction
                else None,
                "path": [list(v) for v in chain],
                "intervals": [
                    {"from": list(chain[i]), "to": list(chain[j]), "mult": m}
                    for (i, j), m in dec.intervals
                ],
            }
            print(json.dumps(doc), file=out)
        else:
            direction = (
                _fmt_weight(dec.path.direction.simple) if dec.path.direction else "-"
            )
            print(f"direction={direction}", file=out)
            for (i, j), m in dec.intervals:
                print(
                    f"interval {_fmt_weight(chain[i])} .. {_fmt_weight(chain[j])} "
                    f"mult={m}",
                    file=out,
                )
        return 0

    if args.command == "make":
        geom = _geometry(args.type)
        rep = tangent(geom) if args.what == "tangent" else cotangent(geom)
        save_rep(rep, args.output)
        if args.json:
            print(json.dumps({"ok": True, "output": args.output}), file=out)
        else:
            print(f"wrote {args.output}", file=out)
        return 0

    if args.command == "h0":
        rep = _load_checked(args.file)
        _print_decomposition(h0(rep), args.json, out)
        return 0

    if args.command == "hgr":
        rep = _load_checked(args.file)
        _print_decomposition(h_graded(rep, args.degree), args.json, out)
        return 0

    if args.command == "euler":
        rep = _load_checked(args.file)
        value = euler(rep)
        if args.json:
            print(json.dumps({"euler": value}), file=out)
        else:
            print(f"euler={value}", file=out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return _run(args, out)
    except (_UsageError, BundleFormatError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except RelationError as exc:
        for inst in exc.instances:
            print(
                f"violated: at ({_fmt_weight(inst.source)}) roots "
                f"({_fmt_weight(inst.beta.simple)}) ({_fmt_weight(inst.gamma.simple)}) "
                f"N={inst.coefficient}",
                file=sys.stderr,
            )
        print(f"error: {exc}", file=sys.stderr)
        return SEMANTIC_ERROR
    except (_SemanticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SEMANTIC_ERROR


if __name__ == "__main__":
    sys.exit(main())
