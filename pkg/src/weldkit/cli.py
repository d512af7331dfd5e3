"""Command-line interface: ``weldkit <command> ...``.

Diagrams are given inline (``"O1+ U2+ ..."``), as a file path, or ``-`` for
standard input. Exit status: 0 on success, 1 on usage or data errors, 2 when
``--strict`` is given and a verdict is Unknown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, families, moves
from .errors import WeldkitError
from .gaussdiag import format_code, parse, serialize, weld_set
from .grouppres import (
    abelianization,
    alexander_polynomial,
    coloring_count,
    dihedral_nontriviality,
    tietze_simplify,
    wirtinger,
)

DEFAULT_BUDGET = 10**6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class _Failure(Exception):
    pass


def _read_diagram(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg
    return parse(text.strip())


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("WELDKIT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise _Failure(f"WELDKIT_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _labels(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise _Failure(f"bad crossing list {text!r}") from None


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


# --- diagram commands ---------------------------------------------------------


def cmd_parse(args):
    d = _read_diagram(args.diagram)
    payload = {
        "code": format_code(d),
        "canonical": serialize(d),
        "crossings": d.crossing_count,
        "signs": {str(c): d.signs[c] for c in d.crossings},
    }
    _emit(args, payload, f"{format_code(d)}\ncrossings: {d.crossing_count}")


def cmd_canon(args):
    d = _read_diagram(args.diagram)
    _emit(args, {"canonical": serialize(d)}, serialize(d))


def cmd_weld(args):
    d = weld_set(_read_diagram(args.diagram), _labels(args.crossings))
    payload = {"code": format_code(d), "welded": list(d.welded_history)}
    _emit(args, payload, format_code(d))


def cmd_simplify(args):
    rep = moves.simplify(_read_diagram(args.diagram), _budget(args))
    lines = [
        f"result: {serialize(rep.result) or '(empty)'}",
        f"crossings: {rep.result.crossing_count}",
        f"states explored: {rep.states_explored}",
        f"budget exhausted: {str(rep.budget_exhausted).lower()}",
        "trace: "
        + (" ".join(f"{m.kind}@{','.join(map(str, m.location))}" for m in rep.trace) or "-"),
    ]
    _emit(args, rep.to_json(), "\n".join(lines))


def cmd_descending(args):
    b = moves.is_descending(_read_diagram(args.diagram))
    _emit(args, {"basepoint": b}, "none" if b is None else f"basepoint {b}")


def cmd_warping(args):
    d = _read_diagram(args.diagram)
    if args.basepoint is not None:
        orient = analysis.REVERSED if args.reversed else analysis.FORWARD
        v = analysis.warping_degree_at(d, args.basepoint, orient)
        _emit(args, {"basepoint": args.basepoint, "orientation": orient, "warping": v}, str(v))
        return
    fwd = analysis.warping_profile(d, analysis.FORWARD)
    rev = analysis.warping_profile(d, analysis.REVERSED)
    dd, drev = min(fwd), min(rev)
    payload = {"d": dd, "d_reversed": drev, "forward": fwd, "reversed": rev}
    text = f"d(D) = {dd}\nd(-D) = {drev}\nforward:  {fwd}\nreversed: {rev}"
    _emit(args, payload, text)


def cmd_verdict(args):
    d = _read_diagram(args.diagram)
    v = analysis.triviality_verdict(d, _budget(args), args.m_max)
    _emit(args, v.to_json(), str(v))
    if args.strict and v.status == analysis.UNKNOWN:
        return 2
    return 0


def cmd_uw(args):
    b = analysis.welded_unknotting_bounds(_read_diagram(args.diagram), _budget(args))
    text = f"{b.lower} <= u_w <= {b.upper}"
    if b.unresolved_subsets:
        text += f"  ({b.unresolved_subsets} unresolved subsets)"
    _emit(args, b.to_json(), text)


# --- group commands -------------------------------------------------------------


def cmd_group(args):
    d = _read_diagram(args.diagram)
    p = wirtinger(d)
    what = args.what
    if what == "wirtinger":
        _emit(args, {**p.to_json(), "text": str(p)}, str(p))
    elif what == "tietze":
        q = tietze_simplify(p, _budget(args))
        _emit(args, {**q.to_json(), "text": str(q)}, str(q))
    elif what == "abelian":
        divs = abelianization(p)
        free = divs.count(0)
        tors = [x for x in divs if x not in (0, 1)]
        parts = ["Z"] * free + [f"Z/{x}" for x in tors]
        _emit(args, {"divisors": divs, "free_rank": free}, " x ".join(parts) or "1")
    elif what == "alexander":
        delta = alexander_polynomial(p)
        _emit(args, {"polynomial": str(delta), "coefficients": delta.to_list()}, str(delta))
    elif what == "colorings":
        if args.m is None:
            m = dihedral_nontriviality(d, args.m_max)
            _emit(args, {"smallest_modulus": m}, "none" if m is None else f"smallest modulus {m}")
        else:
            r = coloring_count(d, args.m)
            text = f"total {r.total_count}, nontrivial {str(r.nontrivial_exists).lower()}"
            _emit(args, r.to_json(), text)


# --- families, tables, catalog -----------------------------------------------------


def cmd_family(args):
    if args.weld_one and args.weld_two:
        raise _Failure("--weld-one and --weld-two are exclusive")
    if args.kind == "torus":
        if args.weld_two:
            if args.m1 is None:
                raise _Failure("--weld-two needs --m1")
            d = families.torus_welded_two(args.n, args.m1)
        elif args.weld_one:
            d = families.torus_welded_one(args.n)
        else:
            d = families.torus_2q(args.n)
    else:
        if args.weld_two:
            d = families.twist_welded_two(args.n)
        elif args.weld_one:
            d = families.twist_welded_one(args.n)
        else:
            d = families.twist(args.n)
    _emit(args, {"code": format_code(d), "welded": list(d.welded_history)}, format_code(d))


def _catalog(args):
    return families.catalog_load(args.catalog)


def cmd_table(args):
    sizes = tuple(_labels(args.sizes))
    if not sizes or any(k not in (1, 2, 3) for k in sizes):
        raise _Failure("--sizes must be drawn from 1,2,3")
    rep = analysis.table_6crossings(_catalog(args), sizes, _budget(args))
    if args.json:
        print(json.dumps(rep.to_json()))
    else:
        sys.stdout.write(rep.to_text())


def cmd_catalog(args):
    entries = _catalog(args)
    if args.what == "list":
        if args.json:
            print(json.dumps([e.to_json() for e in entries]))
        else:
            for e in entries:
                print(f"{e.name:5} {serialize(e.diagram)}")
        return
    by_name = families.catalog_by_name(entries)
    if args.name not in by_name:
        raise _Failure(f"no catalog entry named {args.name!r}")
    e = by_name[args.name]
    fp = e.fingerprint
    text = "\n".join(
        [
            f"name: {e.name}",
            f"code: {serialize(e.diagram)}",
            f"unknotting number: {e.known_unknotting_number}",
            "colorings: " + ", ".join(f"m={m}: {c}" for m, c in sorted(fp.colorings.items())),
            "alexander: " + " ".join(map(str, fp.alexander)),
        ]
    )
    _emit(args, e.to_json(), text)


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--budget", type=int, help="search budget (default 10^6 or $WELDKIT_BUDGET)"
    )
    common.add_argument("--catalog", help="catalog JSON file (default: bundled)")

    ap = _Parser(prog="weldkit", description="Welded knot diagrams: moves, groups, verdicts.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def diagram_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("diagram", help="Gauss code, file path, or - for stdin")
        p.set_defaults(func=func)
        return p

    diagram_cmd("parse", cmd_parse, "validate and echo a Gauss code")
    diagram_cmd("canon", cmd_canon, "canonical form")
    p = diagram_cmd("weld", cmd_weld, "weld crossings")
    p.add_argument("crossings", help="labels, e.g. 1,3")
    diagram_cmd("simplify", cmd_simplify, "search for a smaller diagram")
    diagram_cmd("descending", cmd_descending, "descending basepoint, if any")
    p = diagram_cmd("warping", cmd_warping, "warping degrees")
    p.add_argument("--basepoint", type=int)
    p.add_argument("--reversed", action="store_true")
    p = diagram_cmd("verdict", cmd_verdict, "Unknot / Knotted / Unknown")
    p.add_argument("--strict", action="store_true", help="exit 2 on Unknown")
    p.add_argument("--m-max", type=int, default=21)
    diagram_cmd("uw", cmd_uw, "welded unknotting number bounds")

    g = sub.add_parser("group", help="knot group computations")
    gsub = g.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for what in ("wirtinger", "tietze", "abelian", "alexander", "colorings"):
        p = gsub.add_parser(what, parents=[common])
        p.add_argument("diagram")
        if what == "colorings":
            p.add_argument(
                "--m", type=int, help="modulus; omit for the smallest nontrivial odd one"
            )
            p.add_argument("--m-max", type=int, default=21)
        p.set_defaults(func=cmd_group, what=what)

    f = sub.add_parser("family", help="standard family diagrams")
    fsub = f.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for kind in ("torus", "twist"):
        p = fsub.add_parser(kind, parents=[common])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--weld-one", action="store_true")
        p.add_argument("--weld-two", action="store_true")
        if kind == "torus":
            p.add_argument("--m1", type=int)
        p.set_defaults(func=cmd_family, kind=kind)

    t = sub.add_parser("table", help="weld tables")
    tsub = t.add_subparsers(dest="which", required=True, parser_class=_Parser)
    p = tsub.add_parser("six", parents=[common], help="six-crossing knots")
    p.add_argument("--sizes", default="1,2,3")
    p.set_defaults(func=cmd_table)

    c = sub.add_parser("catalog", help="bundled knot catalog")
    csub = c.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = csub.add_parser("list", parents=[common])
    p.set_defaults(func=cmd_catalog, what="list")
    p = csub.add_parser("show", parents=[common])
    p.add_argument("name")
    p.set_defaults(func=cmd_catalog, what="show")
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except (WeldkitError, _Failure, OSError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"weldkit {args.command}: {msg}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
