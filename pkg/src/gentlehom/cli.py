"""Command line interface.

Exit codes: 0 success, 1 semantic failure (not gentle, disconnected,
unknown vertex, failed check), 2 parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .generator import GeneratorConfig, GeneratorError, gen_gentle
from .homdim import (
    gldim_via_polygons,
    gorenstein_projectives,
    injdim,
    pd_injective,
    pd_simple,
    resolution_of_injective,
    resolution_of_simple,
)
from .io import DisconnectedError, parse, serialize
from .presentation import GentlePresentation, NotGentleError, PresentationError, opposite
from .strings import top
from .surface import ag_invariant, surface_model, surface_stats
from .threads import forbidden_threads, permitted_threads

EXIT_OK, EXIT_SEMANTIC, EXIT_PARSE = 0, 1, 2


class CLIError(Exception):
    def __init__(self, message: str, code: int = EXIT_SEMANTIC):
        super().__init__(message)
        self.code = code


def _emit(args, text: str, obj) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text)


def _vertex(A: GentlePresentation, v: str) -> str:
    if not A.has_vertex(v):
        raise CLIError(f"unknown vertex {v!r}")
    return v


def _thread_json(th) -> dict:
    if th.is_trivial:
        return {"trivial": th.vertex, "length": 0}
    return {"arrows": list(th.arrows), "length": th.length}


def cmd_validate(A, args):
    _emit(args, f"gentle: {len(A.vertices)} vertices, {len(A.arrows)} arrows, {len(A.relations)} relations",
          {"valid": True, "vertices": len(A.vertices), "arrows": len(A.arrows),
           "relations": len(A.relations)})


def cmd_threads(A, args):
    perm = permitted_threads(A)
    finite, cycles = forbidden_threads(A)
    lines = ["permitted:"] + [f"  {th.label()} (length {th.length})" for th in perm]
    lines += ["forbidden:"] + [f"  {th.label()} (length {th.length})" for th in finite]
    lines += [f"  cycle {' '.join(c)} (length infinity)" for c in cycles]
    _emit(args, "\n".join(lines), {
        "permitted": [_thread_json(t) for t in perm],
        "forbidden_finite": [_thread_json(t) for t in finite],
        "infinite_cycles": [list(c) for c in cycles],
    })


def cmd_ag(A, args):
    ag = ag_invariant(A)
    _emit(args, str(ag), ag.to_json())


def cmd_surface(A, args):
    model = surface_model(A)
    stats = surface_stats(A)
    lines = [f"boundary components: {stats.boundary_count}, marked points: {stats.marked_total}, "
             f"arcs: {stats.arc_count}, polygons: {stats.polygon_count}, genus: {stats.genus}"]
    comps = []
    for b in model.boundary_components:
        polys = [model.polygons[i] for i in b.polygons]
        desc = ", ".join("{" + ",".join(p.arc_sides) + "} c=" + str(p.c_number) for p in polys)
        lines.append(f"  component {b.id}: {b.marked_point_count} marked points; {desc}")
        comps.append({
            "id": b.id,
            "marked_points": b.marked_point_count,
            "polygons": [{"arc_sides": list(p.arc_sides), "c": p.c_number.to_json()} for p in polys],
        })
    _emit(args, "\n".join(lines), {
        "boundary_count": stats.boundary_count, "marked_total": stats.marked_total,
        "arc_count": stats.arc_count, "polygon_count": stats.polygon_count,
        "genus": stats.genus, "components": comps,
    })


def cmd_gldim(A, args):
    d = gldim_via_polygons(A)
    _emit(args, str(d), d.to_json())


def cmd_injdim(A, args):
    d = injdim(A)
    _emit(args, str(d), d.to_json())


def cmd_gp(A, args):
    rep = gorenstein_projectives(A)
    lines = [f"projective: {' '.join('P(' + v + ')' for v in rep.projectives)}",
             f"nonprojective ({rep.count_by_formula}):"]
    lines += [f"  {w}  top {','.join(sorted(top(w)))}" for w in rep.nonprojectives]
    _emit(args, "\n".join(lines), {
        "projectives": list(rep.projectives),
        "nonprojectives": [{"word": str(w), "vertices": list(w.vertices)} for w in rep.nonprojectives],
        "count_by_formula": rep.count_by_formula,
    })


def cmd_resolve(A, args):
    if (args.simple is None) == (args.injective is None):
        raise CLIError("give exactly one of --simple or --injective")
    if args.simple is not None:
        lad = resolution_of_simple(A, _vertex(A, args.simple), args.max_terms)
    else:
        lad = resolution_of_injective(A, _vertex(A, args.injective), args.max_terms)
    lines = [f"{k}: " + " + ".join(f"P({v})" for v in d) for k, d in enumerate(lad.degrees)]
    lines.append(f"pd = {lad.pd}")
    if lad.period:
        lines.append("period: (" + ", ".join("+".join(d) for d in lad.period) + f") from degree {lad.period_start}")
    _emit(args, "\n".join(lines), {
        "degrees": [list(d) for d in lad.degrees],
        "terminates": lad.terminates,
        "pd": lad.pd.to_json(),
        "period": [list(d) for d in lad.period] if lad.period else None,
        "period_start": lad.period_start,
    })


def cmd_pd_table(A, args):
    rows = [(v, pd_simple(A, v), pd_injective(A, v)) for v in A.vertices]
    width = max(len(v) for v in A.vertices)
    lines = [f"{'v'.ljust(width)}  pd S(v)  pd I(v)"]
    lines += [f"{v.ljust(width)}  {str(s).ljust(7)}  {i}" for v, s, i in rows]
    _emit(args, "\n".join(lines), {
        "rows": [{"vertex": v, "pd_simple": s.to_json(), "pd_injective": i.to_json()} for v, s, i in rows]
    })


def cmd_check(A, args):
    from .oracle import check_equalities

    cap = None if args.cap == "auto" else int(args.cap)
    report = check_equalities(A, args.field, cap)
    text = "\n".join(str(c) for c in report.checks) if args.verbose else \
        "\n".join(str(c) for c in report.failures())
    summary = f"{sum(c.ok for c in report.checks)}/{len(report.checks)} checks agree over GF({args.field})"
    _emit(args, (text + "\n" if text else "") + summary, report.to_json())
    if not report.ok:
        raise CLIError("oracle disagreement", EXIT_SEMANTIC)


def cmd_opposite(A, args):
    B = opposite(A)
    _emit(args, serialize(B).rstrip("\n"), {
        "vertices": list(B.vertices),
        "arrows": [[a.id, a.source, a.target] for a in B.arrows],
        "relations": [list(r) for r in B.sorted_relations()],
    })


def cmd_gen(args):
    try:
        A = gen_gentle(GeneratorConfig(args.vertices, args.arrows, args.seed, not args.no_full_cycles))
    except (GeneratorError, ValueError) as exc:
        raise CLIError(str(exc))
    text = serialize(A)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


COMMANDS = {
    "validate": cmd_validate,
    "threads": cmd_threads,
    "ag": cmd_ag,
    "surface": cmd_surface,
    "gldim": cmd_gldim,
    "injdim": cmd_injdim,
    "gp": cmd_gp,
    "resolve": cmd_resolve,
    "pd-table": cmd_pd_table,
    "check": cmd_check,
    "opposite": cmd_opposite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gentlehom", description="Homological invariants of gentle algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "validate": "check gentleness", "threads": "list permitted and forbidden threads",
        "ag": "AG-invariant", "surface": "marked surface model", "gldim": "global dimension",
        "injdim": "self-injective dimension", "gp": "Gorenstein projective modules",
        "resolve": "projective resolution of a simple or injective module",
        "pd-table": "projective dimensions of simples and injectives",
        "check": "cross-check against linear algebra", "opposite": "opposite algebra",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name == "resolve":
            p.add_argument("--simple", metavar="V")
            p.add_argument("--injective", metavar="V")
            p.add_argument("--max-terms", type=int, default=12)
        if name == "check":
            p.add_argument("--field", type=int, choices=(2, 3), default=2)
            p.add_argument("--cap", default="auto", help="'auto' or an integer")
            p.add_argument("--verbose", action="store_true")
    g = sub.add_parser("gen", help="random gentle presentation")
    g.add_argument("--vertices", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--arrows", type=int, default=None)
    g.add_argument("--no-full-cycles", action="store_true")
    g.add_argument("--out", default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            cmd_gen(args)
            return EXIT_OK
        if args.command == "check" and args.cap != "auto" and not args.cap.isdigit():
            raise CLIError("--cap must be 'auto' or a non-negative integer", EXIT_PARSE)
        try:
            A = parse(args.file)
        except OSError as exc:
            raise CLIError(f"cannot read {args.file}: {exc.strerror}", EXIT_PARSE)
        COMMANDS[args.command](A, args)
        return EXIT_OK
    except PresentationError as exc:
        print(f"{args.file}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotGentleError as exc:
        print("not gentle:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_SEMANTIC
    except DisconnectedError as exc:
        print(f"disconnected: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
