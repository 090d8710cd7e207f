"""Command-line front end.

Knot arguments accept a catalog name (``4_1``, ``3_1*`` for the mirror),
inline PD text (``"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"``), JSON, or ``@file``.
Exit codes: 0 success, 1 validation error, 2 oracle infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance, degrees
from .cabling import cable_diagram
from .diagram import Diagram, DiagramError, mirror, parse_pd
from .jones import DEFAULT_CAP, OracleInfeasible, colored_jones
from .laurent import degree_span
from .states import state_graph, stats
from .verdict import ReportError, cable_report, connect_sum_report


def load_knot(arg: str) -> Diagram:
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise DiagramError(f"cannot read knot file {path}: {exc.strerror}") from None
        return parse_pd(text)
    if arg.endswith("*"):
        return mirror(load_knot(arg[:-1]))
    return parse_pd(arg)


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        print("\n".join(lines))


def cmd_adequacy(args) -> int:
    d = load_knot(args.knot)
    st = stats(d)
    ga, gb = state_graph(d, "A"), state_graph(d, "B")
    payload = {"knot": args.knot, "stats": st.to_dict(), "G_A": ga.to_dict(), "G_B": gb.to_dict()}
    lines = [
        f"knot {args.knot}: c={st.c} c+={st.c_plus} c-={st.c_minus} wr={st.wr}",
        f"v_A={st.v_A} v_B={st.v_B}",
        f"A-adequate={st.a_adequate} B-adequate={st.b_adequate}",
        f"G_A: {ga.n_circles} circles, {len(ga.edges)} edges, one-edged loop={ga.one_edged_loop}",
        f"G_B: {gb.n_circles} circles, {len(gb.edges)} edges, one-edged loop={gb.one_edged_loop}",
    ]
    _emit(payload, args.json, lines)
    return 0


def cmd_jones(args) -> int:
    d = load_knot(args.knot)
    poly = colored_jones(d, args.color, cap=args.max_bracket_crossings, threads=args.threads)
    lo, hi, span4 = degree_span(poly)
    payload = {
        "knot": args.knot, "color": args.color,
        "terms": {str(e): c for e, c in poly.terms.items()},
        "d_minus": str(lo), "d_plus": str(hi), "span4": span4,
    }
    lines = [f"J({args.color}) = {poly.pretty()}", f"d- = {lo}  d+ = {hi}  4d+ - 4d- = {span4}"]
    _emit(payload, args.json, lines)
    return 0


def cmd_cable(args) -> int:
    d = load_knot(args.knot)
    cab, spec = cable_diagram(d, args.p, args.q)
    if args.emit_pd:
        print(cab.to_text())
        return 0
    st = stats(cab)
    payload = {"knot": args.knot, "p": spec.p, "q": spec.q, "t": spec.t,
               "crossings": cab.c, "components": cab.components, "stats": st.to_dict(),
               "pd": cab.to_text()}
    lines = [
        f"D_({spec.p},{spec.q}) of {args.knot}: t={spec.t}, {cab.c} crossings, {cab.components} component(s)",
        f"c+={st.c_plus} c-={st.c_minus} wr={st.wr} v_A={st.v_A} v_B={st.v_B} "
        f"A-adequate={st.a_adequate} B-adequate={st.b_adequate}",
    ]
    _emit(payload, args.json, lines)
    return 0


def _report_lines(r) -> list[str]:
    return [
        f"{r.knot} ({r.p},{r.q})-cable: {r.case}",
        f"lower bound: {r.lower_bound}",
        f"exact: {r.exact if r.exact is not None else 'unknown'}",
        f"witness diagram crossings: {r.constructed_diagram_crossings}",
        f"adequacy: {r.adequacy_verdict}  admissible: {r.admissible}",
        f"citations: {', '.join(r.citations) or '-'}",
    ]


def cmd_report(args) -> int:
    d = load_knot(args.knot)
    r = cable_report(d, args.p, args.q, name=args.knot)
    _emit(r.to_dict(), args.json, _report_lines(r))
    return 0


def cmd_sum(args) -> int:
    d, d2 = load_knot(args.knot), load_knot(args.knot2)
    r = connect_sum_report(d, args.p, d2, name=args.knot, name2=args.knot2)
    lines = [f"{r.knot}: exact c = {r.exact}", f"witness diagram crossings: {r.constructed_diagram_crossings}",
             f"adequacy: {r.adequacy_verdict}", f"citations: {', '.join(r.citations)}"]
    _emit(r.to_dict(), args.json, lines)
    return 0


def cmd_selftest(args) -> int:
    ok = True
    for number in range(1, len(acceptance.CRITERIA) + 1):
        res = acceptance.run_check(number)
        print(res.line(), flush=True)
        ok &= res.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cablecross", description="Crossing numbers of cables of adequate knots")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adequacy", help="diagram stats and state graphs")
    p.add_argument("knot")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_adequacy)

    p = sub.add_parser("jones", help="unreduced colored Jones polynomial by brute force")
    p.add_argument("knot")
    p.add_argument("--color", "-n", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-bracket-crossings", type=int, default=DEFAULT_CAP)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("cable", help="build the cable diagram D_(p,q)")
    p.add_argument("knot")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--emit-pd", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("report", help="crossing-number report for a cable")
    p.add_argument("knot")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sum", help="crossing number of K_(p,2) # K2")
    p.add_argument("knot")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("knot2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleInfeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DiagramError, ReportError, degrees.AdequacyRequired, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
