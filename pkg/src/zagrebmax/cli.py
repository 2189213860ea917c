"""Command-line frontend.

Commands: validate, construct, m2, bicyclic-max, oracle, improve,
majorize, sweep.  Output is a single JSON report on stdout (``--pretty``
renders an indented view); exit codes: 0 success, 1 domain rejection,
2 parse error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from typing import Any, Optional

from . import bicyclic as bc
from . import constructor as ctor
from . import graphs as gr
from . import oracle as orc
from . import sequences as sq
from .errors import CapExceededError, DomainError, ParseError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_CAP = 3


def _report(command: str, inputs: dict, result: Any, warnings: list[str]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "warnings": warnings,
    }


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))


def _edges_json(g: gr.SimpleGraph) -> list[list[int]]:
    return [[u, v] for u, v in g.edges]


def _read_graph(path: str) -> gr.SimpleGraph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return gr.parse_edge_list(text)


def cmd_validate(args) -> dict:
    seq = sq.DegreeSequence.parse(args.sequence)
    warnings = ["input was not non-increasing; sorted"] if seq.resorted else []
    graphic = sq.is_graphic(seq)
    realizable = sq.is_connected_realizable(seq)
    cls = None
    if realizable:
        c = sq.classify(seq)
        cls = {
            "excess": c.excess,
            "kind": c.kind,
            "leaf_count": c.leaf_count,
            "degree2_count": c.degree2_count,
        }
    rep = sq.check_optimality_conditions(seq)
    result = {
        "sequence": seq.to_text(),
        "graphic": graphic,
        "connected_realizable": realizable,
        "class": cls,
        "conditions": {
            "i": rep.holds_i,
            "ii": rep.holds_ii,
            "iii": rep.holds_iii,
            "iv": rep.holds_iv,
            "verdict": rep.verdict,
        },
    }
    return _report("validate", {"sequence": args.sequence}, result, warnings)


def cmd_construct(args) -> Optional[dict]:
    seq = sq.DegreeSequence.parse(args.sequence)
    trace = ctor.construct_extremal(seq)
    if args.format == "edges":
        sys.stdout.write(gr.serialize_edge_list(trace.graph))
        return None
    if args.format == "dot":
        sys.stdout.write(gr.to_dot(trace.graph))
        return None
    result = {
        "sequence": seq.to_text(),
        "n": trace.graph.n,
        "m": trace.graph.m,
        "edges": _edges_json(trace.graph),
        "m2": gr.second_zagreb(trace.graph),
        "ordering": list(trace.ordering),
        "layers": list(trace.layers),
        "triangles": [list(t) for t in trace.triangles],
    }
    return _report(
        "construct", {"sequence": args.sequence}, result, list(trace.warnings)
    )


def cmd_m2(args) -> dict:
    g = _read_graph(args.graph)
    result = {
        "n": g.n,
        "m": g.m,
        "m2": gr.second_zagreb(g),
        "degree_sequence": gr.degree_sequence_of(g).to_text(),
    }
    return _report("m2", {"graph": args.graph}, result, [])


def cmd_bicyclic_max(args) -> dict:
    seq = sq.DegreeSequence.parse(args.sequence)
    res = bc.bicyclic_max_m2(seq)
    result = {
        "sequence": seq.to_text(),
        "case": res.case_id,
        "value": res.value,
        "family": res.witness.label(),
        "params": list(res.witness.params),
        "edges": _edges_json(res.witness.graph),
    }
    return _report("bicyclic-max", {"sequence": args.sequence}, result, [])


def cmd_oracle(args) -> dict:
    seq = sq.DegreeSequence.parse(args.sequence)
    res = orc.search_max_m2(seq, cap=args.cap, workers=args.workers)
    result = {
        "sequence": seq.to_text(),
        "max_m2": res.max_m2,
        "witness_edges": _edges_json(res.witness),
        "realizations": res.realization_count,
    }
    if not args.no_timing:
        result["elapsed_ms"] = round(res.elapsed * 1000.0, 3)
    return _report("oracle", {"sequence": args.sequence}, result, [])


def cmd_improve(args) -> dict:
    g = _read_graph(args.graph)
    initial = gr.second_zagreb(g)
    final_graph, moves = orc.hill_climb(g)
    result = {
        "initial_m2": initial,
        "final_m2": gr.second_zagreb(final_graph),
        "moves": [
            {
                "removed": [[mv.v1, mv.u1], [mv.v2, mv.u2]],
                "added": [[mv.v1, mv.v2], [mv.u1, mv.u2]],
            }
            for mv in moves
        ],
        "edges": _edges_json(final_graph),
    }
    return _report("improve", {"graph": args.graph}, result, [])


def cmd_majorize(args) -> dict:
    a = sq.DegreeSequence.parse(args.seq_a)
    b = sq.DegreeSequence.parse(args.seq_b)
    order = sq.majorization_compare(a, b)
    result: dict[str, Any] = {
        "a": a.to_text(),
        "b": b.to_text(),
        "order": order.value,
    }
    if args.chain:
        if order in (sq.MajorizationOrder.EQUAL, sq.MajorizationOrder.A_BELOW_B):
            chain = sq.majorization_chain(a, b)
            result["chain"] = [s.to_text() for s in chain.steps]
            result["chain_length"] = len(chain)
        else:
            result["chain"] = None
    return _report(
        "majorize", {"a": args.seq_a, "b": args.seq_b}, result, []
    )


def _max_for(seq: sq.DegreeSequence, excess: int, cap: int) -> tuple[int, str]:
    if excess == 1:
        return bc.bicyclic_max_m2(seq).value, "closed_form"
    return orc.search_max_m2(seq, cap=cap).max_m2, "oracle"


def cmd_sweep(args) -> dict:
    cap = args.cap if args.cap is not None else orc.default_cap()
    if args.n > cap:
        raise CapExceededError(f"n = {args.n} exceeds the oracle cap {cap}")
    seqs = sq.connected_realizable_sequences(args.n, args.excess)
    rows = []
    maxima = {}
    for seq in seqs:
        value, method = _max_for(seq, args.excess, cap)
        maxima[seq.degrees] = value
        rows.append(
            {"sequence": seq.to_text(), "max_m2": value, "method": method}
        )
    result: dict[str, Any] = {
        "n": args.n,
        "excess": args.excess,
        "count": len(rows),
        "sequences": rows,
    }
    if args.verify_monotone:
        violations = []
        checked = 0
        for sa, sb in combinations(seqs, 2):
            order = sq.majorization_compare(sa, sb)
            if order == sq.MajorizationOrder.A_BELOW_B:
                lo, hi = sa, sb
            elif order == sq.MajorizationOrder.B_BELOW_A:
                lo, hi = sb, sa
            else:
                continue
            checked += 1
            vlo, vhi = maxima[lo.degrees], maxima[hi.degrees]
            if vlo >= vhi:
                violations.append(
                    {
                        "below": lo.to_text(),
                        "above": hi.to_text(),
                        "max_below": vlo,
                        "max_above": vhi,
                        "kind": "tie" if vlo == vhi else "decrease",
                    }
                )
        result["checked_pairs"] = checked
        result["violations"] = violations
    return _report(
        "sweep",
        {"n": args.n, "excess": args.excess},
        result,
        [],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zagrebmax",
        description="Extremal second-Zagreb-index graphs for degree sequences.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="classify a degree sequence")
    p.add_argument("sequence", help='e.g. "4,4,3,3,2,1,1" or "4^5,1^8"')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "construct", parents=[common], help="build the layered candidate-extremal graph"
    )
    p.add_argument("sequence")
    p.add_argument("--format", choices=["edges", "dot", "json"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("m2", parents=[common], help="second Zagreb index of a graph file")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=cmd_m2)

    p = sub.add_parser(
        "bicyclic-max", parents=[common], help="closed-form bicyclic maximum"
    )
    p.add_argument("sequence")
    p.set_defaults(func=cmd_bicyclic_max)

    p = sub.add_parser(
        "oracle", parents=[common], help="exact maximum by exhaustive enumeration"
    )
    p.add_argument("sequence")
    p.add_argument("--cap", type=int, default=None, help="refuse n beyond this bound")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--no-timing", action="store_true", help="omit timing for byte-identical output"
    )
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("improve", parents=[common], help="hill-climb a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser(
        "majorize", parents=[common], help="compare two sequences in dominance order"
    )
    p.add_argument("seq_a")
    p.add_argument("seq_b")
    p.add_argument("--chain", action="store_true", help="emit the unit-transfer chain")
    p.set_defaults(func=cmd_majorize)

    p = sub.add_parser(
        "sweep", parents=[common], help="maxima for all sequences of given order/excess"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--excess", type=int, required=True)
    p.add_argument("--verify-monotone", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except ParseError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_CAP
    except DomainError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    if report is not None:
        _emit(report, args.pretty)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
