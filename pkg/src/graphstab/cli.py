"""Command-line front end.

Exit codes: 0 success or affirmative answer, 1 negative verdict, 2 domain
error (invalid graph, failed precondition, bad flag), 3 unreadable or
malformed input file, 4 witness outside the constructive case.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .certificates import find_witness_set, find_witness_single, verify_certificate
from .errors import CaseIIUnsupported, GraphError, ValidationError
from .graph import check_valid, check_vertex, reaches, validate
from .hereditary import breaking_vertices, hereditary_closure, quotient_graph, saturate
from .stability import condition_k, is_stable, is_stable_via_T
from .stabilize import stabilize_graph, stabilize_minimal
from .traces import nonzero_bounded_trace, trace_space_dimension

EXIT_OK, EXIT_NO, EXIT_DOMAIN, EXIT_IO, EXIT_CASE_II = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from None


def _load_graph(path, check=True):
    try:
        g = ser.graph_from_json(_read_json(path))
    except ser.FormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    return check_valid(g) if check else g


def _emit(args, data, text=None):
    if getattr(args, "format", "json") == "text" and text is not None:
        sys.stdout.write(text)
    else:
        sys.stdout.write(ser.dumps(data))


def _write_graph(args, g):
    out = ser.dumps(ser.graph_to_json(g))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_validate(args):
    g = _load_graph(args.graph, check=False)
    problems = validate(g)
    _emit(args, {"valid": not problems, "errors": problems},
          "valid\n" if not problems else "".join(f"error: {p}\n" for p in problems))
    return EXIT_OK if not problems else EXIT_DOMAIN


def _report_text(report):
    lines = [f"verdict: {report.verdict}"]
    loop = report.loop_check
    lines.append("loop check: pass" if loop.passed
                 else f"loop check: FAIL, {loop.witness} lies on a loop and is left finite")
    trace = report.trace_check
    if trace.passed:
        lines.append("trace check: pass, no nonzero bounded graph trace")
    else:
        vals = ", ".join(f"{v}={x}" for v, x in sorted(trace.witness.values.items()))
        lines.append(f"trace check: FAIL, bounded trace of norm 1: {vals}")
    if report.fast_path_used:
        lines.append("no sources: stable iff every vertex is left infinite (agrees)")
    return "\n".join(lines) + "\n"


def cmd_stability(args):
    g = _load_graph(args.graph)
    report = is_stable_via_T(g) if args.method == "norm-one" else is_stable(g)
    _emit(args, ser.report_to_json(report), _report_text(report))
    return EXIT_OK if report.stable else EXIT_NO


def cmd_traces(args):
    g = _load_graph(args.graph)
    verdict = nonzero_bounded_trace(g)
    _emit(args, ser.trace_verdict_to_json(verdict, trace_space_dimension(g)))
    return EXIT_OK


def cmd_saturate(args):
    g = _load_graph(args.graph)
    _emit(args, ser.vertex_set_to_json(saturate(g, ser.parse_set_flag(args.set))))
    return EXIT_OK


def cmd_closure(args):
    g = _load_graph(args.graph)
    _emit(args, ser.vertex_set_to_json(hereditary_closure(g, ser.parse_set_flag(args.set))))
    return EXIT_OK


def cmd_breaking(args):
    g = _load_graph(args.graph)
    _emit(args, sorted(breaking_vertices(g, ser.parse_set_flag(args.set))))
    return EXIT_OK


def cmd_quotient(args):
    g = _load_graph(args.graph)
    S = [v for v in (args.s or "").split(",") if v]
    _write_graph(args, quotient_graph(g, ser.parse_set_flag(args.set), S))
    return EXIT_OK


def cmd_stabilize(args):
    g = _load_graph(args.graph)
    _write_graph(args, stabilize_minimal(g) if args.minimal else stabilize_graph(g))
    return EXIT_OK


def cmd_condition_k(args):
    g = _load_graph(args.graph)
    result = condition_k(g)
    _emit(args, ser.condition_k_to_json(result))
    return EXIT_OK if result.holds else EXIT_NO


def cmd_witness(args):
    g = _load_graph(args.graph)
    V = ser.parse_vertex_list(args.v)
    avoid = ser.parse_vertex_list(args.avoid or "")
    if len(V) == 1:
        cert = find_witness_single(g, V[0], avoid)
    elif avoid:
        raise GraphError("--avoid applies to a single --v vertex; a set avoids itself")
    else:
        cert = find_witness_set(g, V)
    _emit(args, ser.certificate_to_json(cert))
    return EXIT_OK


def cmd_verify(args):
    g = _load_graph(args.graph)
    try:
        cert = ser.certificate_from_json(_read_json(args.certificate))
    except ser.FormatError as exc:
        raise InputError(f"{args.certificate}: {exc}") from None
    trail = []
    ok = verify_certificate(g, cert, trail)
    _emit(args, {"valid": ok, "reasons": trail})
    return EXIT_OK if ok else EXIT_NO


def cmd_reach(args):
    g = _load_graph(args.graph)
    src = check_vertex(g, ser.parse_vertex_flag(args.src))
    dst = check_vertex(g, ser.parse_vertex_flag(args.dst))
    ok = reaches(g, src, dst)
    _emit(args, {"from": ser.vertex_to_json(src), "to": ser.vertex_to_json(dst), "reaches": ok})
    return EXIT_OK if ok else EXIT_NO


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graphstab", description="Stability of graph C*-algebras from graph data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="graph JSON file")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check graph invariants")
    p = command("stability", cmd_stability, "decide stability")
    p.add_argument("--method", choices=("bounded", "norm-one"), default="bounded",
                   help="test for nonzero bounded traces or for norm-one traces")
    command("traces", cmd_traces, "search for a nonzero bounded graph trace")
    for name, func, help in (("saturate", cmd_saturate, "saturation of a hereditary set"),
                             ("closure", cmd_closure, "hereditary closure of a set"),
                             ("breaking", cmd_breaking, "breaking vertices of a saturated set")):
        p = command(name, func, help)
        p.add_argument("--set", required=True, help="comma-separated ids, e.g. v,w,x#all,y#3")
    p = command("quotient", cmd_quotient, "quotient graph for (H, S)")
    p.add_argument("--set", required=True)
    p.add_argument("--s", default="", help="comma-separated breaking vertices in S")
    p.add_argument("-o", "--output")
    p = command("stabilize", cmd_stabilize, "attach heads")
    p.add_argument("--minimal", action="store_true", help="heads only on left-finite vertices")
    p.add_argument("-o", "--output")
    command("condition-k", cmd_condition_k, "check Condition (K)")
    p = command("witness", cmd_witness, "build a comparison certificate")
    p.add_argument("--v", required=True, help="vertex or comma-separated vertex set")
    p.add_argument("--avoid", default="")
    p = command("verify", cmd_verify, "re-check a comparison certificate")
    p.add_argument("--certificate", required=True)
    p = command("reach", cmd_reach, "path existence")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationError as exc:
        for problem in exc.problems:
            print(f"error: {problem}", file=sys.stderr)
        return EXIT_DOMAIN
    except CaseIIUnsupported as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CASE_II
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
