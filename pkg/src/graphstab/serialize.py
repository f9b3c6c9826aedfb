"""JSON forms of graphs, vertex sets, traces, reports and certificates.

All writers emit keys in a fixed order and sort vertex ids, so equal inputs
serialise byte-identically with ``json.dumps(..., indent=2)``.

Graph::

    {"vertices": ["u", "v"],
     "edges": [{"src": "u", "dst": "v", "mult": 2},
               {"src": "u", "dst": "u", "mult": "omega"}],
     "heads": ["v"]}

Vertices are ``"u"`` for base vertices and ``["u", 3]`` for the third head
vertex above ``u``.  Rationals are ``"p/q"`` strings.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .certificates import ComparisonCertificate, Reach, Split
from .errors import GraphError
from .graph import HEAD_MARK, OMEGA, HeadVertex, PresentedGraph, vertex_sort_key
from .hereditary import ALL, VertexSet
from .stability import ConditionK, StabilityReport
from .traces import GraphTrace, TraceVerdict


class FormatError(GraphError):
    """Input is not shaped like the documented JSON format."""


def dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# graphs

def graph_to_json(g: PresentedGraph) -> dict:
    edges = sorted(g.mult.items())
    return {
        "vertices": sorted(g.vertices),
        "edges": [{"src": s, "dst": d, "mult": "omega" if m is OMEGA else m}
                  for (s, d), m in edges],
        "heads": sorted(g.heads),
    }


def _mult_from_json(m):
    if m == "omega":
        return OMEGA
    return m        # anything else is left for validate() to judge


def graph_from_json(data) -> PresentedGraph:
    """Build a graph without validating it; see :func:`graphstab.graph.validate`."""
    if not isinstance(data, dict):
        raise FormatError("graph must be a JSON object")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    heads = data.get("heads", [])
    if not isinstance(vertices, list):
        raise FormatError('"vertices" must be a list')
    if not isinstance(edges, list) or not isinstance(heads, list):
        raise FormatError('"edges" and "heads" must be lists')
    triples = []
    for e in edges:
        if not isinstance(e, dict) or not {"src", "dst", "mult"} <= e.keys():
            raise FormatError(f"malformed edge entry {e!r}")
        triples.append((e["src"], e["dst"], _mult_from_json(e["mult"])))
    return PresentedGraph(vertices, triples, frozenset(heads))


# vertices

def vertex_to_json(v):
    if isinstance(v, HeadVertex):
        return [v.attach, v.index]
    return v


def vertex_from_json(data):
    if isinstance(data, str):
        return data
    if (isinstance(data, list) and len(data) == 2 and isinstance(data[0], str)
            and isinstance(data[1], int) and not isinstance(data[1], bool)):
        return HeadVertex(data[0], data[1])
    raise FormatError(f"malformed vertex {data!r}")


def parse_vertex_flag(text: str):
    """``u`` is a base vertex, ``u#3`` the third head vertex above u."""
    if HEAD_MARK not in text:
        return text
    attach, _, index = text.rpartition(HEAD_MARK)
    try:
        return HeadVertex(attach, int(index))
    except ValueError:
        raise FormatError(f"malformed head vertex {text!r}") from None


def parse_vertex_list(text: str) -> list:
    return [parse_vertex_flag(t.strip()) for t in text.split(",") if t.strip()]


# vertex sets

def vertex_set_to_json(X: VertexSet) -> dict:
    out = {"base": sorted(X.base)}
    if X.heads:
        out["heads"] = {v: "all" if p is ALL else p for v, p in sorted(X.heads.items())}
    return out


def vertex_set_from_json(data) -> VertexSet:
    if not isinstance(data, dict) or not isinstance(data.get("base", []), list):
        raise FormatError("vertex set must look like {\"base\": [...], \"heads\": {...}}")
    heads = {}
    for v, p in data.get("heads", {}).items():
        if p == "all":
            heads[v] = ALL
        elif isinstance(p, int) and not isinstance(p, bool) and p >= 0:
            heads[v] = p
        else:
            raise FormatError(f"malformed head portion {p!r} at {v!r}")
    return VertexSet(frozenset(data.get("base", [])), heads)


def parse_set_flag(text: str) -> VertexSet:
    """``v,w,x#all,y#3``: base vertices plus head portions."""
    base, heads = set(), {}
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if HEAD_MARK in token:
            attach, _, portion = token.rpartition(HEAD_MARK)
            if portion == "all":
                heads[attach] = ALL
            else:
                try:
                    heads[attach] = int(portion)
                except ValueError:
                    raise FormatError(f"malformed head portion {token!r}") from None
        else:
            base.add(token)
    return VertexSet(frozenset(base), heads)


# traces

def fraction_to_json(x: Fraction) -> str:
    return str(Fraction(x))


def fraction_from_json(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise FormatError(f"rational must be a \"p/q\" string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"malformed rational {text!r}") from None


def trace_to_json(t: GraphTrace) -> dict:
    return {"values": {v: fraction_to_json(x) for v, x in sorted(t.values.items())}}


def trace_from_json(data) -> GraphTrace:
    if not isinstance(data, dict) or not isinstance(data.get("values"), dict):
        raise FormatError('trace must look like {"values": {...}}')
    return GraphTrace({v: fraction_from_json(x) for v, x in data["values"].items()})


def trace_verdict_to_json(verdict: TraceVerdict, dimension: int = None) -> dict:
    out = {"verdict": "NONZERO" if verdict.nonzero else "ONLY_ZERO"}
    if verdict.nonzero:
        out["witness"] = trace_to_json(verdict.witness)
    else:
        out["certificate"] = [{"vertex": v, "reason": r} for v, r in verdict.certificate]
    if dimension is not None:
        out["dimension"] = dimension
    return out


# reports

def report_to_json(r: StabilityReport) -> dict:
    return {
        "verdict": r.verdict,
        "method": r.method,
        "loop_check": {"passed": r.loop_check.passed, "witness": r.loop_check.witness},
        "trace_check": {
            "passed": r.trace_check.passed,
            "witness": None if r.trace_check.witness is None
            else trace_to_json(r.trace_check.witness)["values"],
        },
        "fast_path_used": r.fast_path_used,
    }


def condition_k_to_json(result: ConditionK) -> dict:
    return {"holds": result.holds, "counts": dict(sorted(result.counts.items()))}


# certificates

def proof_to_json(p) -> dict:
    if isinstance(p, Reach):
        return {"reach": {"target": vertex_to_json(p.target),
                          "source": vertex_to_json(p.source),
                          "path": [vertex_to_json(v) for v in p.path]}}
    return {"split": {"vertex": vertex_to_json(p.vertex),
                      "children": [proof_to_json(c) for c in p.children]}}


def proof_from_json(data):
    if not isinstance(data, dict) or len(data) != 1:
        raise FormatError(f"malformed proof node {data!r}")
    ((kind, body),) = data.items()
    try:
        if kind == "reach":
            return Reach(vertex_from_json(body["target"]), vertex_from_json(body["source"]),
                         tuple(vertex_from_json(v) for v in body["path"]))
        if kind == "split":
            return Split(vertex_from_json(body["vertex"]),
                         tuple(proof_from_json(c) for c in body["children"]))
    except (KeyError, TypeError):
        raise FormatError(f"malformed {kind} node") from None
    raise FormatError(f"unknown proof node kind {kind!r}")


def certificate_to_json(c: ComparisonCertificate) -> dict:
    return {
        "dominated": [vertex_to_json(v) for v in c.dominated],
        "dominating": [vertex_to_json(v) for v in c.dominating],
        "avoid": [vertex_to_json(v) for v in sorted(c.avoid, key=vertex_sort_key)],
        "proofs": [proof_to_json(p) for p in c.proofs],
    }


def certificate_from_json(data) -> ComparisonCertificate:
    if not isinstance(data, dict):
        raise FormatError("certificate must be a JSON object")
    try:
        return ComparisonCertificate(
            tuple(vertex_from_json(v) for v in data["dominated"]),
            tuple(vertex_from_json(v) for v in data["dominating"]),
            tuple(vertex_from_json(v) for v in data.get("avoid", [])),
            tuple(proof_from_json(p) for p in data["proofs"]),
        )
    except KeyError as exc:
        raise FormatError(f"certificate lacks {exc.args[0]!r}") from None
