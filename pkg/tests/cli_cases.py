"""Documented CLI invocations over the fixture graphs, keyed by golden-file name.

Arguments are relative to ``tests/fixtures``; the runner substitutes paths.
"""
import json
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def _vertices(name):
    return sorted(json.loads((FIXTURES / f"{name}.json").read_text())["vertices"])


def _cases():
    cases = {}
    for i in range(1, 10):
        g = f"G{i}"
        vs = _vertices(g)
        cases[f"{g}_validate"] = ["validate", g]
        cases[f"{g}_stability"] = ["stability", g]
        cases[f"{g}_stability_text"] = ["stability", g, "--format", "text"]
        cases[f"{g}_stability_norm_one"] = ["stability", g, "--method", "norm-one"]
        cases[f"{g}_traces"] = ["traces", g]
        cases[f"{g}_condition_k"] = ["condition-k", g]
        cases[f"{g}_stabilize"] = ["stabilize", g]
        cases[f"{g}_stabilize_minimal"] = ["stabilize", g, "--minimal"]
        cases[f"{g}_closure"] = ["closure", g, "--set", vs[0]]
        cases[f"{g}_saturate"] = ["saturate", g, "--set", vs[-1]]
        cases[f"{g}_breaking_empty"] = ["breaking", g, "--set", ""]
        cases[f"{g}_quotient_empty"] = ["quotient", g, "--set", ""]
        cases[f"{g}_reach"] = ["reach", g, "--from", vs[0], "--to", vs[-1]]
        for v in vs:
            cases[f"{g}_witness_{v}"] = ["witness", g, "--v", v]
    cases.update({
        "G4_saturate_w": ["saturate", "G4", "--set", "w"],
        "G5_saturate_w": ["saturate", "G5", "--set", "w"],
        "G5_closure_head": ["closure", "G5", "--set", "w#2"],
        "G7_breaking_h": ["breaking", "G7", "--set", "h"],
        "G7_quotient_h": ["quotient", "G7", "--set", "h"],
        "G7_quotient_h_s_u": ["quotient", "G7", "--set", "h", "--s", "u"],
        "G3_witness_avoid_u": ["witness", "G3", "--v", "u", "--avoid", "u"],
        "G3_witness_avoid_chain": ["witness", "G3", "--v", "u", "--avoid", "u,u#1,u#2"],
        "G3_witness_set": ["witness", "G3", "--v", "u,u#1"],
        "G3_reach_head": ["reach", "G3", "--from", "u#5", "--to", "u"],
        "G5_reach_head_back": ["reach", "G5", "--from", "w#1", "--to", "w#3"],
        "G3_verify_ok": ["verify", "G3", "--certificate", "cert_G3.json"],
        "G3_verify_forged": ["verify", "G3", "--certificate", "cert_forged.json"],
        "bad_duplicate_validate": ["validate", "bad_duplicate"],
        "bad_duplicate_validate_text": ["validate", "bad_duplicate", "--format", "text"],
    })
    return cases


CASES = _cases()


def argv(case):
    """Expand fixture names to file paths."""
    out = []
    for a in CASES[case]:
        if (FIXTURES / f"{a}.json").exists():
            out.append(str(FIXTURES / f"{a}.json"))
        elif a.endswith(".json"):
            out.append(str(FIXTURES / a))
        else:
            out.append(a)
    return out
