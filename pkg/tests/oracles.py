"""Independent brute-force oracles.

Nothing here imports the algorithms under test; graphs are read through
their raw ``vertices`` / ``mult`` / ``heads`` data only.
"""
from fractions import Fraction
from itertools import combinations

from graphstab.graph import OMEGA


def _succ(g):
    out = {v: [] for v in g.vertices}
    for (a, b) in g.mult:
        out[a].append(b)
    return out


def truncated(g, depth):
    """Materialise every head up to ``depth`` chain vertices: returns (vertices, edge pairs)."""
    verts = list(g.vertices)
    edges = set(g.mult)
    for h in g.heads:
        prev = h
        for i in range(1, depth + 1):
            node = (h, i)
            verts.append(node)
            edges.add((node, prev))
            prev = node
    return verts, edges


def reachable_by_paths(verts, edges, src):
    """Every vertex at the end of some simple path from src, by exhaustive DFS."""
    succ = {v: [] for v in verts}
    for a, b in edges:
        succ[a].append(b)
    found = {src}

    def dfs(x, on_path):
        for y in succ[x]:
            if y not in on_path:
                found.add(y)
                dfs(y, on_path | {y})

    dfs(src, {src})
    return found


def reaches_brute(g, src, dst, depth=None):
    idx = [src[1] if isinstance(src, tuple) else 0, dst[1] if isinstance(dst, tuple) else 0]
    depth = depth or max(idx) + 2
    verts, edges = truncated(g, depth)
    key = lambda v: (v.attach, v.index) if isinstance(v, tuple) else v
    return key(dst) in reachable_by_paths(verts, edges, key(src))


def left_set_size(g, v, depth):
    verts, edges = truncated(g, depth)
    key = (v.attach, v.index) if isinstance(v, tuple) else v
    return sum(1 for w in verts if key in reachable_by_paths(verts, edges, w))


def left_infinite_brute(g, v):
    """L(v) is infinite iff it keeps growing as the heads are materialised deeper."""
    base = v.index if isinstance(v, tuple) else 0
    return left_set_size(g, v, base + 2) < left_set_size(g, v, base + 4)


def loop_vertices_brute(g):
    succ = _succ(g)
    out = set()
    for v in g.vertices:
        stack, seen = list(succ[v]), set()
        while stack:
            x = stack.pop()
            if x == v:
                out.add(v)
                break
            if x not in seen:
                seen.add(x)
                stack.extend(succ[x])
    return out


def simple_loop_count_brute(g, v, cap=2):
    """Enumerate first-return edge-instance paths at v of length <= 2n, capped.

    OMEGA is modelled by ``cap + 1`` parallel instances, enough to exceed the cap.
    """
    n = len(g.vertices)
    inst = {x: [] for x in g.vertices}
    for (a, b), m in g.mult.items():
        inst[a].extend([b] * (cap + 1 if m is OMEGA else m))
    count = 0
    frontier = [v]          # one entry per walk, level by level
    for _ in range(2 * n):
        nxt = []
        for x in frontier:
            for y in inst[x]:
                if y == v:
                    count += 1
                    if count >= cap:
                        return cap
                else:
                    nxt.append(y)
        frontier = nxt
    return min(count, cap)


# hereditary / saturated by definition, base-level with aligned head portions

def hereditary_brute(g, base):
    return all(b in base for (a, b) in g.mult if a in base)


def saturated_brute(g, base):
    """Non-singular vertices whose every emitted edge lands in base must be in base."""
    for v in g.vertices:
        out = [(b, m) for (a, b), m in g.mult.items() if a == v]
        if not out or any(m is OMEGA for _, m in out):
            continue
        if v not in base and all(b in base for b, _ in out):
            return False
    return True


def saturation_by_intersection(g, base):
    verts = sorted(g.vertices)
    result = set(verts)
    for r in range(len(verts) + 1):
        for combo in combinations(verts, r):
            s = set(combo)
            if base <= s and hereditary_brute(g, s) and saturated_brute(g, s):
                result &= s
    return result


# Fourier-Motzkin feasibility over exact rationals

def _normalise(row):
    lead = next((abs(a) for a in row[:-1] if a != 0), None)
    if lead is None:
        return tuple(row)
    return tuple(a / lead for a in row)


def fm_feasible(n, ineqs, eqs):
    """Is there x in Q^n with a.x <= b for (a, b) in ineqs and a.x == b for eqs?

    Rows are lists ``[a_0, ..., a_{n-1}, b]``.  Equalities are eliminated by
    substitution, everything else by Fourier-Motzkin.
    """
    ineqs = {_normalise([Fraction(x) for x in r]) for r in ineqs}
    eqs = [[Fraction(x) for x in r] for r in eqs]
    for j in range(n):
        piv = next((e for e in eqs if e[j] != 0), None)
        if piv is not None:
            eqs.remove(piv)
            piv = [a / piv[j] for a in piv]

            def sub(row):
                f = row[j]
                return [a - f * p for a, p in zip(row, piv)] if f else list(row)

            eqs = [sub(e) for e in eqs]
            ineqs = {_normalise(sub(r)) for r in ineqs}
            continue
        pos = [r for r in ineqs if r[j] > 0]
        neg = [r for r in ineqs if r[j] < 0]
        rest = {r for r in ineqs if r[j] == 0}
        for p in pos:
            for q in neg:
                combo = [a * -q[j] + c * p[j] for a, c in zip(p, q)]
                rest.add(_normalise(combo))
        ineqs = rest
    if any(r[-1] < 0 for r in ineqs):
        return False
    return all(e[-1] == 0 for e in eqs)


def nonzero_bounded_trace_fm(g):
    """Exists g >= 0, sum g == 1, satisfying the trace conditions and boundedness?"""
    order = sorted(g.vertices)
    n = len(order)
    if n == 0:
        return False
    idx = {v: i for i, v in enumerate(order)}

    def unit(i, coef=1):
        row = [0] * (n + 1)
        row[i] = coef
        return row

    ineqs = [unit(i, -1) for i in range(n)]     # -x_i <= 0
    eqs = [[1] * n + [1]]
    for v in order:
        emitted = {b: m for (a, b), m in g.mult.items() if a == v}
        if v in g.heads:
            eqs.append(unit(idx[v]))
        if not emitted:
            continue
        row = [0] * (n + 1)
        row[idx[v]] = 1
        infinite = False
        for b, m in emitted.items():
            if m is OMEGA:
                infinite = True
                eqs.append(unit(idx[b]))
            else:
                row[idx[b]] -= m
        if infinite:
            ineqs.append([-a for a in row[:-1]] + [0])     # sum m x_b - x_v <= 0
        else:
            eqs.append(row)
    return fm_feasible(n, ineqs, eqs)
