"""Confusability graphs, greedy and exact codes, size bounds, equivalence checks."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import kernels
from .codebook import Codebook
from .seqcore import exhaustive_limit, from_int, to_str

VARIANTS = ("definition", "first_only", "partition", "unconstrained")


class BudgetExceeded(ValueError):
    pass


def _check_budget(n: int) -> None:
    if n > exhaustive_limit():
        raise BudgetExceeded(f"n={n} exceeds exhaustive budget {exhaustive_limit()}")


def _sentinel_outputs(x: int, n: int, t1: int, t2: int) -> set:
    keep = n - 2 * t1 + 1
    if keep < 0:
        return set()
    prefix = x >> (n - keep) if keep else 0
    free = 2 * t2 - 1
    pivot = (x >> (n - keep - 1)) & 1 if keep < n else None
    out = set()
    for v in range(1 << free):
        if pivot is not None and (v >> (free - 1)) & 1 == pivot:
            continue
        out.add((prefix << free) | v)
    return out


def outputs(x: int, n: int, m: int, t1: int, t2: int, model: str = "DI",
            variant: str = "definition") -> set:
    """Ball of the int-coded word x as a set of ints (length is implied)."""
    model = model.upper()
    if model == "DS":
        return kernels.burst_outputs(x, n, [(t1, t2)] * m, kernels.DS)
    if model == "MIXED":
        specs = [[(t1, t2), (t2, t1)], [(t2, t1), (t1, t2)]]
        return set().union(*(kernels.burst_outputs(x, n, s, kernels.DI) for s in specs))
    if model != "DI":
        raise ValueError(f"unknown model {model!r}")
    specs = [(t1, t2)] * m
    if variant == "definition":
        return kernels.burst_outputs(x, n, specs, kernels.DI)
    if variant == "unconstrained":
        return kernels.burst_outputs(x, n, specs, kernels.DI_FREE)
    if variant in ("first_only", "partition"):
        out = kernels.burst_outputs(x, n, specs, kernels.DI, False)
        if variant == "partition":
            if m != 2:
                raise ValueError("the partition variant is defined for two bursts")
            out |= _sentinel_outputs(x, n, t1, t2)
        return out
    raise ValueError(f"unknown ball variant {variant!r}")


@dataclass
class ConfusabilityGraph:
    n: int
    m: int
    t1: int
    t2: int
    model: str
    variant: str
    adj: list  # adj[v] = set of neighbour ints

    def degree(self, x) -> int:
        return len(self.adj[x if isinstance(x, int) else int(to_str(x), 2)])

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edge_ints(self) -> set:
        return {(u, v) for u, a in enumerate(self.adj) for v in a if u < v}

    @property
    def edges(self) -> set:
        n = self.n
        return {frozenset((from_int(u, n), from_int(v, n))) for u, v in self.edge_ints()}

    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)


def build_graph(n: int, m: int, t1: int, t2: int, model: str = "DI",
                variant: str = "definition") -> ConfusabilityGraph:
    """Exact confusability graph on all 2^n words via an index of ball outputs."""
    _check_budget(n)
    index: dict = {}
    for x in range(1 << n):
        for y in outputs(x, n, m, t1, t2, model, variant):
            index.setdefault(y, []).append(x)
    adj = [set() for _ in range(1 << n)]
    for bucket in index.values():
        if len(bucket) > 1:
            for u in bucket:
                adj[u].update(bucket)
    for u, a in enumerate(adj):
        a.discard(u)
    return ConfusabilityGraph(n, m, t1, t2, model.upper(), variant, adj)


def _meta(g: ConfusabilityGraph, construction: str) -> dict:
    return dict(construction=construction, n=g.n, m=g.m, t1=g.t1, t2=g.t2,
                model=g.model, variant=g.variant)


def greedy_code(g: ConfusabilityGraph) -> Codebook:
    """Maximal independent set, lowest degree first, ties by word value."""
    order = sorted(range(len(g.adj)), key=lambda v: (len(g.adj[v]), v))
    blocked = set()
    chosen = []
    for v in order:
        if v in blocked:
            continue
        chosen.append(v)
        blocked.add(v)
        blocked |= g.adj[v]
    return Codebook(tuple(from_int(v, g.n) for v in chosen), _meta(g, "greedy"))


def _components(adj) -> list:
    seen = set()
    comps = []
    for s in range(len(adj)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def _mis_component(verts: list, adj) -> list:
    """Exact MIS of one connected component; bitmasks over local indices."""
    local = {v: k for k, v in enumerate(verts)}
    nb = [sum(1 << local[u] for u in adj[v]) for v in verts]
    best = [0, 0]

    def cover_bound(cand: int) -> int:
        # greedy clique cover; an independent set meets each clique once
        cliques = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique = nb[v] & cand
            cand &= ~(1 << v)
            while clique:
                u = (clique & -clique).bit_length() - 1
                cand &= ~(1 << u)
                clique &= nb[u]
            cliques += 1
        return cliques

    def search(cand: int, chosen: int, k: int):
        if not cand:
            if k > best[0]:
                best[0], best[1] = k, chosen
            return
        if k + cover_bound(cand) <= best[0]:
            return
        top, topdeg = -1, -1
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            d = bin(nb[v] & cand).count("1")
            if d <= 1:  # taking a vertex of degree <= 1 is never worse
                search(cand & ~nb[v] & ~(1 << v), chosen | (1 << v), k + 1)
                return
            if d > topdeg:
                top, topdeg = v, d
        search(cand & ~nb[top] & ~(1 << top), chosen | (1 << top), k + 1)
        search(cand & ~(1 << top), chosen, k)

    search((1 << len(verts)) - 1, 0, 0)
    return [verts[k] for k in range(len(verts)) if best[1] >> k & 1]


def max_independent_set(g: ConfusabilityGraph, limit: int = 10) -> Codebook:
    """Maximum independent set by branch and bound per connected component."""
    if g.n > limit:
        raise BudgetExceeded(f"exact search limited to n <= {limit}")
    chosen = []
    for comp in _components(g.adj):
        chosen.extend(_mis_component(comp, g.adj))
    return Codebook(tuple(from_int(v, g.n) for v in chosen), _meta(g, "exact"))


def _check_params(n, t1, t2, ordered=False):
    if t1 < 1 or t2 < 1:
        raise ValueError("need t1, t2 >= 1")
    if ordered and t1 < t2:
        raise ValueError("need t1 >= t2")
    if n <= 2 * t1:
        raise ValueError("need n > 2*t1")


def lower_bound(n: int, t1: int, t2: int) -> Fraction:
    _check_params(n, t1, t2)
    den = comb(n - 2 * t1 + 2, 2) * comb(n - 2 * t1 + 2 * t2 + 1, 2)
    return Fraction(2) ** (n - 2 * t1 - 2 * t2) / den


def upper_bound(n: int, t1: int, t2: int) -> tuple:
    """(2^n / max(a1, a2), a1, a2)."""
    _check_params(n, t1, t2, ordered=True)
    a1 = 2 ** (2 * t1 - 2) * (comb(n - 2 * t1 + 2, 2) + 1)
    a2 = 2 ** (2 * t2 - 2) * (comb(n - 2 * t2 + 2, 2) + 1)
    return Fraction(2 ** n, max(a1, a2)), a1, a2


@dataclass(frozen=True)
class BoundReport:
    lower: Fraction
    upper: Fraction
    a1: int
    a2: int

    def to_dict(self) -> dict:
        return {"lower": str(self.lower), "upper": str(self.upper),
                "a1": str(self.a1), "a2": str(self.a2),
                "lower_float": float(self.lower), "upper_float": float(self.upper)}


def bounds(n: int, t1: int, t2: int) -> BoundReport:
    up, a1, a2 = upper_bound(n, t1, t2)
    return BoundReport(lower_bound(n, t1, t2), up, a1, a2)


def ball_size_closed_form(n: int, t1: int, t2: int) -> int:
    if t2 < 1 or n <= 2 * t1:
        raise ValueError("need t2 >= 1 and n > 2*t1")
    return 2 ** (2 * t2 - 2) * (comb(n - 2 * t1 + 2, 2) + 1)


@dataclass
class Report:
    check: str
    params: dict
    passed: bool
    counts: dict = field(default_factory=dict)
    counterexample: list | None = None
    note: str = ""
    seconds: float = 0.0

    def to_json(self) -> str:
        body = {
            "check": self.check,
            "params": {k: str(v) if isinstance(v, int) else v for k, v in self.params.items()},
            "passed": self.passed,
            "counts": {k: str(v) for k, v in self.counts.items()},
            "counterexample": self.counterexample,
            "note": self.note,
            "seconds": round(self.seconds, 3),
        }
        return json.dumps(body, indent=2)


def _compare(check, params, ga, gb, label_a, label_b, t0) -> Report:
    ea, eb = ga.edge_ints(), gb.edge_ints()
    diff = sorted(ea ^ eb)
    counts = {f"edges_{label_a}": len(ea), f"edges_{label_b}": len(eb), "mismatches": len(diff)}
    cex = None
    if diff:
        u, v = diff[0]
        side = label_a if (u, v) in ea else label_b
        cex = [to_str(from_int(u, ga.n)), to_str(from_int(v, ga.n)), f"edge only in {side}"]
    return Report(check, params, not diff, counts, cex, seconds=time.perf_counter() - t0)


def verify_thm1(n: int, t1: int, t2: int, variant: str = "definition") -> Report:
    """Two-burst (t1,t2) and (t2,t1) confusability graphs must coincide."""
    t0 = time.perf_counter()
    params = {"n": n, "t1": t1, "t2": t2, "variant": variant}
    ga = build_graph(n, 2, t1, t2, "DI", variant)
    gb = ga if t1 == t2 else build_graph(n, 2, t2, t1, "DI", variant)
    return _compare("thm1", params, ga, gb, f"({t1},{t2})", f"({t2},{t1})", t0)


def verify_thm2(n: int, t1: int, t2: int, variant: str = "definition") -> Report:
    """Two-burst (t1,t2) graph against the one-(t1,t2)-plus-one-(t2,t1) graph."""
    t0 = time.perf_counter()
    params = {"n": n, "t1": t1, "t2": t2, "variant": variant}
    ga = build_graph(n, 2, t1, t2, "DI", variant)
    if variant == "definition":
        gb = build_graph(n, 2, t1, t2, "MIXED")
    elif variant == "unconstrained":
        gb = _mixed_free_graph(n, t1, t2)
    else:
        raise ValueError("mixed graphs exist for the definition and unconstrained variants")
    return _compare("thm2", params, ga, gb, f"2x({t1},{t2})", "mixed", t0)


def _mixed_free_graph(n, t1, t2) -> ConfusabilityGraph:
    _check_budget(n)
    specs = [[(t1, t2), (t2, t1)], [(t2, t1), (t1, t2)]]
    index: dict = {}
    for x in range(1 << n):
        outs = set().union(*(kernels.burst_outputs(x, n, s, kernels.DI_FREE) for s in specs))
        for y in outs:
            index.setdefault(y, []).append(x)
    adj = [set() for _ in range(1 << n)]
    for bucket in index.values():
        for u in bucket:
            adj[u].update(bucket)
    for u, a in enumerate(adj):
        a.discard(u)
    return ConfusabilityGraph(n, 2, t1, t2, "MIXED", "unconstrained", adj)


def verify_eq7(n: int, t1: int, t2: int) -> Report:
    """Every partition-variant two-burst ball has the closed-form size."""
    t0 = time.perf_counter()
    _check_budget(n)
    want = ball_size_closed_form(n, t1, t2)
    bad = None
    sizes = set()
    for x in range(1 << n):
        s = len(outputs(x, n, 2, t1, t2, "DI", "partition"))
        sizes.add(s)
        if s != want and bad is None:
            bad = [to_str(from_int(x, n)), f"ball size {s}"]
    return Report("eq7", {"n": n, "t1": t1, "t2": t2}, bad is None,
                  {"closed_form": want, "distinct_sizes": len(sizes)}, bad,
                  seconds=time.perf_counter() - t0)


def verify_bounds(n: int, t1: int, t2: int, variant: str = "definition") -> Report:
    """lower bound <= greedy code size <= upper bound on one instance."""
    t0 = time.perf_counter()
    g = build_graph(n, 2, t1, t2, "DI", variant)
    size = len(greedy_code(g))
    b = bounds(n, t1, t2)
    ok = b.lower <= size <= b.upper
    return Report("bounds", {"n": n, "t1": t1, "t2": t2, "variant": variant}, ok,
                  {"greedy": size, "lower": b.lower, "upper": b.upper},
                  None if ok else [f"greedy size {size} outside [{b.lower}, {b.upper}]"],
                  seconds=time.perf_counter() - t0)
