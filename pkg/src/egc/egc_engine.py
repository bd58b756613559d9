"""Deciding and verifying edge-girth colorings.

An edge-girth coloring (egc) of a graph with degree = girth = k is a proper
k-edge-coloring in which every girth cycle sees all k colors.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from egc import _search
from egc.families import Contraction, NotTriangleReplaced, nabla_inverse, three_edge_coloring
from egc.graph_core import (
    CLASS2,
    INFINITY,
    EdgeColoring,
    Graph,
    GraphError,
    GirthCycleSet,
    Multigraph,
    UNKNOWN,
    chromatic_index_class,
    enumerate_girth_cycles,
    girth,
    signature,
    Signature,
)

COLORED = "colored"
IMPOSSIBLE = "impossible"
TIMEOUT = "timeout"


@dataclass
class EgcVerdict:
    status: str
    coloring: Optional[EdgeColoring] = None
    certificate: Dict = field(default_factory=dict)
    nodes: int = 0
    millis: int = 0

    def to_json(self, timing: bool = False) -> dict:
        return {
            "status": self.status,
            "coloring": list(self.coloring.colors) if self.coloring else None,
            "certificate": self.certificate,
            "nodes": self.nodes,
            "millis": self.millis if timing else 0,
        }


@dataclass(frozen=True)
class Violation:
    kind: str  # "vertex" or "cycle"
    where: Tuple[int, ...]  # the vertex, or the cycle's vertex sequence
    colors: Tuple[int, ...]


def verify_egc(g: Graph, c: EdgeColoring, cycles: Optional[GirthCycleSet] = None) -> List[Violation]:
    """Every improper vertex and every non-rainbow girth cycle; empty means egc."""
    c.check_domain(g)
    out: List[Violation] = []
    for v, inc in enumerate(g.incident):
        cols = tuple(c.colors[e] for e in inc)
        if len(set(cols)) != len(cols):
            out.append(Violation("vertex", (v,), cols))
    if cycles is None:
        cycles = enumerate_girth_cycles(g)
    for cyc, es in zip(cycles.cycles, cycles.edge_sets):
        cols = tuple(c.colors[e] for e in es)
        if len(set(cols)) != c.kappa or len(es) != c.kappa:
            out.append(Violation("cycle", cyc, cols))
    return out


# ---------------------------------------------------------------------------
# obstructions


def find_k23_obstruction(g: Graph) -> Optional[Dict[str, Tuple[int, ...]]]:
    """Two nonadjacent vertices with three common neighbours, or None."""
    adj = [set(a) for a in g.adj]
    for a in range(g.n):
        # only vertices at distance 2 can share neighbours
        cand = sorted({y for x in adj[a] for y in adj[x] if y > a and y not in adj[a]})
        for b in cand:
            common = sorted(adj[a] & adj[b])
            if len(common) >= 3:
                return {"pair": (a, b), "common": tuple(common[:3])}
    return None


def find_theta_obstruction(g: Graph) -> Optional[Dict[str, Tuple[int, ...]]]:
    """Three edge-disjoint 2-paths between nonadjacent vertices; the K_{2,3} pattern."""
    return find_k23_obstruction(g)


def obstruction_is_valid(g: Graph, ob: Dict[str, Tuple[int, ...]]) -> bool:
    a, b = ob["pair"]
    return not g.has_edge(a, b) and all(g.has_edge(a, x) and g.has_edge(b, x) for x in ob["common"]) and len(
        set(ob["common"])
    ) == 3


# ---------------------------------------------------------------------------
# exact search


def _egc_problem(g: Graph, cycles: GirthCycleSet, k: int) -> Tuple[_search.Problem, Dict[int, int], int]:
    load = cycles.per_edge_counts(g.m)
    order = sorted(range(g.m), key=lambda e: (-load[e], e))
    rank = [0] * g.m
    for r, e in enumerate(order):
        rank[e] = r
    groups = tuple(tuple(inc) for inc in g.incident) + tuple(cycles.edge_sets)
    vload = [sum(load[e] for e in g.incident[v]) for v in range(g.n)]
    root = min(range(g.n), key=lambda v: (vload[v], v))
    fixed = {e: i + 1 for i, e in enumerate(sorted(g.incident[root]))}
    return _search.Problem(g.m, k, groups, tuple(rank)), fixed, root


def _elapsed_ms(t0: float) -> int:
    return int(round((time.monotonic() - t0) * 1000))


def find_egc(
    g: Graph, timeout: Optional[float] = 300.0, parallel: bool = False, jobs: int = 1, obstructions: bool = True
) -> EgcVerdict:
    """Complete backtracking search for an edge-girth coloring.

    Domains are pruned by both vertex properness and girth-cycle rainbowness;
    the palette at a minimum-load vertex is fixed to 1..k.
    """
    t0 = time.monotonic()
    k = g.regular_degree()
    gg = girth(g)
    if k is None:
        return EgcVerdict(IMPOSSIBLE, certificate={"reason": "not regular"}, millis=_elapsed_ms(t0))
    if gg == INFINITY or gg != k:
        return EgcVerdict(
            IMPOSSIBLE,
            certificate={"reason": f"not girth-tight: degree {k}, girth {gg}"},
            millis=_elapsed_ms(t0),
        )
    if obstructions and k == 4:
        ob = find_k23_obstruction(g)
        if ob is not None:
            return EgcVerdict(
                IMPOSSIBLE,
                certificate={
                    "reason": "K23 obstruction",
                    "obstruction": {"pair": list(ob["pair"]), "common": list(ob["common"])},
                },
                millis=_elapsed_ms(t0),
            )
    cycles = enumerate_girth_cycles(g)
    problem, fixed, root = _egc_problem(g, cycles, k)
    workers = jobs if parallel or jobs > 1 else 1
    out = _search.solve(problem, fixed, timeout, workers)
    trace = [[e, col] for e, col in out.root_trace]
    if out.status == "sat":
        col = EdgeColoring(k, tuple(out.values))
        if verify_egc(g, col, cycles):
            raise AssertionError("search produced an invalid coloring")
        return EgcVerdict(COLORED, col, {"palette_vertex": root}, out.nodes, _elapsed_ms(t0))
    if out.status == "unsat":
        if chromatic_index_class(g, timeout=10) == CLASS2:
            reason = "chromatic index exceeds degree"
        else:
            reason = "search exhausted"
        cert = {"reason": reason, "palette_vertex": root, "nodes": out.nodes, "forced": trace}
        return EgcVerdict(IMPOSSIBLE, None, cert, out.nodes, _elapsed_ms(t0))
    cert = {"reason": "timeout", "best_depth": out.depth, "nodes": out.nodes}
    return EgcVerdict(TIMEOUT, None, cert, out.nodes, _elapsed_ms(t0))


# ---------------------------------------------------------------------------
# cubic multigraphs and 1^2 0-graphs


def is_generalized_snark(m: Multigraph, timeout: Optional[float] = 60.0) -> Union[bool, str]:
    """True iff the cubic multigraph has no proper 3-edge-coloring; UNKNOWN on timeout."""
    if not m.is_cubic():
        raise GraphError("generalized snark test needs a cubic multigraph")
    cols = three_edge_coloring(m, timeout)
    if cols == "timeout":
        return UNKNOWN
    return cols is None


def lift_coloring(g: Graph, con: Contraction, base_colors: Sequence[int]) -> EdgeColoring:
    """Non-triangle edges keep their color; a triangle edge takes the color of the
    non-triangle edge at the opposite triangle vertex."""
    colors = [0] * g.m
    at_vertex = {}
    for pos, e in enumerate(con.edge_of):
        colors[e] = base_colors[pos]
        u, v = g.edges[e]
        at_vertex[u] = base_colors[pos]
        at_vertex[v] = base_colors[pos]
    for tri in con.triangles:
        for x in tri:
            a, b = [y for y in tri if y != x]
            colors[g.eid(a, b)] = at_vertex[x]
    return EdgeColoring(3, tuple(colors))


def egc_120(g: Graph, timeout: Optional[float] = 60.0) -> EgcVerdict:
    """Decide a cubic graph with signature (1,1,0) by contracting its triangles."""
    t0 = time.monotonic()
    if g.regular_degree() != 3:
        raise GraphError("egc_120 needs a cubic graph")
    sig = signature(g)
    if not isinstance(sig, Signature) or sig.entries != (1, 1, 0):
        raise GraphError(f"egc_120 needs signature (1,1,0), got {sig}")
    con = nabla_inverse(g)
    if isinstance(con, NotTriangleReplaced):
        return find_egc(g, timeout)
    cols = three_edge_coloring(con.multigraph, timeout)
    if cols == "timeout":
        return EgcVerdict(TIMEOUT, certificate={"reason": "timeout"}, millis=_elapsed_ms(t0))
    if cols is None:
        cert = {
            "reason": "contracted multigraph is a generalized snark",
            "multigraph": [[u, v] for _, u, v in con.multigraph.edges],
        }
        return EgcVerdict(IMPOSSIBLE, certificate=cert, millis=_elapsed_ms(t0))
    col = lift_coloring(g, con, cols)
    if verify_egc(g, col):
        raise AssertionError("lifted coloring is not an egc")
    return EgcVerdict(COLORED, col, {"via": "triangle contraction"}, millis=_elapsed_ms(t0))


def girth_cycle_incidence_graph(g: Graph, cycles: Optional[GirthCycleSet] = None) -> Graph:
    """Bipartite graph: vertices 0..m-1 are edges of g, m.. are girth cycles."""
    if cycles is None:
        cycles = enumerate_girth_cycles(g)
    pairs = [(e, g.m + ci) for ci, es in enumerate(cycles.edge_sets) for e in es]
    return Graph.build(g.m + len(cycles), pairs, f"GA({g.name})", {"parts": [g.m, len(cycles)]})
