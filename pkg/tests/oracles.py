"""Independent brute-force references, written without the package's search code."""
from __future__ import annotations

import itertools
import math
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx


def nx_graph(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def girth(g) -> float:
    return nx.girth(nx_graph(g))


def girth_cycle_edge_sets(g) -> Set[FrozenSet[Tuple[int, int]]]:
    """Edge sets of all shortest cycles, via networkx cycle enumeration."""
    h = nx_graph(g)
    gg = nx.girth(h)
    out = set()
    if gg == math.inf:
        return out
    for cyc in nx.simple_cycles(h, length_bound=gg):
        if len(cyc) == gg:
            out.add(frozenset(tuple(sorted((cyc[i], cyc[(i + 1) % gg]))) for i in range(gg)))
    return out


def signature(g) -> Optional[Tuple[int, ...]]:
    """Per-vertex descending girth-cycle counts on incident edges; None if not uniform."""
    count: Dict[Tuple[int, int], int] = {e: 0 for e in g.edges}
    for cyc in girth_cycle_edge_sets(g):
        for e in cyc:
            count[e] += 1
    sigs = set()
    for v in range(g.n):
        sigs.add(tuple(sorted((count[e] for e in g.edges if v in e), reverse=True)))
    return sigs.pop() if len(sigs) == 1 else None


def is_egc(g, colors: Sequence[int], k: int) -> bool:
    """Proper, and every girth cycle sees k distinct colors."""
    col = dict(zip(g.edges, colors))
    for v in range(g.n):
        cs = [col[e] for e in g.edges if v in e]
        if len(cs) != len(set(cs)):
            return False
    return all(len({col[e] for e in cyc}) == k for cyc in girth_cycle_edge_sets(g))


def brute_egc(g, k: int) -> Optional[List[int]]:
    """Plain edge-by-edge backtracking; cycle checks fire when a cycle's last edge is set.

    Edges are taken in BFS order from vertex 0, whose edges get colors 1..k
    (every coloring can be permuted into that form).
    """
    h = nx_graph(g)
    order: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    for u in [0] + [v for _, v in nx.bfs_edges(h, 0)]:
        for v in sorted(h[u]):
            e = (min(u, v), max(u, v))
            if e not in seen:
                seen.add(e)
                order.append(e)
    order += [e for e in g.edges if e not in seen]
    pos = {e: i for i, e in enumerate(order)}
    closing: List[List[List[int]]] = [[] for _ in order]
    for cyc in girth_cycle_edge_sets(g):
        ids = sorted(pos[e] for e in cyc)
        closing[ids[-1]].append(ids)
    at: List[List[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(order):
        at[u].append(i)
        at[v].append(i)
    first = len(at[0])
    colors = [0] * len(order)

    def ok(i: int) -> bool:
        u, v = order[i]
        for w in (u, v):
            if any(j < i and colors[j] == colors[i] for j in at[w]):
                return False
        return all(len({colors[j] for j in ids}) == len(ids) for ids in closing[i])

    def go(i: int) -> bool:
        if i == len(order):
            return True
        for c in ([i + 1] if i < first else range(1, k + 1)):
            colors[i] = c
            if ok(i) and go(i + 1):
                return True
        colors[i] = 0
        return False

    if not go(0):
        return None
    by_edge = dict(zip(order, colors))
    return [by_edge[e] for e in g.edges]


def count_proper_colorings(g, k: int) -> int:
    """All proper k-edge-colorings (tiny graphs only)."""
    total = 0
    for cols in itertools.product(range(1, k + 1), repeat=g.m):
        col = dict(zip(g.edges, cols))
        if all(len({col[e] for e in g.edges if v in e}) == len([e for e in g.edges if v in e]) for v in range(g.n)):
            total += 1
    return total


def two_factor_cycle_lengths(g, colors: Sequence[int], pair: Tuple[int, int]) -> List[int]:
    h = nx.Graph()
    h.add_edges_from(e for e, c in zip(g.edges, colors) if c in pair)
    return sorted(len(c) for c in nx.connected_components(h))


def star_lattice(r: int, t: int, s: int) -> Tuple[int, int, int]:
    """Cycle counts of the three zigzag unions, from the period lattice of the torus.

    The torus is Z^2 modulo the lattice spanned by (r, 0) and (-s, t). A 2-factor
    whose cycles all advance by the step vector d per two edges has
    (r*t) / (2 * order of d) cycles.
    """

    def order(d: Tuple[int, int]) -> int:
        x, y = d
        for k in range(1, 4 * r * t + 1):
            kx, ky = k * x, k * y
            if ky % t == 0:
                q = ky // t
                if (kx + q * s) % r == 0:
                    return k
        raise AssertionError("infinite order")

    n = r * t
    # (12): staircase right/down, (13): vertical, (14): staircase right/up
    a = n // (2 * order((1, -1)))
    b = n // order((0, 1))
    c = n // (2 * order((1, 1)))
    return a, b, c
