"""Constructors for the graph families studied here.

Every constructor returns a :class:`~egc.graph_core.Graph` whose ``meta``
carries a ``provenance`` record (family name and parameters). Families that
come with a cycle decomposition return a :class:`CycleDecomposition`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from egc.graph_core import (
    Graph,
    GraphError,
    Multigraph,
    Signature,
    cycles_of_length,
    girth,
    proper_coloring_search,
    signature,
)

TORUS = "torus"
KLEIN = "klein"


def _prov(family: str, **params) -> dict:
    return {"provenance": {"family": family, "params": params}}


# ---------------------------------------------------------------------------
# square-tessellation cutouts


@dataclass(frozen=True)
class CutoutSpec:
    surface: str
    r: int
    t: int
    s: int = 0

    def __post_init__(self) -> None:
        if self.surface not in (TORUS, KLEIN):
            raise GraphError(f"unknown surface {self.surface!r}")
        if not (0 < self.t <= self.r and 0 <= self.s < self.r):
            raise GraphError("cutout needs 0 < t <= r and 0 <= s < r")
        if self.surface == KLEIN and self.s != 0:
            raise GraphError("Klein-bottle cutouts take s = 0")


def _simple_or_degenerate(n: int, pairs: Sequence[Tuple[int, int]], name: str, meta: dict) -> Graph:
    norm = [(min(u, v), max(u, v)) for u, v in pairs]
    if any(u == v for u, v in norm) or len(set(norm)) != len(norm):
        raise GraphError("degenerate cutout")
    return Graph.build(n, norm, name, meta)


def cutout_arcs(spec: CutoutSpec) -> List[Tuple[int, int, bool]]:
    """Edges of a cutout as (tail, head, horizontal) in construction coordinates.

    Vertex (i, j) has index j*r + i. A horizontal arc steps right; the other
    arc steps up (torus) or up-right (Klein bottle).

    Torus: the top row is glued to the bottom one shifted by s.
    Klein bottle: top and bottom are glued directly; the right border is glued
    to the left one reversed, so stepping right from column r-1 lands on
    (0, -j mod t).
    """
    r, t, s = spec.r, spec.t, spec.s
    arcs = []
    if spec.surface == TORUS:
        idx = lambda i, j: j * r + (i % r)
        for j in range(t):
            for i in range(r):
                arcs.append((idx(i, j), idx(i + 1, j), True))
                if j < t - 1:
                    arcs.append((idx(i, j), idx(i, j + 1), False))
                else:
                    arcs.append((idx(i, j), idx(i + s, 0), False))
        return arcs
    if r % 2:
        raise GraphError("Klein-bottle cutout needs even r")
    idx = lambda i, j: (j % t) * r + i
    for j in range(t):
        for i in range(r):
            for di, dj in ((1, 0), (1, 1)):
                a, b = i + di, j + dj
                if a == r:
                    a, b = 0, -b
                arcs.append((idx(i, j), idx(a, b), dj == 0))
    return arcs


def torus44(spec: CutoutSpec) -> Graph:
    """The toroidal quotient {4,4}_{r,t}^s; vertex (i, j) has index j*r + i."""
    if spec.surface != TORUS:
        raise GraphError("torus44 needs a torus cutout")
    r, t, s = spec.r, spec.t, spec.s
    pairs = [(a, b) for a, b, _ in cutout_arcs(spec)]
    meta = _prov("torus44", r=r, t=t, s=s)
    return _simple_or_degenerate(r * t, pairs, f"{{4,4}}_{{{r},{t}}}^{s}", meta)


def klein44(spec: CutoutSpec) -> Graph:
    """Klein-bottle analogue of the torus cutout: horizontal edges plus (+1,+1) diagonals."""
    if spec.surface != KLEIN:
        raise GraphError("klein44 needs a Klein-bottle cutout")
    r, t = spec.r, spec.t
    pairs = [(a, b) for a, b, _ in cutout_arcs(spec)]
    meta = _prov("klein44", r=r, t=t, s=0)
    return _simple_or_degenerate(r * t, pairs, f"[4,4]_{{{r},{t}}}^0", meta)


def cutout(spec: CutoutSpec) -> Graph:
    return torus44(spec) if spec.surface == TORUS else klein44(spec)


# ---------------------------------------------------------------------------
# circulants, wreaths, doubles, prisms


def circulant(n: int, i: int, j: int) -> Graph:
    """Cayley graph of Z_n with connection set {+-i, +-j}."""
    if not (n > 6 and 1 <= i < j and 2 * j < n and math.gcd(math.gcd(n, i), j) == 1):
        raise GraphError("circulant needs n > 6, 1 <= i < j < n/2, gcd(n,i,j) = 1")
    pairs = {(min(x, (x + d) % n), max(x, (x + d) % n)) for x in range(n) for d in (i, j)}
    return Graph.build(n, pairs, f"C_{n}({i},{j})", _prov("circulant", n=n, i=i, j=j))


def wreath(n: int) -> Graph:
    """W(n,2): vertex (v_i, b) has index 2*i + b."""
    if n < 4:
        raise GraphError("wreath needs n >= 4")
    pairs = [
        (2 * i + a, 2 * ((i + 1) % n) + b) for i in range(n) for a in (0, 1) for b in (0, 1)
    ]
    return Graph.build(2 * n, pairs, f"W({n},2)", _prov("wreath", n=n))


def subdivided_double(g: Graph) -> Graph:
    """Vertices (v,0) -> v, (v,1) -> n+v, edge e -> 2n+e."""
    if g.regular_degree() != 4:
        raise GraphError("subdivided double needs a 4-regular graph")
    n = g.n
    pairs = []
    for e, (u, v) in enumerate(g.edges):
        for x in (u, v):
            pairs.append((x, 2 * n + e))
            pairs.append((n + x, 2 * n + e))
    return Graph.build(2 * n + g.m, pairs, f"D({g.name})", _prov("subdivided_double", base=g.name))


def prism(g: Graph) -> Graph:
    """K_2 x g: (0,v) -> v and (1,v) -> n+v."""
    n = g.n
    pairs = [(u, v) for u, v in g.edges] + [(n + u, n + v) for u, v in g.edges]
    pairs += [(v, n + v) for v in range(n)]
    return Graph.build(2 * n, pairs, f"Prism({g.name})", _prov("prism", base=g.name))


def hypercube(d: int) -> Graph:
    n = 1 << d
    pairs = [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)]
    return Graph.build(n, pairs, f"Q{d}", _prov("hypercube", d=d))


# ---------------------------------------------------------------------------
# triangle replacement


@dataclass(frozen=True)
class NeighborhoodLabeling:
    """Labels in {1,2,3} on arcs ``(edge position, tail vertex)`` of a cubic multigraph."""

    base: Multigraph
    arcs: Mapping[Tuple[int, int], int]

    def __post_init__(self) -> None:
        if not self.base.is_cubic():
            raise GraphError("labeling needs a cubic multigraph")
        for v, inc in enumerate(self.base.incident):
            labels = sorted(self.arcs[(pos, v)] for pos in inc)
            if labels != [1, 2, 3]:
                raise GraphError(f"labels at vertex {v} are {labels}, not a bijection onto 1..3")

    def label(self, pos: int, tail: int) -> int:
        return self.arcs[(pos, tail)]

    def is_symmetric(self) -> bool:
        return all(
            self.arcs[(pos, u)] == self.arcs[(pos, v)] for pos, (_, u, v) in enumerate(self.base.edges)
        )

    def edge_colors(self) -> List[int]:
        """Per-edge label; only meaningful for symmetric labelings."""
        if not self.is_symmetric():
            raise GraphError("labeling is not symmetric")
        return [self.arcs[(pos, u)] for pos, (_, u, _v) in enumerate(self.base.edges)]

    @classmethod
    def from_edge_colors(cls, base: Multigraph, colors: Sequence[int]) -> "NeighborhoodLabeling":
        arcs = {}
        for pos, (_, u, v) in enumerate(base.edges):
            arcs[(pos, u)] = colors[pos]
            arcs[(pos, v)] = colors[pos]
        return cls(base, arcs)

    @classmethod
    def positional(cls, base: Multigraph) -> "NeighborhoodLabeling":
        """Label the arcs at each vertex 1, 2, 3 in edge order (not necessarily symmetric)."""
        arcs = {}
        for v, inc in enumerate(base.incident):
            # a parallel pair visits v twice only for loops, which are excluded
            for lab, pos in enumerate(inc, start=1):
                arcs[(pos, v)] = lab
        return cls(base, arcs)


def three_edge_coloring(m: Multigraph, timeout: Optional[float] = 60.0):
    """Proper 3-edge-coloring of a cubic multigraph as a list, None if none, 'timeout' on timeout."""
    from egc import _search

    prob = _search.Problem(len(m.edges), 3, tuple(tuple(x) for x in m.incident), tuple(range(len(m.edges))))
    fixed = {pos: i + 1 for i, pos in enumerate(m.incident[0])} if m.n else {}
    out = _search.solve(prob, fixed, timeout)
    if out.status == "timeout":
        return "timeout"
    return out.values if out.status == "sat" else None


def default_labeling(m: Multigraph) -> NeighborhoodLabeling:
    """Symmetric labeling from a 3-edge-coloring when one exists, else positional."""
    cols = three_edge_coloring(m, None)
    if isinstance(cols, list):
        return NeighborhoodLabeling.from_edge_colors(m, cols)
    return NeighborhoodLabeling.positional(m)


def nabla(m: Multigraph, rho: Optional[NeighborhoodLabeling] = None) -> Graph:
    """Triangle replacement: vertex (u, i) -> 3u + i - 1."""
    if not m.is_cubic():
        raise GraphError("triangle replacement needs a cubic multigraph")
    if rho is None:
        rho = default_labeling(m)
    if rho.base != m:
        raise GraphError("labeling belongs to a different multigraph")
    pairs = []
    for u in range(m.n):
        pairs += [(3 * u, 3 * u + 1), (3 * u, 3 * u + 2), (3 * u + 1, 3 * u + 2)]
    for pos, (_, u, w) in enumerate(m.edges):
        pairs.append((3 * u + rho.label(pos, u) - 1, 3 * w + rho.label(pos, w) - 1))
    return Graph.build(3 * m.n, pairs, f"Nabla({m.name})", _prov("nabla", base=m.name))


@dataclass(frozen=True)
class NotTriangleReplaced:
    vertex: int
    triangles: int


@dataclass(frozen=True)
class Contraction:
    """Result of contracting the triangles of a cubic graph."""

    multigraph: Multigraph
    labeling: NeighborhoodLabeling
    triangles: Tuple[Tuple[int, int, int], ...]  # vertices of each triangle, sorted
    edge_of: Tuple[int, ...]  # graph edge id of each multigraph edge position


def triangles_at(g: Graph) -> List[List[Tuple[int, int, int]]]:
    out: List[List[Tuple[int, int, int]]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        for w in g.adj[u]:
            if w > v and g.has_edge(v, w):
                tri = (u, v, w)
                for x in tri:
                    out[x].append(tri)
    return out


def nabla_inverse(g: Graph):
    """Contract every triangle; returns :class:`Contraction` or :class:`NotTriangleReplaced`."""
    if g.regular_degree() != 3:
        raise GraphError("triangle contraction needs a cubic graph")
    tris = triangles_at(g)
    for v, ts in enumerate(tris):
        if len(ts) != 1:
            return NotTriangleReplaced(v, len(ts))
    order = sorted({ts[0] for ts in tris})
    tri_id = {}
    slot = {}
    for k, tri in enumerate(order):
        for pos, x in enumerate(tri):
            tri_id[x] = k
            slot[x] = pos + 1
    edges = []
    arcs = {}
    edge_of = []
    for e, (u, v) in enumerate(g.edges):
        if tri_id[u] == tri_id[v]:
            continue
        pos = len(edges)
        edges.append((pos, tri_id[u], tri_id[v]))
        arcs[(pos, tri_id[u])] = slot[u]
        arcs[(pos, tri_id[v])] = slot[v]
        edge_of.append(e)
    m = Multigraph(len(order), tuple(edges), f"Contract({g.name})")
    rho = NeighborhoodLabeling(m, arcs)
    if not rho.is_symmetric():
        cols = three_edge_coloring(m, None)
        if isinstance(cols, list):
            rho = NeighborhoodLabeling.from_edge_colors(m, cols)
    return Contraction(m, rho, tuple(order), tuple(edge_of))


# ---------------------------------------------------------------------------
# cycle decompositions and partial line graphs


@dataclass(frozen=True)
class CycleDecomposition:
    """A 4-regular graph with its edges partitioned into cycles.

    ``classes`` optionally labels each cycle "R" (red) or "G" (green).
    """

    base: Graph
    cycles: Tuple[Tuple[int, ...], ...]
    classes: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.base.regular_degree() != 4:
            raise GraphError("cycle decomposition needs a 4-regular base")
        owner: Dict[int, int] = {}
        for ci, cyc in enumerate(self.cycles):
            if len(cyc) < 3 or len(set(cyc)) != len(cyc):
                raise GraphError(f"cycle {ci} is not a simple cycle")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not self.base.has_edge(a, b):
                    raise GraphError(f"cycle {ci} uses non-edge {(a, b)}")
                e = self.base.eid(a, b)
                if e in owner:
                    raise GraphError(f"edge {self.base.edges[e]} lies in two cycles")
                owner[e] = ci
        if len(owner) != self.base.m:
            raise GraphError("cycles do not cover every edge")
        if self.classes is not None:
            if len(self.classes) != len(self.cycles):
                raise GraphError("one class per cycle")
            for v in range(self.base.n):
                seen = sorted(self.classes[owner[e]] for e in self.base.incident[v])
                if seen != ["G", "G", "R", "R"]:
                    raise GraphError(f"vertex {v} is not on exactly one red and one green cycle")

    def cycle_of_edge(self) -> List[int]:
        owner = [0] * self.base.m
        for ci, cyc in enumerate(self.cycles):
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                owner[self.base.eid(a, b)] = ci
        return owner


def partial_line_graph(cd: CycleDecomposition) -> Graph:
    """Vertices are base edges; adjacent iff sharing a vertex without being opposite there."""
    g = cd.base
    owner = cd.cycle_of_edge()
    pairs = set()
    for v in range(g.n):
        inc = g.incident[v]
        for a, b in itertools.combinations(inc, 2):
            if owner[a] != owner[b]:
                pairs.add((a, b))
    name = f"P({g.name})"
    return Graph.build(g.m, pairs, name, _prov("partial_line_graph", base=g.name))


def wreath_decomposition(n: int) -> CycleDecomposition:
    """The 4-cycles ((v_i,0),(v_{i+1},0),(v_i,1),(v_{i+1},1)) of W(n,2)."""
    if n <= 4:
        raise GraphError("wreath decomposition needs n > 4")
    g = wreath(n)
    cycles = tuple(
        (2 * i, 2 * ((i + 1) % n), 2 * i + 1, 2 * ((i + 1) % n) + 1) for i in range(n)
    )
    classes = tuple("G" if i % 2 == 0 else "R" for i in range(n)) if n % 2 == 0 else None
    return CycleDecomposition(g, cycles, classes)


def _orbit_cycle(n: int, step: int, start: int) -> Tuple[int, ...]:
    out = [start]
    x = (start + step) % n
    while x != start:
        out.append(x)
        x = (x + step) % n
    return tuple(out)


def _step_two_factor(n: int, step: int) -> List[Tuple[int, ...]]:
    seen = set()
    cycles = []
    for s in range(n):
        if s not in seen:
            c = _orbit_cycle(n, step, s)
            seen.update(c)
            cycles.append(c)
    return cycles


def _check_barrel_r(n: int, r: int) -> None:
    if (r * r) % n not in (1, n - 1):
        raise GraphError(f"need r^2 = +-1 mod n (r={r}, n={n})")
    if r % n in (1, n - 1):
        raise GraphError(f"need r != +-1 mod n (r={r}, n={n})")
    if not (0 <= r and 2 * r < n):
        raise GraphError(f"need 0 <= r < n/2 (r={r}, n={n})")


def _assemble_barrel(
    columns: Sequence[Sequence[Tuple[int, ...]]], n: int, mutant: bool, name: str, meta: dict
) -> CycleDecomposition:
    """Columns i of green cycles (over Z_n) joined by red column cycles; vertex (i,j) -> i*n + j."""
    ell = len(columns)
    idx = lambda i, j: i * n + j % n
    cycles: List[Tuple[int, ...]] = []
    classes: List[str] = []
    if mutant:
        for j in range(n // 2):
            cycles.append(tuple(idx(i, j) for i in range(ell)) + tuple(idx(i, j + n // 2) for i in range(ell)))
            classes.append("R")
    else:
        for j in range(n):
            cycles.append(tuple(idx(i, j) for i in range(ell)))
            classes.append("R")
    for i, col in enumerate(columns):
        for cyc in col:
            cycles.append(tuple(idx(i, j) for j in cyc))
            classes.append("G")
    pairs = []
    for cyc in cycles:
        pairs += list(zip(cyc, cyc[1:] + cyc[:1]))
    norm = [(min(a, b), max(a, b)) for a, b in pairs]
    if len(set(norm)) != len(norm) or any(a == b for a, b in norm):
        raise GraphError("barrel cycles overlap")
    g = Graph.build(ell * n, norm, name, meta)
    return CycleDecomposition(g, tuple(cycles), tuple(classes))


def barrel(k: int, n: int, r: int) -> CycleDecomposition:
    """Br(k, n; r): red columns ((0,j),...,(k-1,j)), green (i,j) ~ (i, j +- r^i)."""
    if k < 4 or k % 2:
        raise GraphError("barrel needs even k >= 4")
    if n < 5:
        raise GraphError("barrel needs n >= 5")
    _check_barrel_r(n, r)
    columns = [_step_two_factor(n, pow(r, i, n)) for i in range(k)]
    return _assemble_barrel(columns, n, False, f"Br({k},{n};{r})", _prov("barrel", k=k, n=n, r=r))


def mutant_barrel(k: int, n: int, r: int) -> CycleDecomposition:
    """MBr(k, n; r): red path closed by (k-1,j) ~ (0, j + n/2)."""
    if k < 2 or k % 2:
        raise GraphError("mutant barrel needs even k >= 2")
    if n < 6 or n % 2:
        raise GraphError("mutant barrel needs even n >= 6")
    _check_barrel_r(n, r)
    columns = [_step_two_factor(n, pow(r, i, n)) for i in range(k)]
    return _assemble_barrel(columns, n, True, f"MBr({k},{n};{r})", _prov("mutant_barrel", k=k, n=n, r=r))


def _factor_edges(factor: Sequence[Sequence[int]]) -> frozenset:
    return frozenset(
        (min(a, b), max(a, b)) for cyc in factor for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1]))
    )


def generalized_barrel(cycle_list: Sequence[Sequence[Sequence[int]]], mutant: bool = False) -> CycleDecomposition:
    """Br(l, G^n) or MBr(l, G^n) from a cyclic list of 2-factors of K_n."""
    ell = len(cycle_list)
    if ell < 3:
        raise GraphError("generalized barrel needs at least 3 columns")
    n = sum(len(c) for c in cycle_list[0])
    for i, factor in enumerate(cycle_list):
        verts = sorted(v for cyc in factor for v in cyc)
        if verts != list(range(n)) or any(len(c) < 3 for c in factor):
            raise GraphError(f"column {i} is not a 2-factor of K_{n}")
    for i in range(ell):
        if _factor_edges(cycle_list[i]) == _factor_edges(cycle_list[(i + 1) % ell]):
            raise GraphError(f"columns {i} and {(i + 1) % ell} use the same 2-factor")
    if mutant and n % 2:
        raise GraphError("mutant generalized barrel needs even n")
    columns = [[tuple(c) for c in factor] for factor in cycle_list]
    fam = "mutant_generalized_barrel" if mutant else "generalized_barrel"
    name = f"{'MBr' if mutant else 'Br'}({ell},F^{n})"
    meta = _prov(fam, columns=[[list(c) for c in f] for f in columns])
    return _assemble_barrel(columns, n, mutant, name, meta)


# 2-factorizations used with the generalized barrels
K7_FACTORIZATIONS: Tuple[Tuple[Tuple[Tuple[int, ...], ...], ...], ...] = (
    (((0, 1, 2, 3, 4, 5, 6),), ((0, 2, 4, 6, 1, 3, 5),), ((0, 3, 6, 2, 5, 1, 4),)),
    (((0, 1, 5, 2, 4, 3, 6),), ((1, 2, 0, 3, 5, 4, 6),), ((2, 3, 1, 4, 0, 5, 6),)),
    (((0, 1, 6), (2, 3, 4, 5)), ((0, 3, 1, 5), (2, 4, 6)), ((0, 2, 1, 4), (3, 5, 6))),
)
K7_ALTERNATIVE = (((0, 1, 2, 3, 4, 5, 6),), ((0, 3, 5, 1, 6, 2, 4),), ((0, 2, 5), (1, 3, 6, 4)))
F9_CIRCULANT = tuple(tuple(_step_two_factor(9, d)) for d in (1, 2, 3, 4))
F8_MUTANT = (((0, 1, 2, 3, 4, 5, 6, 7),), ((0, 2, 4, 6), (1, 3, 5, 7)), ((0, 3, 6, 1, 4, 7, 2, 5),))


# ---------------------------------------------------------------------------
# named graphs


def _from_nx(h: nx.Graph, name: str) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.build(h.number_of_nodes(), h.edges(), name)


def _lcf(n: int, shifts: Sequence[int], reps: int, name: str) -> Graph:
    return _from_nx(nx.LCF_graph(n, list(shifts), reps), name)


def truncate(g: Graph, name: str) -> Graph:
    """Vertex truncation of a polyhedral graph whose vertex links are cycles.

    Each vertex v becomes a copy of its open neighbourhood, arranged as the
    cycle it induces; each edge uv joins the copy of u at v to the copy of v at u.
    """
    arcs = {}
    for v in range(g.n):
        for w in g.adj[v]:
            arcs[(v, w)] = len(arcs)
    pairs = []
    for v in range(g.n):
        nb = g.adj[v]
        for a, b in itertools.combinations(nb, 2):
            if g.has_edge(a, b):
                pairs.append((arcs[(v, a)], arcs[(v, b)]))
        for w in nb:
            if v < w:
                pairs.append((arcs[(v, w)], arcs[(w, v)]))
    return Graph.build(len(arcs), pairs, name)


def _coxeter() -> Graph:
    lines = {frozenset(((i) % 7, (i + 1) % 7, (i + 3) % 7)) for i in range(7)}
    verts = [frozenset(c) for c in itertools.combinations(range(7), 3) if frozenset(c) not in lines]
    verts.sort(key=sorted)
    pairs = [(a, b) for a, b in itertools.combinations(range(len(verts)), 2) if not verts[a] & verts[b]]
    return Graph.build(len(verts), pairs, "coxeter")


def _heawood_complement() -> Graph:
    # +j -> j, -j -> 7 + j
    pairs = [(j, 7 + (j + d) % 7) for j in range(7) for d in (0, 2, 3, 4)]
    return Graph.build(14, pairs, "heawood-complement")


def _cayley_s4(gens: Sequence[Tuple[int, int]], name: str) -> Graph:
    perms = sorted(itertools.permutations(range(4)))
    index = {p: i for i, p in enumerate(perms)}
    pairs = set()
    for p in perms:
        for a, b in gens:
            q = list(p)
            q[a], q[b] = q[b], q[a]
            i, j = index[p], index[tuple(q)]
            pairs.add((min(i, j), max(i, j)))
    return Graph.build(24, pairs, name)


AW_LETTERS = "ABCD"
# representative colored edges; each generates the orbit (Xa,Yb) -> (X(a+2m),Y(b+2m))
AW_REPRESENTATIVES: Tuple[Tuple[int, Tuple[str, str]], ...] = (
    (1, ("A0", "C7")), (1, ("A1", "C2")), (1, ("B0", "D1")), (1, ("B1", "D2")),
    (2, ("A0", "C1")), (2, ("A1", "C0")), (2, ("B0", "B3")), (2, ("D0", "D1")),
    (3, ("A0", "D6")), (3, ("A1", "B4")), (3, ("B1", "C6")), (3, ("C1", "D3")),
    (4, ("A0", "B3")), (4, ("A1", "D7")), (4, ("B0", "C5")), (4, ("C0", "D2")),
    (5, ("A0", "C6")), (5, ("A1", "C7")), (5, ("B0", "B5")), (5, ("D1", "D2")),
)


def aw_vertex(label: str) -> int:
    return AW_LETTERS.index(label[0]) * 8 + int(label[1:]) % 8


def armanios_wells_orbits() -> List[Tuple[int, Tuple[int, int]]]:
    """(color, edge) for all 80 edges obtained by closing the representatives mod 4."""
    out = []
    for color, (x, y) in AW_REPRESENTATIVES:
        for m in range(4):
            u = AW_LETTERS.index(x[0]) * 8 + (int(x[1:]) + 2 * m) % 8
            v = AW_LETTERS.index(y[0]) * 8 + (int(y[1:]) + 2 * m) % 8
            out.append((color, (min(u, v), max(u, v))))
    return out


def _armanios_wells() -> Graph:
    return Graph.build(32, [e for _, e in armanios_wells_orbits()], "armanios-wells")


def _sylvester() -> Graph:
    hs = nx.convert_node_labels_to_integers(nx.hoffman_singleton_graph(), ordering="sorted")
    u, v = min(tuple(sorted(e)) for e in hs.edges())
    far = [x for x in hs.nodes if x not in (u, v) and not hs.has_edge(x, u) and not hs.has_edge(x, v)]
    return _from_nx(hs.subgraph(far).copy(), "sylvester")


PETERSEN_EDGES = (
    (1, 2), (1, 3), (1, 4), (2, 5), (2, 8), (3, 6), (3, 9), (4, 7), (4, 10),
    (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (5, 10),
)


def petersen_labeled() -> Graph:
    """Petersen graph on v_1..v_10 (index i-1): a 6-cycle v5..v10 whose opposite
    pairs {5,8}, {6,9}, {7,10} hang from the neighbours 2, 3, 4 of v1."""
    return Graph.build(10, [(a - 1, b - 1) for a, b in PETERSEN_EDGES], "petersen")


def dodecahedron_labeled() -> Graph:
    """Double cover of the labelled Petersen graph: u_i -> i-1, w_i -> 10+i-1.

    Petersen edges other than 5-6, 7-8, 9-10 lift crosswise (u_i w_i', u_i' w_i);
    those three lift straight (u_i u_i+1, w_i w_i+1).
    """
    straight = {(5, 6), (7, 8), (9, 10)}
    pairs = []
    for a, b in PETERSEN_EDGES:
        if (a, b) in straight:
            pairs += [(a - 1, b - 1), (10 + a - 1, 10 + b - 1)]
        else:
            pairs += [(a - 1, 10 + b - 1), (b - 1, 10 + a - 1)]
    return Graph.build(20, pairs, "dodecahedron")


@dataclass(frozen=True)
class CatalogEntry:
    build: Callable[[], Graph]
    n: int
    degree: int
    girth: object
    signature: Optional[Tuple[int, ...]] = None
    girth_cycles: Optional[int] = None
    note: str = ""


CATALOG: Dict[str, CatalogEntry] = {
    "k4": CatalogEntry(lambda: _from_nx(nx.complete_graph(4), "k4"), 4, 3, 3, (2, 2, 2), 4),
    "k5": CatalogEntry(lambda: _from_nx(nx.complete_graph(5), "k5"), 5, 4, 3, (3, 3, 3, 3), 10),
    "k33": CatalogEntry(lambda: _from_nx(nx.complete_bipartite_graph(3, 3), "k33"), 6, 3, 4, (4, 4, 4), 9),
    "k44": CatalogEntry(lambda: _from_nx(nx.complete_bipartite_graph(4, 4), "k44"), 8, 4, 4, (9, 9, 9, 9), 36),
    "q3": CatalogEntry(lambda: hypercube(3).renamed("q3"), 8, 3, 4, (2, 2, 2), 6),
    "q4": CatalogEntry(lambda: hypercube(4).renamed("q4"), 16, 4, 4, (3, 3, 3, 3), 24),
    "petersen": CatalogEntry(petersen_labeled, 10, 3, 5, (4, 4, 4), 12),
    "dodecahedron": CatalogEntry(dodecahedron_labeled, 20, 3, 5, (2, 2, 2), 12),
    "icosahedron": CatalogEntry(lambda: _from_nx(nx.icosahedral_graph(), "icosahedron"), 12, 5, 3),
    "octahedron": CatalogEntry(lambda: _from_nx(nx.octahedral_graph(), "octahedron"), 6, 4, 3),
    "coxeter": CatalogEntry(_coxeter, 28, 3, 7, (4, 4, 4)),
    "heawood": CatalogEntry(lambda: _from_nx(nx.heawood_graph(), "heawood"), 14, 3, 6),
    "heawood-complement": CatalogEntry(_heawood_complement, 14, 4, 4, (3, 3, 3, 3), 21),
    "desargues": CatalogEntry(lambda: _from_nx(nx.desargues_graph(), "desargues"), 20, 3, 6),
    "nauru": CatalogEntry(lambda: _lcf(24, [5, -9, 7, -7, 9, -5], 4, "nauru"), 24, 3, 6),
    "dyck": CatalogEntry(lambda: _lcf(32, [5, -5, 13, -13], 8, "dyck"), 32, 3, 6),
    "pappus": CatalogEntry(lambda: _from_nx(nx.pappus_graph(), "pappus"), 18, 3, 6),
    "tutte-8-cage": CatalogEntry(lambda: _lcf(30, [-13, -9, 7, -7, 9, 13], 5, "tutte-8-cage"), 30, 3, 8),
    "truncated-octahedron": CatalogEntry(
        lambda: truncate(_from_nx(nx.octahedral_graph(), "octahedron"), "truncated-octahedron"), 24, 3, 4, (1, 1, 0)
    ),
    "star-graph-st4": CatalogEntry(lambda: _cayley_s4([(0, 1), (0, 2), (0, 3)], "star-graph-st4"), 24, 3, 6),
    "truncated-icosahedron": CatalogEntry(
        lambda: truncate(_from_nx(nx.icosahedral_graph(), "icosahedron"), "truncated-icosahedron"),
        60, 3, 5, (1, 1, 0), 12,
    ),
    "folkman": CatalogEntry(
        lambda: subdivided_double(_from_nx(nx.complete_graph(5), "k5")).renamed("folkman"), 20, 4, 4, (3, 3, 3, 3)
    ),
    "armanios-wells": CatalogEntry(_armanios_wells, 32, 5, 5, (12, 12, 12, 12, 12), 192),
    "hoffman-singleton": CatalogEntry(
        lambda: _from_nx(nx.hoffman_singleton_graph(), "hoffman-singleton"), 50, 7, 5
    ),
    "sylvester": CatalogEntry(_sylvester, 36, 5, 5, (8, 8, 8, 8, 8)),
}


@lru_cache(maxsize=None)
def named(name: str) -> Graph:
    """A catalogued graph; its invariants are recomputed and asserted."""
    if name not in CATALOG:
        raise GraphError(f"unknown graph {name!r}; known: {', '.join(sorted(CATALOG))}")
    entry = CATALOG[name]
    g = entry.build()
    if g.n != entry.n or g.regular_degree() != entry.degree:
        raise GraphError(f"{name}: got n={g.n}, degree={g.regular_degree()}")
    gg = girth(g)
    if gg != entry.girth:
        raise GraphError(f"{name}: girth {gg}, expected {entry.girth}")
    if entry.signature is not None or entry.girth_cycles is not None:
        cycles = cycles_of_length(g, int(gg))
        if entry.girth_cycles is not None and len(cycles) != entry.girth_cycles:
            raise GraphError(f"{name}: {len(cycles)} girth cycles, expected {entry.girth_cycles}")
        if entry.signature is not None:
            sig = signature(g)
            if not isinstance(sig, Signature) or sig.entries != entry.signature:
                raise GraphError(f"{name}: signature {sig}, expected {entry.signature}")
    return g.renamed(name, **_prov("named", name=name))


# ---------------------------------------------------------------------------
# barrel towers


PET_STEP_ROWS = {1: (1, 5, 7, 9), 3: (2, 3, 4), 5: (6, 8, 10)}
DOD_STEP_ROWS = {1: (1, 5, 7, 9), 3: (6, 8, 10), 5: (2, 3, 4)}


def _row_step(table: Mapping[int, Sequence[int]]) -> Dict[int, int]:
    return {row: step for step, rows in table.items() for row in rows}


def petersen_barrel(k: int) -> Graph:
    """14k copies of Petersen joined row-wise by steps 1, 3, 5 in Z_{14k}.

    Vertex v_i^j has index 10*j + i - 1.
    """
    if k < 1:
        raise GraphError("k must be positive")
    copies = 14 * k
    base = petersen_labeled()
    steps = _row_step(PET_STEP_ROWS)
    pairs = []
    for j in range(copies):
        pairs += [(10 * j + a, 10 * j + b) for a, b in base.edges]
        for i, step in steps.items():
            pairs.append((10 * j + i - 1, 10 * ((j + step) % copies) + i - 1))
    return Graph.build(10 * copies, pairs, f"PetBarrel({k})", _prov("petersen_barrel", k=k))


def dod_row_cycle(step: int, copies: int) -> List[Tuple[int, int]]:
    """Vertices along an added cycle as (copy, 0 for u / 1 for w).

    Position p maps to q = step*p mod 2*copies, i.e. copy q mod copies on side
    q // copies. Walking the u side first and then the w side with the same
    step instead closes extra 5-cycles between adjacent rows of steps 3 and 5.
    """
    total = 2 * copies
    return [((step * p % total) % copies, (step * p % total) // copies) for p in range(total)]


def dod_barrel(k: int) -> Graph:
    """7k copies of the dodecahedron; row i closes a 14k-cycle through the u_i and w_i.

    Vertex u_i^j -> 20*j + i - 1 and w_i^j -> 20*j + 10 + i - 1.
    """
    if k < 1:
        raise GraphError("k must be positive")
    copies = 7 * k
    base = dodecahedron_labeled()
    steps = _row_step(DOD_STEP_ROWS)
    pairs = []
    for j in range(copies):
        pairs += [(20 * j + a, 20 * j + b) for a, b in base.edges]
    for i, step in steps.items():
        seq = [20 * c + 10 * side + i - 1 for c, side in dod_row_cycle(step, copies)]
        pairs += list(zip(seq, seq[1:] + seq[:1]))
    return Graph.build(20 * copies, pairs, f"DodBarrel({k})", _prov("dod_barrel", k=k))


@lru_cache(maxsize=None)
def ti_step_classes() -> Tuple[int, ...]:
    """Step (1, 3 or 5) per truncated-icosahedron vertex: a proper 3-coloring.

    Adjacent vertices with equal steps would close 4-cycles across copies, so
    any proper vertex 3-coloring works; the greedy order by index is used.
    """
    ti = named("truncated-icosahedron")
    h = nx.Graph(ti.edges)
    order = sorted(h.nodes)
    # smallest-last greedy keeps this to three colors on this graph
    col = nx.coloring.greedy_color(h, strategy="smallest_last")
    if max(col.values()) > 2:
        col = _three_color_search(ti)
    return tuple((1, 3, 5)[col[v]] for v in order)


def _three_color_search(g: Graph) -> Dict[int, int]:
    colors: Dict[int, int] = {}

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(3):
            if all(colors.get(w) != c for w in g.adj[v]):
                colors[v] = c
                if go(v + 1):
                    return True
                del colors[v]
        return False

    if not go(0):
        raise GraphError("no proper 3-coloring")
    return colors


def ti_barrel(k: int) -> Graph:
    """14k copies of the truncated icosahedron joined by steps 1, 3, 5 in Z_{14k}.

    Vertex x of copy j has index 60*j + x.
    """
    if k < 1:
        raise GraphError("k must be positive")
    copies = 14 * k
    base = named("truncated-icosahedron")
    steps = ti_step_classes()
    pairs = []
    for j in range(copies):
        pairs += [(60 * j + a, 60 * j + b) for a, b in base.edges]
        for x in range(60):
            pairs.append((60 * j + x, 60 * ((j + steps[x]) % copies) + x))
    return Graph.build(60 * copies, pairs, f"TIBarrel({k})", _prov("ti_barrel", k=k))


# ---------------------------------------------------------------------------
# hexagonal tori


@dataclass(frozen=True)
class HexTorus:
    graph: Graph
    m: int
    n: int
    sigma: int
    periods: Tuple[int, int, int]

    @property
    def even_periods(self) -> bool:
        return all(p % 2 == 0 for p in self.periods)


def _lattice_order(d: Tuple[int, int], m: int, n: int, sigma: int) -> int:
    for k in range(1, m * n + 1):
        x, y = k * d[0], k * d[1]
        if y % n == 0 and (x - (y // n) * sigma) % m == 0:
            return k
    raise GraphError("direction of infinite order")


def hex_torus(m: int, n: int, sigma: int = 0, allow_small_girth: bool = False) -> HexTorus:
    """Quotient of the hexagonal tiling by the translations (m,0) and (sigma,n).

    Hexagons sit at lattice points (u,v); vertex (u,v,p) has index 2*(v*m+u)+p and
    black vertex (u,v,0) meets white (u,v,1), (u-1,v,1), (u,v-1,1). The periods are
    the orders of the three hexagon-row directions (1,0), (0,1), (1,-1).
    """
    if m < 1 or n < 1:
        raise GraphError("hex torus needs m, n >= 1")
    sigma %= m

    def idx(u: int, v: int, p: int) -> int:
        q, v = divmod(v, n)
        u = (u - q * sigma) % m
        return 2 * (v * m + u) + p

    pairs = []
    for v in range(n):
        for u in range(m):
            b = idx(u, v, 0)
            pairs += [(b, idx(u, v, 1)), (b, idx(u - 1, v, 1)), (b, idx(u, v - 1, 1))]
    norm = [(min(a, b), max(a, b)) for a, b in pairs]
    if len(set(norm)) != len(norm):
        raise GraphError("degenerate hexagonal quotient (multiple edges)")
    g = Graph.build(2 * m * n, norm, f"{{6,3}}_({m},{n};{sigma})", _prov("hex_torus", m=m, n=n, sigma=sigma))
    if not allow_small_girth and girth(g) < 6:
        raise GraphError(f"hexagonal quotient ({m},{n};{sigma}) has girth {girth(g)} < 6")
    periods = tuple(_lattice_order(d, m, n, sigma) for d in ((1, 0), (0, 1), (1, -1)))
    return HexTorus(g, m, n, sigma, periods)


def hex_quotients(max_hexagons: int) -> List[HexTorus]:
    """All girth-6 quotients with m*n <= max_hexagons (one per parameter triple)."""
    out = []
    for m in range(1, max_hexagons + 1):
        for n in range(1, max_hexagons // m + 1):
            for sigma in range(m):
                try:
                    out.append(hex_torus(m, n, sigma))
                except GraphError:
                    continue
    return out


def pappus_quotient() -> HexTorus:
    """The 9-hexagon quotient isomorphic to the Pappus graph."""
    target = nx.pappus_graph()
    for h in hex_quotients(9):
        if h.graph.n == 18 and nx.is_isomorphic(nx.Graph(h.graph.edges), target):
            return h
    raise GraphError("no Pappus quotient found")


def find_hex_quotient(vertices: int, six_cycles: int) -> Optional[HexTorus]:
    """First quotient with the given order and number of 6-cycles, or None."""
    for h in hex_quotients(vertices // 2):
        if h.graph.n == vertices and len(cycles_of_length(h.graph, 6)) == six_cycles:
            return h
    return None


def hex_klein(m: int, n: int) -> Graph:
    """Brick-wall hexagonal tessellation of the Klein bottle with m x n hexagons.

    Vertex (x, y), x in Z_{2m}, y in Z_n, has index y*2m + x. Horizontal edges
    join (x, y) and (x+1, y) cyclically; a vertical edge joins (x, y) and
    (x, y+1) when x + y is even. Crossing the top border maps (x, n) to (-x, 0),
    a reflection that keeps the brick pattern when n is even.
    """
    if m < 1 or n < 2 or n % 2:
        raise GraphError("Klein-bottle hexagonal cutout needs m >= 1 and even n >= 2")
    w = 2 * m
    idx = lambda x, y: y * w + x % w
    pairs = []
    for y in range(n):
        for x in range(w):
            pairs.append((idx(x, y), idx(x + 1, y)))
            if (x + y) % 2 == 0:
                pairs.append((idx(x, y), idx(x, y + 1) if y + 1 < n else idx(-x, 0)))
    norm = [(min(a, b), max(a, b)) for a, b in pairs]
    if len(set(norm)) != len(norm) or any(a == b for a, b in norm):
        raise GraphError("degenerate hexagonal Klein-bottle cutout")
    return Graph.build(w * n, norm, f"[6,3]_({m},{n})", _prov("hex_klein", m=m, n=n))


# ---------------------------------------------------------------------------
# small cubic multigraphs and snark examples


def bridged_odd_cycles(k: int) -> Multigraph:
    """Two (2k+1)-cycles joined by a bridge, with k parallel edges added to each."""
    L = 2 * k + 1
    pairs = []
    for side in (0, 1):
        off = side * L
        pairs += [(off + i, off + (i + 1) % L) for i in range(L)]
        # vertices 1..2k get doubled edges pairwise; vertex 0 takes the bridge
        pairs += [(off + 2 * i + 1, off + 2 * i + 2) for i in range(k)]
    pairs.append((0, L))
    return Multigraph.from_pairs(2 * L, pairs, f"bridged-odd-cycles({k})")


def flower_snark(k: int) -> Multigraph:
    """Flower snark J_k (odd k >= 5): vertex a_i, b_i, c_i, d_i -> 4i, 4i+1, 4i+2, 4i+3.

    The b's form a k-cycle and the c's and d's one 2k-cycle that swaps sides once.
    """
    if k < 3 or k % 2 == 0:
        raise GraphError("flower snark needs odd k >= 3")
    a, b, c, d = (lambda i, o=o: 4 * (i % k) + o for o in range(4))
    pairs = []
    for i in range(k):
        pairs += [(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(i + 1))]
        if i < k - 1:
            pairs += [(c(i), c(i + 1)), (d(i), d(i + 1))]
        else:
            pairs += [(c(i), d(0)), (d(i), c(0))]
    return Multigraph.from_pairs(4 * k, pairs, f"J{k}")


def theta() -> Multigraph:
    return Multigraph.from_pairs(2, [(0, 1)] * 3, "theta")


def cubic_multigraphs(max_n: int) -> List[Multigraph]:
    """Connected loopless cubic multigraphs on up to ``max_n`` vertices, up to isomorphism."""
    out: List[Multigraph] = []
    for n in range(2, max_n + 1, 2):
        out.extend(_cubic_multigraphs_n(n))
    return out


def _cubic_multigraphs_n(n: int) -> List[Multigraph]:
    found: Dict[str, List[nx.MultiGraph]] = {}
    result: List[Multigraph] = []
    mult = [[0] * n for _ in range(n)]
    deg = [0] * n
    pairs_order = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def record() -> None:
        h = nx.MultiGraph()
        h.add_nodes_from(range(n))
        for i, j in pairs_order:
            for _ in range(mult[i][j]):
                h.add_edge(i, j)
        if not nx.is_connected(h):
            return
        simple = nx.Graph()
        simple.add_nodes_from(range(n))
        for i, j in pairs_order:
            if mult[i][j]:
                simple.add_edge(i, j, w=mult[i][j])
        key = nx.weisfeiler_lehman_graph_hash(simple, edge_attr="w")
        bucket = found.setdefault(key, [])
        em = nx.algorithms.isomorphism.numerical_edge_match("w", 0)
        for other in bucket:
            if nx.is_isomorphic(simple, other, edge_match=em):
                return
        bucket.append(simple)
        pairs = [(i, j) for i, j in pairs_order for _ in range(mult[i][j])]
        result.append(Multigraph.from_pairs(n, pairs, f"cubic-multigraph-{n}-{len(result)}"))

    # fill vertex by vertex: choose multiplicities from vertex i to later vertices.
    # Only BFS-ordered labellings are generated: a vertex first reached from i
    # must come before every other vertex first reached later, so the vertices
    # i links to among the untouched ones form a prefix of them. Every connected
    # multigraph has such a labelling.
    def fill(i: int) -> None:
        if i == n:
            record()
            return
        if i > 0 and deg[i] == 0:
            return
        need = 3 - deg[i]
        if need == 0:
            fill(i + 1)
            return
        later = list(range(i + 1, n))
        fresh = [j for j in later if deg[j] == 0]

        def distribute(k: int, left: int, skipped_fresh: bool) -> None:
            if left == 0:
                fill(i + 1)
                return
            if k == len(later):
                return
            j = later[k]
            is_fresh = j in fresh
            for c in range(min(left, 3 - deg[j]), -1, -1):
                if c and is_fresh and skipped_fresh:
                    continue
                if c:
                    mult[i][j] = c
                    deg[i] += c
                    deg[j] += c
                distribute(k + 1, left - c, skipped_fresh or (is_fresh and c == 0))
                if c:
                    mult[i][j] = 0
                    deg[i] -= c
                    deg[j] -= c

        distribute(0, need, False)

    fill(0)
    return result
