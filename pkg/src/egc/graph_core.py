"""Graphs, girth cycles, signatures and proper edge colorings."""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from egc import _search

Edge = Tuple[int, int]
INFINITY = math.inf  # girth of a forest


class GraphError(ValueError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with a sorted edge tuple."""

    n: int
    edges: Tuple[Edge, ...]
    name: str = ""
    meta: Mapping[str, object] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")
            if u > v:
                raise GraphError("edges must be stored as (min, max); use Graph.build")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {(u, v)}")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be sorted; use Graph.build")

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]], name: str = "", meta=None) -> "Graph":
        """Normalize, check and sort an edge list. Duplicates raise."""
        norm = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at {u}")
            norm.append(_norm(u, v))
        if len(set(norm)) != len(norm):
            raise GraphError("duplicate edge")
        return cls(n, tuple(sorted(norm)), name, dict(meta or {}))

    def renamed(self, name: str, **meta) -> "Graph":
        merged = dict(self.meta)
        merged.update(meta)
        return Graph(self.n, self.edges, name, merged)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> Tuple[Tuple[int, ...], ...]:
        nb: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge ids at each vertex, in increasing order."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def eid(self, u: int, v: int) -> int:
        return self.edge_index[_norm(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def regular_degree(self) -> Optional[int]:
        """The common degree, or None if the graph is not regular."""
        if self.n == 0:
            return None
        degs = {len(a) for a in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def to_json(self) -> dict:
        out = {"name": self.name, "n": self.n, "edges": [list(e) for e in self.edges]}
        if self.meta.get("provenance") is not None:
            out["provenance"] = self.meta["provenance"]
        return out

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        meta = {"provenance": data["provenance"]} if "provenance" in data else {}
        return cls.build(data["n"], data["edges"], data.get("name", ""), meta)


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; ``edges`` holds ``(edge_id, u, v)`` with unique ids."""

    n: int
    edges: Tuple[Tuple[int, int, int], ...]
    name: str = ""

    def __post_init__(self) -> None:
        ids = [e[0] for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError("edge ids must be unique")
        for eid, u, v in self.edges:
            if u == v:
                raise GraphError(f"loop on edge {eid}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {eid} out of range")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]], name: str = "") -> "Multigraph":
        return cls(n, tuple((i, int(p[0]), int(p[1])) for i, p in enumerate(pairs)), name)

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, tuple((i, u, v) for i, (u, v) in enumerate(g.edges)), g.name)

    @cached_property
    def incident(self) -> Tuple[Tuple[int, ...], ...]:
        """Positions (into ``edges``) of the edges at each vertex."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for pos, (_, u, v) in enumerate(self.edges):
            inc[u].append(pos)
            inc[v].append(pos)
        return tuple(tuple(x) for x in inc)

    def is_cubic(self) -> bool:
        return all(len(x) == 3 for x in self.incident)


@dataclass(frozen=True)
class Signature:
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.entries) != sorted(self.entries, reverse=True):
            raise ValueError("signature entries must be descending")

    def label(self) -> str:
        """Exponent form, e.g. ``3^2 2^2`` for (3,3,2,2)."""
        parts = []
        i = 0
        e = self.entries
        while i < len(e):
            j = i
            while j < len(e) and e[j] == e[i]:
                j += 1
            parts.append(f"{e[i]}" if j - i == 1 else f"{e[i]}^{j - i}")
            i = j
        return " ".join(parts)


@dataclass(frozen=True)
class NotGirthRegular:
    u: int
    u_signature: Tuple[int, ...]
    v: int
    v_signature: Tuple[int, ...]


@dataclass(frozen=True)
class GirthCycleSet:
    g: int
    cycles: Tuple[Tuple[int, ...], ...]
    edge_sets: Tuple[Tuple[int, ...], ...]  # edge ids of each cycle, sorted

    def __len__(self) -> int:
        return len(self.cycles)

    def per_edge_counts(self, m: int) -> List[int]:
        counts = [0] * m
        for es in self.edge_sets:
            for e in es:
                counts[e] += 1
        return counts


@dataclass(frozen=True)
class EdgeColoring:
    """Colors in ``1..kappa`` parallel to the sorted edge list of a graph."""

    kappa: int
    colors: Tuple[int, ...]

    def __post_init__(self) -> None:
        for c in self.colors:
            if not 1 <= c <= self.kappa:
                raise GraphError(f"color {c} outside 1..{self.kappa}")

    @classmethod
    def from_map(cls, g: Graph, kappa: int, mapping: Mapping[Edge, int]) -> "EdgeColoring":
        norm = {_norm(*e): c for e, c in mapping.items()}
        if set(norm) != set(g.edges):
            missing = set(g.edges) - set(norm)
            extra = set(norm) - set(g.edges)
            raise GraphError(f"coloring domain mismatch: missing {sorted(missing)[:5]}, extra {sorted(extra)[:5]}")
        return cls(kappa, tuple(norm[e] for e in g.edges))

    def as_map(self, g: Graph) -> Dict[Edge, int]:
        return dict(zip(g.edges, self.colors))

    def check_domain(self, g: Graph) -> None:
        if len(self.colors) != g.m:
            raise GraphError(f"coloring has {len(self.colors)} entries, graph has {g.m} edges")

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "EdgeColoring":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["kappa"]), tuple(int(c) for c in data["colors"]))


@dataclass(frozen=True)
class TwoFactorization:
    pairing: Tuple[Tuple[int, int], ...]
    factors: Tuple[Tuple[int, ...], ...]  # edge ids per pair


# ---------------------------------------------------------------------------
# girth and girth cycles


def girth(g: Graph) -> Union[int, float]:
    """Length of a shortest cycle; ``INFINITY`` for a forest."""
    best = INFINITY
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def _bfs_dist(g: Graph, src: int, limit: int) -> Dict[int, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        if dist[x] >= limit:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Least rotation/reflection of a cyclic vertex sequence."""
    k = len(seq)
    best = None
    for s in (list(seq), list(reversed(seq))):
        for i in range(k):
            cand = tuple(s[i:] + s[:i])
            if best is None or cand < best:
                best = cand
    return best


def cycles_of_length(g: Graph, length: int) -> List[Tuple[int, ...]]:
    """All cycles with exactly ``length`` vertices, in canonical form, sorted."""
    adj = g.adj
    out: List[Tuple[int, ...]] = []
    half = length // 2
    for start in range(g.n):
        dist = _bfs_dist(g, start, half)
        path = [start]
        on_path = {start}

        def extend(x: int) -> None:
            d = len(path)
            if d == length:
                if start in adj[x] and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            remaining = length - d
            for y in adj[x]:
                if y <= start or y in on_path:
                    continue
                if dist.get(y, half + 1) > remaining:
                    continue
                path.append(y)
                on_path.add(y)
                extend(y)
                path.pop()
                on_path.discard(y)

        extend(start)
    out.sort()
    return out


def enumerate_girth_cycles(g: Graph) -> GirthCycleSet:
    gg = girth(g)
    if gg == INFINITY:
        raise GraphError("no cycles")
    return cycle_set(g, int(gg))


def cycle_set(g: Graph, length: int) -> GirthCycleSet:
    cycles = cycles_of_length(g, length)
    edge_sets = tuple(
        tuple(sorted(g.eid(c[i], c[(i + 1) % length]) for i in range(length))) for c in cycles
    )
    return GirthCycleSet(length, tuple(cycles), edge_sets)


def vertex_signatures(g: Graph, cycles: Optional[GirthCycleSet] = None) -> List[Tuple[int, ...]]:
    if cycles is None:
        cycles = enumerate_girth_cycles(g)
    counts = cycles.per_edge_counts(g.m)
    return [tuple(sorted((counts[e] for e in g.incident[v]), reverse=True)) for v in range(g.n)]


def signature(g: Graph, cycles: Optional[GirthCycleSet] = None) -> Union[Signature, NotGirthRegular]:
    if g.regular_degree() is None:
        raise GraphError("signature needs a regular graph")
    sigs = vertex_signatures(g, cycles)
    for v in range(1, g.n):
        if sigs[v] != sigs[0]:
            return NotGirthRegular(0, sigs[0], v, sigs[v])
    return Signature(sigs[0])


# ---------------------------------------------------------------------------
# edge colorings


CLASS1 = "Class1"
CLASS2 = "Class2"
UNKNOWN = "Unknown"


def _vertex_problem(groups: Sequence[Sequence[int]], nvars: int, k: int, rank=None) -> _search.Problem:
    if rank is None:
        rank = tuple(range(nvars))
    return _search.Problem(nvars, k, tuple(tuple(x) for x in groups), tuple(rank))


def proper_coloring_search(g: Graph, timeout: Optional[float] = 60.0, jobs: int = 1) -> _search.Outcome:
    """Exact search for a proper k-edge-coloring, k the regular degree."""
    k = g.regular_degree()
    if k is None:
        raise GraphError("chromatic index search needs a regular graph")
    # degree-saturation order: BFS from vertex 0 so constrained edges come first
    order = _bfs_edge_order(g, 0)
    rank = [0] * g.m
    for r, e in enumerate(order):
        rank[e] = r
    prob = _vertex_problem(g.incident, g.m, k, rank)
    fixed = {e: i + 1 for i, e in enumerate(g.incident[0])}
    return _search.solve(prob, fixed, timeout, jobs)


def _bfs_edge_order(g: Graph, root: int) -> List[int]:
    seen_v = {root}
    seen_e = set()
    order = []
    q = deque([root])
    while q:
        x = q.popleft()
        for e in g.incident[x]:
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            u, v = g.edges[e]
            y = v if u == x else u
            if y not in seen_v:
                seen_v.add(y)
                q.append(y)
    order.extend(e for e in range(g.m) if e not in seen_e)
    return order


def chromatic_index_class(g: Graph, timeout: Optional[float] = 60.0, jobs: int = 1) -> str:
    k = g.regular_degree()
    if k and g.n % 2:
        # each color class is a matching of at most (n-1)/2 edges
        return CLASS2
    out = proper_coloring_search(g, timeout, jobs)
    return {"sat": CLASS1, "unsat": CLASS2, "timeout": UNKNOWN}[out.status]


def proper_coloring(g: Graph, timeout: Optional[float] = 60.0) -> Optional[EdgeColoring]:
    out = proper_coloring_search(g, timeout)
    if out.status != "sat":
        return None
    return EdgeColoring(g.regular_degree(), tuple(out.values))


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    c.check_domain(g)
    for inc in g.incident:
        cols = [c.colors[e] for e in inc]
        if len(set(cols)) != len(cols):
            return False
    return True


def is_g_tight(g: Graph, timeout: Optional[float] = 60.0) -> bool:
    k = g.regular_degree()
    if k is None or girth(g) != k:
        return False
    return chromatic_index_class(g, timeout) == CLASS1


def color_class_cycles(g: Graph, edge_ids: Iterable[int]) -> List[List[int]]:
    """Vertex sequences of the cycles of a 2-regular edge subset."""
    nb: Dict[int, List[int]] = {}
    for e in edge_ids:
        u, v = g.edges[e]
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    for x, ys in nb.items():
        if len(ys) != 2:
            raise GraphError(f"vertex {x} has degree {len(ys)} in the factor")
    seen = set()
    cycles = []
    for start in sorted(nb):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, nb[start][0]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = nb[cur]
            prev, cur = cur, (b if a == prev else a)
            if len(cyc) > len(nb):
                raise GraphError("factor walk did not close")
        cycles.append(cyc)
    return cycles


def two_factor_cycles(g: Graph, c: EdgeColoring, pair: Tuple[int, int]) -> List[int]:
    """Sorted cycle lengths of the union of two color classes."""
    if not is_proper(g, c):
        raise GraphError("coloring is not proper")
    a, b = pair
    ids = [e for e, col in enumerate(c.colors) if col in (a, b)]
    return sorted(len(cy) for cy in color_class_cycles(g, ids))


def two_factorization(g: Graph, c: EdgeColoring, pairing: Sequence[Tuple[int, int]]) -> TwoFactorization:
    used = sorted(x for p in pairing for x in p)
    if used != list(range(1, c.kappa + 1)):
        raise GraphError("pairing must partition the colors")
    factors = tuple(tuple(e for e, col in enumerate(c.colors) if col in p) for p in pairing)
    return TwoFactorization(tuple(tuple(p) for p in pairing), factors)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(_bfs_dist(g, 0, g.n)) == g.n


def components(g: Graph) -> List[List[int]]:
    seen = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = sorted(_bfs_dist(g, s, g.n))
        seen.update(comp)
        out.append(comp)
    return out


def fingerprint(g: Graph) -> dict:
    """Isomorphism-invariant summary used to cross-check constructions."""
    gg = girth(g)
    info = {"n": g.n, "m": g.m, "degree": g.regular_degree(), "girth": gg}
    if gg != INFINITY and info["degree"] is not None:
        cs = enumerate_girth_cycles(g)
        sig = signature(g, cs)
        info["girth_cycles"] = len(cs)
        info["signature"] = sig.entries if isinstance(sig, Signature) else None
    return info
