"""Explicit (search-free) edge-girth colorings of the constructed families.

Every function here returns a coloring that has been run through
``verify_egc``; a failing construction raises instead of returning garbage.
The zigzag construction is the one exception: when its sufficient
conditions fail it returns ``NotApplicable`` with the reason.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from egc import _search
from egc.egc_engine import verify_egc
from egc.families import (
    KLEIN,
    TORUS,
    CutoutSpec,
    CycleDecomposition,
    cutout,
    cutout_arcs,
    dod_barrel,
    dod_row_cycle,
    dodecahedron_labeled,
    hypercube,
    named,
    partial_line_graph,
    petersen_barrel,
    petersen_labeled,
    ti_barrel,
    ti_step_classes,
    wreath,
    wreath_decomposition,
    AW_REPRESENTATIVES,
    aw_vertex,
    PET_STEP_ROWS,
    DOD_STEP_ROWS,
    _row_step,
)
from egc.graph_core import (
    EdgeColoring,
    Graph,
    GraphError,
    Signature,
    color_class_cycles,
    cycles_of_length,
    enumerate_girth_cycles,
    is_bipartite,
    signature,
)


@dataclass(frozen=True)
class NotApplicable:
    reason: str


def _checked(g: Graph, c: EdgeColoring, what: str) -> EdgeColoring:
    bad = verify_egc(g, c)
    if bad:
        raise AssertionError(f"{what}: construction is not an egc ({len(bad)} violations, first {bad[0]})")
    return c


def explain(g: Graph, c: EdgeColoring, pairing: Sequence[Tuple[int, int]]) -> dict:
    """Cycle structure of each 2-factor given by a color pairing."""
    out = []
    for pair in pairing:
        ids = [e for e, col in enumerate(c.colors) if col in pair]
        cycles = color_class_cycles(g, ids)
        out.append({"colors": list(pair), "lengths": sorted(len(x) for x in cycles), "cycles": cycles})
    return {"graph": g.name, "factors": out}


# ---------------------------------------------------------------------------
# zigzag 2-factorizations of square-tessellation cutouts

SOUTHEAST = "southeast"  # factor 1 walks right, down, right, down, ...
NORTHEAST = "northeast"  # factor 1 walks right, up, right, up, ...


@dataclass(frozen=True)
class ZigzagPlan:
    """Which 2-factorization a zigzag coloring uses.

    ``pairing`` is the pair of color classes forming each factor and
    ``direction`` the diagonal followed by the cycles of the first factor.
    Within a factor the non-horizontal edges get the lower color, so (13) is
    the union of all non-horizontal edges and (24) of all horizontal ones.
    """

    pairing: Tuple[Tuple[int, int], Tuple[int, int]] = ((1, 2), (3, 4))
    direction: str = SOUTHEAST


def _bipartition(g: Graph) -> Optional[List[int]]:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def _zigzag_colors(g: Graph, arcs, side: List[int], plan: ZigzagPlan) -> EdgeColoring:
    # tail of a horizontal arc sees it as R, head as L; non-horizontal: tail U, head D.
    # SOUTHEAST: side-0 vertices put R and U in factor 1, side-1 vertices L and D.
    # NORTHEAST: side-0 vertices put R and D in factor 1, side-1 vertices L and U.
    # Either way both ends of an edge agree on its factor.
    (c1v, c1h), (c2v, c2h) = plan.pairing
    colors: Dict[int, int] = {}
    for tail, head, horizontal in arcs:
        if horizontal or plan.direction == SOUTHEAST:
            first = side[tail] == 0
        else:
            first = side[tail] == 1
        if horizontal:
            colors[g.eid(tail, head)] = c1h if first else c2h
        else:
            colors[g.eid(tail, head)] = c1v if first else c2v
    return EdgeColoring(4, tuple(colors[e] for e in range(g.m)))


def _zigzag_attempt(g: Graph, arcs, side: List[int], plan: ZigzagPlan) -> Union[EdgeColoring, NotApplicable]:
    c = _zigzag_colors(g, arcs, side, plan)
    f1 = set(plan.pairing[0])
    for cyc in enumerate_girth_cycles(g).cycles:
        ins = [c.colors[e] in f1 for e in _cycle_edges_in_order(g, cyc)]
        if sum(ins) != 2 or not any(ins[i] and ins[(i + 1) % 4] for i in range(4)):
            return NotApplicable(f"4-cycle {cyc} does not share exactly two consecutive edges with each factor")
    return c


def zigzag_factorization(spec: CutoutSpec, plan: ZigzagPlan = ZigzagPlan()) -> Union[EdgeColoring, NotApplicable]:
    """The proper 4-coloring induced by a zigzag 2-factorization, tight or not.

    Exists whenever the cutout is bipartite; each factor alternates a
    horizontal and a non-horizontal color.
    """
    g = cutout(spec)
    side = _bipartition(g)
    if side is None:
        return NotApplicable("zigzag cycles would have odd length (graph is not bipartite)")
    return _zigzag_colors(g, cutout_arcs(spec), side, plan)


def _cycle_edges_in_order(g: Graph, cyc: Sequence[int]) -> List[int]:
    return [g.eid(a, b) for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1]))]


def zigzag_plan_and_coloring(
    spec: CutoutSpec,
) -> Union[Tuple[ZigzagPlan, EdgeColoring], NotApplicable]:
    if spec.surface not in (TORUS, KLEIN):
        raise GraphError("zigzag coloring needs a torus or Klein-bottle cutout")
    g = cutout(spec)
    if g.regular_degree() != 4:
        raise GraphError("zigzag coloring needs a 4-regular cutout")
    sig = signature(g)
    if not isinstance(sig, Signature):
        return NotApplicable("graph is not girth-regular")
    if any(x >= 3 for x in sig.entries):
        return NotApplicable(f"signature {sig.entries} has an entry >= 3")
    side = _bipartition(g)
    if side is None:
        return NotApplicable("zigzag cycles would have odd length (graph is not bipartite)")
    arcs = cutout_arcs(spec)
    reasons = []
    for direction in (SOUTHEAST, NORTHEAST):
        plan = ZigzagPlan(direction=direction)
        out = _zigzag_attempt(g, arcs, side, plan)
        if isinstance(out, EdgeColoring):
            if verify_egc(g, out):
                reasons.append(f"plan {direction} colors a girth cycle with repeated colors")
                continue
            return plan, out
        reasons.append(out.reason)
    return NotApplicable("; ".join(reasons))


def zigzag_coloring(spec: CutoutSpec) -> Union[EdgeColoring, NotApplicable]:
    """Zigzag coloring of a cutout, or NotApplicable naming the failed condition.

    Both 2-factors consist of cycles alternating horizontal and
    non-horizontal edges; each factor is 2-colored alternately.
    """
    out = zigzag_plan_and_coloring(spec)
    if isinstance(out, NotApplicable):
        return out
    return out[1]


# ---------------------------------------------------------------------------
# Q4 via three mutually orthogonal Latin squares of order 4

MOLS_ROWS = (0, 3, 5, 6)
MOLS_COLUMNS = (1, 2, 4, 7)
MOLS_ENTRIES = (
    ("111", "222", "333", "444"),
    ("243", "134", "421", "312"),
    ("324", "413", "142", "231"),
    ("432", "341", "214", "123"),
)


def _q4_label(x: int) -> int:
    """Label 0..7 of the K_{4,4} vertex covered by Q4 vertex x.

    Bit b of x is coordinate b+1; label = b1 + 2 b2 + 4 b3 after flipping all
    four coordinates when b4 = 1 (antipodal vertices share a label).
    """
    if x & 8:
        x ^= 15
    return x & 7


def q4_mols_colorings() -> Tuple[EdgeColoring, EdgeColoring, EdgeColoring]:
    """(F0, F1, F2): coordinate directions, and the pullbacks of the second
    and third Latin squares through the antipodal cover Q4 -> K_{4,4}.

    F0 equals the pullback of the first square; it is returned as is and is
    not an egc.
    """
    q4 = hypercube(4)
    row_of = {v: i for i, v in enumerate(MOLS_ROWS)}
    col_of = {v: i for i, v in enumerate(MOLS_COLUMNS)}
    out = []
    for square in range(3):
        cols = []
        for u, v in q4.edges:
            a, b = _q4_label(u), _q4_label(v)
            if a in col_of:
                a, b = b, a
            cols.append(int(MOLS_ENTRIES[row_of[a]][col_of[b]][square]))
        out.append(EdgeColoring(4, tuple(cols)))
    f0 = out[0]
    direction = tuple((u ^ v).bit_length() for u, v in q4.edges)
    if f0.colors != direction:
        raise AssertionError("first Latin square does not pull back to the coordinate directions")
    _checked(q4, out[1], "Q4 F1")
    _checked(q4, out[2], "Q4 F2")
    return f0, out[1], out[2]


# 0-color type of a 4-cycle -> (F1 pattern, F2 pattern), up to rotation/reflection
Q4_PATTERNS = {
    (1, 2): ((1, 2, 3, 4), (1, 2, 4, 3)),
    (3, 4): ((1, 2, 3, 4), (1, 2, 4, 3)),
    (1, 3): ((1, 3, 2, 4), (1, 3, 4, 2)),
    (2, 4): ((1, 3, 2, 4), (1, 3, 4, 2)),
    (1, 4): ((1, 4, 2, 3), (1, 4, 3, 2)),
    (2, 3): ((1, 4, 2, 3), (1, 4, 3, 2)),
}


def dihedral_key(seq: Sequence[int]) -> Tuple[int, ...]:
    """Least rotation or reflection of a cyclic sequence."""
    seq = tuple(seq)
    n = len(seq)
    cands = []
    for s in (seq, seq[::-1]):
        cands += [s[i:] + s[:i] for i in range(n)]
    return min(cands)


def q4_cycle_report() -> List[dict]:
    """Per 4-cycle of Q4: its 0-color type and the F1/F2 color sequences around it."""
    q4 = hypercube(4)
    f0, f1, f2 = q4_mols_colorings()
    rows = []
    for cyc in cycles_of_length(q4, 4):
        es = _cycle_edges_in_order(q4, cyc)
        zero = tuple(sorted({f0.colors[e] for e in es}))
        rows.append(
            {
                "cycle": list(cyc),
                "type": zero,
                "f1": dihedral_key([f1.colors[e] for e in es]),
                "f2": dihedral_key([f2.colors[e] for e in es]),
            }
        )
    return rows


# ---------------------------------------------------------------------------
# partial line graphs of wreath graphs

# the three ways to split {1,2,3,4} into two pairs
COLOR_MATCHINGS = (
    ((1, 2), (3, 4)),
    ((1, 3), (2, 4)),
    ((1, 4), (2, 3)),
)


def _wreath_block_matchings(n: int) -> List[int]:
    """Matching index per block of W(n,2) such that consecutive blocks differ."""
    if n % 2 == 0:
        return [i % 2 for i in range(n)]
    # this choice makes every factor of the (14)(23) pairing an 8-cycle plus two (2n-4)-cycles
    return [0, 1] * (n // 2 - 1) + [2, 0, 2]


def wreath_plg_coloring(n: int) -> EdgeColoring:
    """Egc of the partial line graph of W(n,2) with its 4-cycle decomposition.

    Block i holds the W-edges between fibers i and i+1. Each W-edge
    (i_a, (i+1)_b) gets the color pair M_i[(a+b) mod 2] from a matching M_i
    of {1,2,3,4} into pairs, with M_i != M_{i-1}. At a W-vertex x the
    partial-line-graph edge joining a left W-edge f and a right W-edge e is
    colored by the single color in p(e) minus p(f). A W-edge then sees p(e)
    at its left end and the complementary pair at its right end.
    """
    if n <= 4:
        raise GraphError("wreath partial line graph needs n > 4")
    cd = wreath_decomposition(n)
    w = cd.base
    p = partial_line_graph(cd)
    blocks = _wreath_block_matchings(n)
    pair: Dict[int, Tuple[int, int]] = {}
    for i in range(n):
        j = (i + 1) % n
        for a in (0, 1):
            for b in (0, 1):
                pair[w.eid(2 * i + a, 2 * j + b)] = COLOR_MATCHINGS[blocks[i]][(a + b) % 2]
    cols = []
    for e1, e2 in p.edges:
        x = (set(w.edges[e1]) & set(w.edges[e2])).pop()
        fib = x // 2
        # right edges go from fibre fib to fib+1
        right = [e for e in (e1, e2) if (sum(w.edges[e]) - x) // 2 == (fib + 1) % n]
        if len(right) != 1:
            raise AssertionError("partial line graph edge does not join a left and a right edge")
        e = right[0]
        f = e2 if e == e1 else e1
        (c,) = set(pair[e]) - set(pair[f])
        cols.append(c)
    c = EdgeColoring(4, tuple(cols))
    return _checked(p, c, f"P(W({n},2))")


def wreath_plg_pairing(n: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """The color pairing whose 2-factors have the designed cycle shape."""
    return COLOR_MATCHINGS[2] if n % 2 else COLOR_MATCHINGS[0]


def wreath_plg_factorization(n: int) -> dict:
    """2-factor cycle lengths of the wreath coloring.

    Odd n: each factor is one 8-cycle and two (2n-4)-cycles.
    Even n: every cycle has length 8.
    """
    p = partial_line_graph(wreath_decomposition(n))
    c = wreath_plg_coloring(n)
    pairing = wreath_plg_pairing(n)
    info = explain(p, c, pairing)
    return {"n": n, "pairing": [list(x) for x in pairing], "lengths": [f["lengths"] for f in info["factors"]]}


# ---------------------------------------------------------------------------
# barrels


def barrel_abcd_coloring(cd: CycleDecomposition) -> Tuple[Graph, EdgeColoring]:
    """Egc of the partial line graph of a (mutant, generalized) barrel.

    At a barrel vertex with oriented green edges g_prev -> v -> g_next and red
    edges r_down -> v -> r_up, the four partial-line-graph edges there get
    a = (g_prev, r_up), b = (r_up, g_next), c = (g_next, r_down) and
    d = (r_down, g_prev), with a, b, c, d = 1, 2, 3, 4.
    """
    if cd.classes is None:
        raise GraphError("barrel coloring needs red/green cycle classes")
    g = cd.base
    p = partial_line_graph(cd)
    nxt: Dict[Tuple[int, str], int] = {}
    prv: Dict[Tuple[int, str], int] = {}
    for cyc, cls in zip(cd.cycles, cd.classes):
        L = len(cyc)
        for i, v in enumerate(cyc):
            nxt[(v, cls)] = g.eid(v, cyc[(i + 1) % L])
            prv[(v, cls)] = g.eid(v, cyc[(i - 1) % L])
    mapping: Dict[Tuple[int, int], int] = {}
    for v in range(g.n):
        gp, gn = prv[(v, "G")], nxt[(v, "G")]
        rd, ru = prv[(v, "R")], nxt[(v, "R")]
        for (x, y), col in (((gp, ru), 1), ((ru, gn), 2), ((gn, rd), 3), ((rd, gp), 4)):
            mapping[(min(x, y), max(x, y))] = col
    c = EdgeColoring.from_map(p, 4, mapping)
    return p, _checked(p, c, f"P({g.name})")


# ---------------------------------------------------------------------------
# Armanios-Wells


# Orbit colors actually used. The representative table puts (B0,D1), (B1,D2)
# in red and (B0,B5), (D1,D2) in green; read that way 64 of the 192 5-cycles
# repeat a color. Exchanging red and green on exactly those four orbits gives
# the only orbit-constant egc up to renaming colors.
AW_ORBIT_COLORS = (1, 1, 5, 5, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 1, 1)


def _aw_from_orbit_colors(colors: Sequence[int]) -> EdgeColoring:
    g = named("armanios-wells")
    mapping = {}
    for (col, (x, y)), new in zip(AW_REPRESENTATIVES, colors):
        for m in range(4):
            u = aw_vertex(f"{x[0]}{(int(x[1:]) + 2 * m) % 8}")
            v = aw_vertex(f"{y[0]}{(int(y[1:]) + 2 * m) % 8}")
            mapping[(u, v)] = new
    return EdgeColoring.from_map(g, 5, mapping)


def aw_table_coloring() -> EdgeColoring:
    """The representative table expanded verbatim (proper, but not an egc)."""
    return _aw_from_orbit_colors([col for col, _ in AW_REPRESENTATIVES])


def aw_orbit_coloring() -> EdgeColoring:
    """Orbit-generated egc of Armanios-Wells: 20 representative edges, each
    translated by 0, 2, 4, 6 in the index, colored by ``AW_ORBIT_COLORS``."""
    g = named("armanios-wells")
    return _checked(g, _aw_from_orbit_colors(AW_ORBIT_COLORS), "Armanios-Wells")


# ---------------------------------------------------------------------------
# barrel towers

# each Petersen 5-cycle (a1..a5) and the colors of a1a2, a2a3, ..., a5a1
PETERSEN_ETA = (
    ((1, 2, 5, 10, 4), (1, 2, 3, 4, 5)),
    ((3, 6, 7, 8, 9), (4, 1, 3, 5, 2)),
    ((4, 1, 2, 8, 7), (5, 1, 4, 3, 2)),
    ((10, 9, 3, 6, 5), (1, 2, 4, 5, 3)),
    ((1, 2, 5, 6, 3), (1, 2, 5, 4, 3)),
    ((4, 7, 8, 9, 10), (2, 3, 5, 1, 4)),
    ((2, 5, 10, 9, 8), (2, 3, 1, 5, 4)),
    ((1, 3, 6, 7, 4), (3, 4, 1, 2, 5)),
    ((5, 10, 4, 7, 6), (3, 4, 2, 1, 5)),
    ((2, 8, 9, 3, 1), (4, 5, 2, 3, 1)),
    ((10, 4, 1, 3, 9), (4, 5, 3, 2, 1)),
    ((5, 6, 7, 8, 2), (5, 1, 3, 4, 2)),
)

# colors of the inter-copy edge leaving v_i^j, for j even and j odd, as tabulated
TOWER_PARITY_TABLE = {
    1: (2, 4), 5: (1, 3), 7: (5, 4), 9: (3, 4),
    2: (5, 3), 3: (1, 5), 4: (1, 3),
    6: (3, 2), 8: (1, 2), 10: (5, 2),
}
# The copy coloring already uses 3 at v_5 and leaves 1 and 4 free, so the odd
# color of row 5 is 4; every other row matches the free pair at its vertex.
TOWER_PARITY_COLORS = {**TOWER_PARITY_TABLE, 5: (1, 4)}


def petersen_eta_coloring() -> Dict[Tuple[int, int], int]:
    """Petersen edge (1-based, sorted) -> color, read off the 5-cycle table.

    Every edge lies on four of the tabulated 5-cycles; all four must agree.
    Assumes the listed cycles are exactly the twelve 5-cycles of the
    labelled Petersen graph (checked).
    """
    out: Dict[Tuple[int, int], int] = {}
    pet = petersen_labeled()
    listed = set()
    for cyc, cols in PETERSEN_ETA:
        listed.add(dihedral_key([v - 1 for v in cyc]))
        for i in range(5):
            a, b = cyc[i], cyc[(i + 1) % 5]
            key = (min(a, b), max(a, b))
            if not pet.has_edge(a - 1, b - 1):
                raise AssertionError(f"tabulated cycle uses non-edge {key}")
            if out.setdefault(key, cols[i]) != cols[i]:
                raise AssertionError(f"tabulated colors disagree on edge {key}")
    actual = {dihedral_key(c) for c in cycles_of_length(pet, 5)}
    if listed != actual:
        raise AssertionError("tabulated cycles are not the 5-cycles of the labelled Petersen graph")
    return out


def petersen_copy_coloring() -> EdgeColoring:
    pet = petersen_labeled()
    eta = petersen_eta_coloring()
    c = EdgeColoring.from_map(pet, 5, {(a - 1, b - 1): col for (a, b), col in eta.items()})
    return _checked(pet, c, "Petersen copy")


def _check_missing(base_colors: Dict[int, set], rows: Sequence[int]) -> None:
    for i in rows:
        used = base_colors[i]
        extra = set(TOWER_PARITY_COLORS[i])
        if used & extra or len(used | extra) != 5:
            raise AssertionError(f"parity colors at v_{i} clash with the copy coloring")


@lru_cache(maxsize=None)
def ti_copy_coloring() -> EdgeColoring:
    """A 5-edge-coloring of the truncated icosahedron with every pentagon rainbow.

    Found by exact search (first solution in the deterministic order).
    """
    ti = named("truncated-icosahedron")
    pent = cycles_of_length(ti, 5)
    groups = tuple(tuple(inc) for inc in ti.incident) + tuple(tuple(sorted(_cycle_edges_in_order(ti, c))) for c in pent)
    problem = _search.Problem(ti.m, 5, groups, tuple(range(ti.m)))
    fixed = {e: i + 1 for i, e in enumerate(_cycle_edges_in_order(ti, pent[0]))}
    out = _search.solve(problem, fixed, None, 1)
    if out.status != "sat":
        raise AssertionError("no pentagon-rainbow 5-coloring of the truncated icosahedron")
    return EdgeColoring(5, tuple(out.values))


def barrel_tower_coloring(which: str, k: int) -> Tuple[Graph, EdgeColoring]:
    """Egc of a Petersen, dodecahedron or truncated-icosahedron barrel tower.

    Copies share one fixed coloring; the edge leaving a vertex towards the
    next copy along its row is colored by the parity of its position.
    """
    if k < 1:
        raise GraphError("k must be positive")
    if which == "pet":
        g = petersen_barrel(k)
        base = petersen_copy_coloring()
        pet = petersen_labeled()
        at = {i: {base.colors[e] for e in pet.incident[i - 1]} for i in range(1, 11)}
        _check_missing(at, range(1, 11))
        copies = 14 * k
        mapping = {}
        for j in range(copies):
            for e, (a, b) in enumerate(pet.edges):
                mapping[(10 * j + a, 10 * j + b)] = base.colors[e]
            for i, step in _row_step(PET_STEP_ROWS).items():
                mapping[(10 * j + i - 1, 10 * ((j + step) % copies) + i - 1)] = TOWER_PARITY_COLORS[i][j % 2]
        c = EdgeColoring.from_map(g, 5, mapping)
    elif which == "dod":
        g = dod_barrel(k)
        dod = dodecahedron_labeled()
        eta = petersen_eta_coloring()
        copies = 7 * k
        mapping = {}

        def pet_row(x: int) -> int:
            return x % 10 + 1

        for j in range(copies):
            for a, b in dod.edges:
                ra, rb = pet_row(a), pet_row(b)
                mapping[(20 * j + a, 20 * j + b)] = eta[(min(ra, rb), max(ra, rb))]
        for i, step in _row_step(DOD_STEP_ROWS).items():
            seq = [20 * cp + 10 * side + i - 1 for cp, side in dod_row_cycle(step, copies)]
            for pos in range(len(seq)):
                mapping[(seq[pos], seq[(pos + 1) % len(seq)])] = TOWER_PARITY_COLORS[i][pos % 2]
        c = EdgeColoring.from_map(g, 5, mapping)
    elif which == "ti":
        g = ti_barrel(k)
        ti = named("truncated-icosahedron")
        base = ti_copy_coloring()
        steps = ti_step_classes()
        copies = 14 * k
        mapping = {}
        for x in range(60):
            missing = sorted(set(range(1, 6)) - {base.colors[e] for e in ti.incident[x]})
            for j in range(copies):
                mapping[(60 * j + x, 60 * ((j + steps[x]) % copies) + x)] = missing[j % 2]
        for j in range(copies):
            for e, (a, b) in enumerate(ti.edges):
                mapping[(60 * j + a, 60 * j + b)] = base.colors[e]
        c = EdgeColoring.from_map(g, 5, mapping)
    else:
        raise GraphError(f"unknown tower {which!r}; use pet, dod or ti")
    return g, _checked(g, c, g.name)


def tower_cycles_stay_in_copies(g: Graph, copy_size: int) -> bool:
    """True iff no girth cycle uses vertices of two different copies."""
    return all(len({v // copy_size for v in cyc}) == 1 for cyc in enumerate_girth_cycles(g).cycles)


# ---------------------------------------------------------------------------
# registry used by the command line


def construct(name: str, params: Sequence[int] = ()) -> Tuple[Graph, Union[EdgeColoring, NotApplicable]]:
    """Build a named construction; returns the graph and its coloring."""
    from egc import families

    if name in ("zigzag", "zigzag-klein"):
        if name == "zigzag":
            if len(params) != 3:
                raise GraphError("zigzag takes r t s")
            spec = CutoutSpec(TORUS, *params)
        else:
            if len(params) != 2:
                raise GraphError("zigzag-klein takes r t")
            spec = CutoutSpec(KLEIN, params[0], params[1], 0)
        return cutout(spec), zigzag_coloring(spec)
    if name in ("q4-f0", "q4-f1", "q4-f2"):
        return hypercube(4).renamed("q4"), q4_mols_colorings()[int(name[-1])]
    if name == "wreath":
        if len(params) != 1:
            raise GraphError("wreath takes n")
        (n,) = params
        return partial_line_graph(wreath_decomposition(n)), wreath_plg_coloring(n)
    if name in ("barrel", "mutant-barrel"):
        if len(params) != 3:
            raise GraphError(f"{name} takes k n r")
        build = families.barrel if name == "barrel" else families.mutant_barrel
        return barrel_abcd_coloring(build(*params))
    if name == "k7-barrel":
        if len(params) != 1 or not 0 <= params[0] < len(families.K7_FACTORIZATIONS):
            raise GraphError("k7-barrel takes an index 0..2")
        return barrel_abcd_coloring(families.generalized_barrel(families.K7_FACTORIZATIONS[params[0]]))
    if name == "f9-barrel":
        return barrel_abcd_coloring(families.generalized_barrel(families.F9_CIRCULANT))
    if name == "f8-mutant":
        return barrel_abcd_coloring(families.generalized_barrel(families.F8_MUTANT, mutant=True))
    if name == "aw":
        return named("armanios-wells"), aw_orbit_coloring()
    if name in ("pet", "dod", "ti"):
        k = params[0] if params else 1
        return barrel_tower_coloring(name, k)
    raise GraphError(f"unknown construction {name!r}")


CONSTRUCTIONS = (
    "zigzag", "zigzag-klein", "q4-f0", "q4-f1", "q4-f2", "wreath", "barrel", "mutant-barrel",
    "k7-barrel", "f9-barrel", "f8-mutant", "aw", "pet", "dod", "ti",
)
