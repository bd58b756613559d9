"""Star notation, the gcd formula for zigzag-colored tori, and hamiltonian pairs.

For a proper 4-edge-coloring the star triple (a, b, c) counts the cycles of
the 2-factors (12), (13) and (14). For the zigzag coloring of a torus the
(13) factor is all non-horizontal edges and (24) all horizontal ones.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from egc.colorings import NotApplicable, zigzag_factorization
from egc.families import TORUS, CutoutSpec, cutout, hypercube
from egc.graph_core import EdgeColoring, Graph, GraphError, color_class_cycles, is_proper

STAR_PAIRS = ((1, 2), (1, 3), (1, 4))


@dataclass(frozen=True)
class StarTriple:
    a: int
    b: int
    c: int

    def code(self) -> str:
        """Compact form as printed in the tables: one symbol per count, 10..15 as a..f."""
        return "".join(_digit(x) for x in (self.a, self.b, self.c))

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _digit(x: int) -> str:
    if 0 <= x < 10:
        return str(x)
    if x < 36:
        return chr(ord("a") + x - 10)
    raise ValueError(f"count {x} has no one-symbol code")


def parse_code(code: str) -> StarTriple:
    vals = [int(ch, 36) for ch in code]
    if len(vals) != 3:
        raise ValueError(f"bad star code {code!r}")
    return StarTriple(*vals)


@dataclass(frozen=True)
class StarReport:
    triple: StarTriple
    lengths: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
    unequal: Tuple[bool, bool, bool]  # factor has cycles of different lengths


def star_by_formula(spec: CutoutSpec) -> Union[StarTriple, NotApplicable]:
    """(gcd(r,|t-s|)/2, gcd(r,s), gcd(r,t+s)/2) for an applicable torus."""
    if spec.surface != TORUS:
        return NotApplicable("formula covers torus cutouts only")
    r, t, s = spec.r, spec.t, spec.s
    if t == 1:
        return NotApplicable("t = 1 is outside the formula's range")
    if s == 0:
        return NotApplicable("s = 0 is outside the formula's range")
    if r % 2 or (t + s) % 2:
        return NotApplicable("zigzag factorization needs r and t+s even")
    return StarTriple(math.gcd(r, abs(t - s)) // 2, math.gcd(r, s), math.gcd(r, t + s) // 2)


def star_by_oracle(g: Graph, c: EdgeColoring) -> StarReport:
    """Count the cycles of (12), (13), (14) directly."""
    if c.kappa != 4 or not is_proper(g, c):
        raise GraphError("star analysis needs a proper 4-edge-coloring")
    counts = []
    lengths = []
    for pair in STAR_PAIRS:
        ids = [e for e, col in enumerate(c.colors) if col in pair]
        lens = tuple(sorted(len(x) for x in color_class_cycles(g, ids)))
        counts.append(len(lens))
        lengths.append(lens)
    return StarReport(
        StarTriple(*counts), tuple(lengths), tuple(len(set(x)) > 1 for x in lengths)  # type: ignore[arg-type]
    )


def star_oracle_for_spec(spec: CutoutSpec) -> Union[StarReport, NotApplicable]:
    """Oracle star triple of the southeast zigzag factorization (tight or not)."""
    col = zigzag_factorization(spec)
    if isinstance(col, NotApplicable):
        return col
    return star_by_oracle(cutout(spec), col)


def hamiltonian_pairs(g: Graph, c: EdgeColoring) -> List[Tuple[int, int]]:
    """Color pairs whose union is a single cycle through every vertex."""
    if not is_proper(g, c):
        raise GraphError("hamiltonian pairs need a proper coloring")
    out = []
    for pair in itertools.combinations(range(1, c.kappa + 1), 2):
        ids = [e for e, col in enumerate(c.colors) if col in pair]
        if len(ids) != g.n:
            continue
        cycles = color_class_cycles(g, ids)
        if len(cycles) == 1 and len(cycles[0]) == g.n:
            out.append(pair)
    return out


def pair_cycle_lengths(g: Graph, c: EdgeColoring) -> Dict[Tuple[int, int], List[int]]:
    out = {}
    for pair in itertools.combinations(range(1, c.kappa + 1), 2):
        ids = [e for e, col in enumerate(c.colors) if col in pair]
        out[pair] = sorted(len(x) for x in color_class_cycles(g, ids))
    return out


def q3_factorizations() -> Tuple[EdgeColoring, EdgeColoring]:
    """The two tight 1-factorizations of Q3 (vertex labels are bit vectors).

    The first colors each edge by its coordinate direction; no pair of
    colors is hamiltonian. The second keeps direction 3 as color 3 and
    swaps colors 1 and 2 on the face x3 = 1, so that (13) and (23) are
    Hamilton cycles while (12) is two 4-cycles.
    """
    q3 = hypercube(3)
    direction = [(u ^ v).bit_length() for u, v in q3.edges]
    twisted = [d if d == 3 or not (u & 4) else 3 - d for d, (u, v) in zip(direction, q3.edges)]
    return EdgeColoring(3, tuple(direction)), EdgeColoring(3, tuple(twisted))


# ---------------------------------------------------------------------------
# printed tables, verbatim

_IX_S1 = {
    6: ["113"],
    8: ["211", "114"],
    10: ["111", "111", "511"],
    12: ["213", "312", "112", "116"],
    14: ["111", "111", "111", "111", "117"],
    16: ["211", "114", "114", "112", "211", "118"],
    18: ["113", "311", "111", "311", "311", "111"],
    20: ["211", "112", "215", "215", "112", "112"],
    22: ["111", "111", "111", "111", "111", "111"],
    24: ["213", "314", "411", "611", "611", "114"],
    26: ["111", "111", "111", "111", "111", "111"],
    28: ["211", "112", "211", "211", "217", "711"],
    30: ["113", "311", "115", "115", "111", "111"],
}
_IX_S3 = {
    6: ["131"],
    8: ["114", "211"],
    10: ["111", "511", "111"],
    12: ["132", "233", "336"],
    14: ["141", "111", "111"],
    16: ["411", "112", "112"],
    18: ["131", "131", "333"],
    20: ["211", "512", "112"],
    22: ["111", "111", "111"],
    24: ["133", "231", "336"],
    26: ["111", "111", "111"],
    28: ["112", "211", "112"],
    30: ["132", "135", "333"],
}
_IX_S5 = {
    10: ["555", "151", "151"],
    12: ["611", "611", "211"],
    14: ["711", "111", "117"],
    16: ["811", "211", "211"],
    18: ["911", "111", "111"],
    20: ["a51", "251", "251"],
    22: ["b11", "111", "111"],
    24: ["c11", "211", "211"],
    26: ["d11", "111", "111"],
    28: ["e11", "211", "217"],
    30: ["f11", "151", "111"],
}


def _table(block: Dict[int, List[str]], s: int, ts: Sequence[int]) -> Dict[Tuple[int, int, int], str]:
    return {(r, t, s): code for r, codes in block.items() for t, code in zip(ts, codes)}


# (r, t, s) -> printed star code
TABLE_IX: Dict[Tuple[int, int, int], str] = {
    **_table(_IX_S1, 1, (5, 7, 9, 11, 13, 15)),
    **_table(_IX_S3, 3, (5, 7, 9)),
    **_table(_IX_S5, 5, (5, 7, 9)),
}

# t = 2: (r, 2, s) -> printed star code
DISPLAY_X: Dict[Tuple[int, int, int], str] = {
    (8, 2, 4): "141", (10, 2, 4): "121", (12, 2, 4): "143", (12, 2, 6): "162",
    (14, 2, 4): "121", (14, 2, 6): "121", (16, 2, 4): "141", (16, 2, 6): "124",
    (18, 2, 4): "123", (18, 2, 6): "131", (20, 2, 4): "141", (20, 2, 6): "122",
    (22, 2, 4): "121", (22, 2, 6): "121", (24, 2, 4): "143", (24, 2, 6): "164",
}


@dataclass(frozen=True)
class SweepRow:
    r: int
    t: int
    s: int
    formula: Optional[StarTriple]
    oracle: Optional[StarTriple]
    printed: Optional[str]
    note: str = ""

    @property
    def agree(self) -> bool:
        return self.formula is not None and self.formula == self.oracle

    @property
    def matches_print(self) -> Optional[bool]:
        if self.printed is None or self.oracle is None:
            return None
        return self.oracle.code() == self.printed

    def csv_fields(self) -> List[str]:
        f = self.formula.as_tuple() if self.formula else ("", "", "")
        o = self.oracle.as_tuple() if self.oracle else ("", "", "")
        return [str(x) for x in (self.r, self.t, self.s, *f, *o)] + [str(self.agree).lower()]


CSV_HEADER = ["r", "t", "s", "a_formula", "b_formula", "c_formula", "a_oracle", "b_oracle", "c_oracle", "agree"]


def sweep_row(r: int, t: int, s: int, printed: Optional[Dict[Tuple[int, int, int], str]] = None) -> SweepRow:
    spec = CutoutSpec(TORUS, r, t, s)
    f = star_by_formula(spec)
    o = star_oracle_for_spec(spec)
    notes = []
    if isinstance(f, NotApplicable):
        notes.append(f"formula: {f.reason}")
        f = None
    if isinstance(o, NotApplicable):
        notes.append(f"oracle: {o.reason}")
        o_triple = None
    else:
        o_triple = o.triple
        if any(o.unequal):
            notes.append(f"unequal cycle lengths {[list(x) for x in o.lengths]}")
    code = (printed or {}).get((r, t, s))
    return SweepRow(r, t, s, f, o_triple, code, "; ".join(notes))


def table_ix_sweep(
    r_range: Iterable[int], t_range: Iterable[int], s_range: Iterable[int], printed=None
) -> List[SweepRow]:
    """Formula against oracle for every valid (r, t, s), sorted by (r, t, s)."""
    printed = TABLE_IX if printed is None else printed
    rows = []
    for r in sorted(set(r_range)):
        for t in sorted(set(t_range)):
            for s in sorted(set(s_range)):
                if 0 < t <= r and 0 <= s < r:
                    rows.append(sweep_row(r, t, s, printed))
    return rows


def table_ix_cells() -> List[SweepRow]:
    return [sweep_row(r, t, s, TABLE_IX) for r, t, s in sorted(TABLE_IX)]


def display_x_cells() -> List[SweepRow]:
    return [sweep_row(r, t, s, DISPLAY_X) for r, t, s in sorted(DISPLAY_X)]
