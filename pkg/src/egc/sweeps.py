"""Parameter sweeps over the square-tessellation families and conjecture harnesses.

Each sweep returns rows in a deterministic order; ``jobs > 1`` evaluates the
rows in a process pool without changing the order or contents.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from egc.colorings import NotApplicable, zigzag_coloring
from egc.egc_engine import COLORED, IMPOSSIBLE, find_egc
from egc.families import (
    KLEIN,
    TORUS,
    CutoutSpec,
    cutout,
    hex_klein,
    hex_quotients,
    named,
    pappus_quotient,
    prism,
)
from egc.graph_core import GraphError, Signature, girth, signature

ITEMS = ("3a", "3b", "3c", "3d", "3e", "3f")
READINGS = ("element", "residue")


def theorem_condition(item: str, r: int, t: int, s: int, reading: str = "element") -> bool:
    """The stated egc condition of one item of the square-tessellation theorem.

    Item 3a excludes "s in 2Z u 1": ``element`` drops s = 1 only, ``residue``
    drops every s = 1 (mod 4).
    """
    even_r = r % 2 == 0
    if item == "3a":
        if t != 1:
            raise ValueError("item 3a has t = 1")
        if reading == "element":
            s_ok = s % 2 == 1 and s != 1
        elif reading == "residue":
            s_ok = s % 4 == 3
        else:
            raise ValueError(f"unknown reading {reading!r}")
        return even_r and r % 4 != 0 and s_ok and r != 3 * s + 1
    if item == "3b":
        return t == 2 and even_r and r >= 10 and s % 2 == 0 and 4 <= s <= r - 4
    if item == "3c":
        return t == 3 and even_r and r >= 6 and s % 2 == 1 and 3 <= s <= r - 3
    if item == "3d":
        return t == 4 and even_r and r >= 4 and s > 0 and s % 2 == 0
    if item == "3e":
        return t >= 4 and even_r and (t + s) % 2 == 0
    if item == "3f":
        return s == 0 and even_r and r >= 6 and t >= 3 and t % 2 == 1
    raise ValueError(f"unknown item {item!r}")


def item_instances(item: str, r_values: Iterable[int], t_values: Optional[Iterable[int]] = None) -> List[CutoutSpec]:
    """All cutout parameter triples of an item for the given r (and t for 3e/3f)."""
    fixed_t = {"3a": 1, "3b": 2, "3c": 3, "3d": 4}
    out = []
    for r in sorted(set(r_values)):
        if item in fixed_t:
            t = fixed_t[item]
            if t <= r:
                out += [CutoutSpec(TORUS, r, t, s) for s in range(r)]
        elif item == "3e":
            ts = sorted(set(t_values)) if t_values is not None else range(4, r + 1)
            out += [CutoutSpec(TORUS, r, t, s) for t in ts if 4 <= t <= r for s in range(r)]
        elif item == "3f":
            if r % 2 == 0:
                ts = sorted(set(t_values)) if t_values is not None else range(1, r + 1)
                out += [CutoutSpec(KLEIN, r, t, 0) for t in ts if t <= r]
        else:
            raise ValueError(f"unknown item {item!r}")
    return out


@dataclass(frozen=True)
class TheoremRow:
    item: str
    surface: str
    r: int
    t: int
    s: int
    predicted: bool
    predicted_residue: Optional[bool]
    signature: str
    engine: str
    zigzag: str
    reason: str

    @property
    def in_scope(self) -> bool:
        """Simple cutout whose signature is 2^4, the class the theorem describes."""
        return self.signature == "2,2,2,2"

    @property
    def agree(self) -> bool:
        return self.predicted == (self.engine == COLORED)

    def csv_fields(self) -> List[str]:
        pr = "" if self.predicted_residue is None else str(self.predicted_residue).lower()
        return [
            self.item, self.surface, str(self.r), str(self.t), str(self.s), str(self.predicted).lower(), pr,
            self.signature, self.engine, self.zigzag, str(self.in_scope).lower(), str(self.agree).lower(), self.reason,
        ]


THEOREM_HEADER = [
    "item", "surface", "r", "t", "s", "predicted", "predicted_residue", "signature", "engine", "zigzag",
    "in_scope", "agree", "reason",
]


def _theorem_row(args: Tuple[str, CutoutSpec, float]) -> TheoremRow:
    item, spec, timeout = args
    pred = theorem_condition(item, spec.r, spec.t, spec.s)
    pred_res = theorem_condition(item, spec.r, spec.t, spec.s, "residue") if item == "3a" else None
    try:
        g = cutout(spec)
    except GraphError as exc:
        return TheoremRow(item, spec.surface, spec.r, spec.t, spec.s, pred, pred_res, "", "degenerate", "", str(exc))
    sig = signature(g)
    sig_s = ",".join(map(str, sig.entries)) if isinstance(sig, Signature) else "irregular"
    verdict = find_egc(g, timeout=timeout)
    zz = zigzag_coloring(spec)
    zz_s = "n/a" if isinstance(zz, NotApplicable) else "egc"
    reason = verdict.certificate.get("reason", "") if verdict.status != COLORED else ""
    return TheoremRow(item, spec.surface, spec.r, spec.t, spec.s, pred, pred_res, sig_s, verdict.status, zz_s, reason)


def parallel_map(fn: Callable, items: Sequence, jobs: int) -> List:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=jobs) as pool:
        return pool.map(fn, items, chunksize=1)


def theorem_sweep(
    item: str,
    r_values: Iterable[int],
    t_values: Optional[Iterable[int]] = None,
    timeout: float = 300.0,
    jobs: int = 1,
) -> List[TheoremRow]:
    specs = item_instances(item, r_values, t_values)
    return parallel_map(_theorem_row, [(item, s, timeout) for s in specs], jobs)


# ---------------------------------------------------------------------------
# conjecture harnesses

@dataclass(frozen=True)
class ConjectureRow:
    instance: str
    n: int
    signature: str
    expected: str
    verdict: str
    counterexample: bool
    coloring: Optional[List[int]] = None

    def to_json(self) -> dict:
        out = {
            "instance": self.instance, "n": self.n, "signature": self.signature, "expected": self.expected,
            "verdict": self.verdict, "counterexample": self.counterexample,
        }
        if self.coloring is not None:
            out["coloring"] = self.coloring
        return out


def _sig_text(g) -> str:
    sig = signature(g)
    return ",".join(map(str, sig.entries)) if isinstance(sig, Signature) else "irregular"


def _conj_row(args) -> ConjectureRow:
    label, g, expected, timeout = args
    v = find_egc(g, timeout=timeout)
    # a counterexample is a verdict contradicting the conjectured one
    counter = (expected == IMPOSSIBLE and v.status == COLORED) or (expected == COLORED and v.status == IMPOSSIBLE)
    col = list(v.coloring.colors) if (counter and v.coloring) else None
    return ConjectureRow(label, g.n, _sig_text(g), expected, v.status, counter, col)


DEFAULT_MAX_VERTICES = {"2egcs": 60, "att": 60, "att2": 96}


def conjecture_instances(name: str, max_vertices: Optional[int] = None) -> List[Tuple[str, object, str]]:
    """(label, graph, expected verdict) triples for a conjecture harness."""
    if max_vertices is None:
        max_vertices = DEFAULT_MAX_VERTICES.get(name, 60)
    if name == "2egcs":
        out = []
        for base in ("k33", "truncated-octahedron"):
            g = prism(named(base))
            out.append((f"prism({base})", g, IMPOSSIBLE))
        return out
    if name == "att":
        out = []
        for h in hex_quotients(max_vertices // 4):
            if h.even_periods:
                out.append((f"prism({{6,3}}_({h.m},{h.n};{h.sigma}))", prism(h.graph), COLORED))
        pq = pappus_quotient()
        out.append((f"prism(pappus {{6,3}}_({pq.m},{pq.n};{pq.sigma}))", prism(pq.graph), IMPOSSIBLE))
        return out
    if name == "att2":
        out = []
        for m in range(2, max_vertices // 8 + 1, 2):
            for n in range(2, max_vertices // (4 * m) + 1, 2):
                g = hex_klein(m, n)
                if girth(g) == 6:
                    out.append((f"prism([6,3]_({m},{n}))", prism(g), COLORED))
        return out
    raise ValueError(f"unknown conjecture {name!r}; use 2egcs, att or att2")


def conjecture_run(name: str, timeout: Optional[float] = 60.0, jobs: int = 1, max_vertices: Optional[int] = None) -> dict:
    inst = conjecture_instances(name, max_vertices)
    rows = parallel_map(_conj_row, [(lab, g, exp, timeout) for lab, g, exp in inst], jobs)
    counter = [r for r in rows if r.counterexample]
    undecided = [r for r in rows if r.verdict not in (COLORED, IMPOSSIBLE)]
    if counter:
        summary = f"counterexample found: {counter[0].instance}"
    elif undecided:
        summary = f"no counterexample within budget ({len(undecided)} instance(s) timed out)"
    else:
        summary = "no counterexample within budget"
    return {"conjecture": name, "summary": summary, "rows": [r.to_json() for r in rows]}
