"""Command-line driver for generation, search, verification, sweeps and export.

Exit codes: 0 success, 1 impossible / violations / not applicable,
2 timeout, 3 bad parameters.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from egc import __version__, families, sweeps
from egc.colorings import (
    CONSTRUCTIONS,
    NotApplicable,
    ZigzagPlan,
    construct,
    explain,
    wreath_plg_pairing,
    zigzag_plan_and_coloring,
)
from egc.egc_engine import COLORED, IMPOSSIBLE, TIMEOUT, egc_120, find_egc, find_k23_obstruction, verify_egc
from egc.families import KLEIN, TORUS, CATALOG, CutoutSpec, Multigraph, named
from egc.graph_core import (
    INFINITY,
    EdgeColoring,
    Graph,
    GraphError,
    Signature,
    enumerate_girth_cycles,
    girth,
    signature,
)
from egc.hamiltonicity import (
    CSV_HEADER,
    DISPLAY_X,
    TABLE_IX,
    display_x_cells,
    star_by_formula,
    star_oracle_for_spec,
    table_ix_cells,
    table_ix_sweep,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_TIMEOUT = 2
EXIT_PARAMS = 3

DOT_COLORS = {1: "red", 2: "blue", 3: "green", 4: "goldenrod", 5: "black"}


class UsageError(Exception):
    """Bad command-line parameters; maps to exit code 3."""


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output; echoed into every report."""

    command: str
    params: Dict[str, object] = field(default_factory=dict)
    timeout: Optional[float] = None
    jobs: int = 1
    out: Optional[str] = None
    format: str = "json"

    def to_json(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------------------
# input / output helpers


def header(cfg: RunConfig) -> dict:
    return {"tool": "egc", "version": __version__, "config": cfg.to_json()}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write(text: str, cfg: RunConfig, stdout) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def emit_json(doc: dict, cfg: RunConfig, stdout) -> None:
    _write(dumps({**header(cfg), **doc}), cfg, stdout)


def emit_csv(columns: Sequence[str], rows: Sequence[Sequence[str]], cfg: RunConfig, stdout) -> None:
    """Rows are sorted; with --out the config echo goes to ``<out>.meta.json``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in sorted(rows, key=_sort_key):
        w.writerow(row)
    _write(buf.getvalue(), cfg, stdout)
    if cfg.out:
        with open(cfg.out + ".meta.json", "w", encoding="utf-8") as fh:
            fh.write(dumps(header(cfg)))


def _sort_key(row: Sequence[str]) -> Tuple:
    return tuple((0, int(x), "") if re.fullmatch(r"-?\d+", x) else (1, 0, x) for x in row)


def _read_text(ref: str, stdin) -> str:
    if ref == "-":
        return stdin.read()
    with open(ref, encoding="utf-8") as fh:
        return fh.read()


def load_document(ref: str, stdin) -> dict:
    """A JSON document from a path or '-'; a catalog name yields a bare graph."""
    if ref != "-" and not os.path.exists(ref):
        if ref in CATALOG:
            return {"graph": named(ref).to_json()}
        raise UsageError(f"no such file or catalog graph: {ref}")
    text = _read_text(ref, stdin)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{ref}: not JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise UsageError(f"{ref}: expected a JSON object")
    if "graph" not in doc and "edges" in doc:
        doc = {"graph": doc}
    if "graph" not in doc:
        raise UsageError(f"{ref}: no graph in document")
    return doc


def graph_of(doc: dict) -> Graph:
    try:
        return Graph.from_json(doc["graph"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed graph: {exc}") from exc


def coloring_of(doc: dict) -> Optional[EdgeColoring]:
    col = doc.get("coloring")
    if col is None:
        return None
    if isinstance(col, list):
        return EdgeColoring(max(col), tuple(col))
    return EdgeColoring.from_json(col)


def _ints(values: Sequence[str], what: str) -> List[int]:
    try:
        return [int(v) for v in values]
    except ValueError as exc:
        raise UsageError(f"{what}: integer parameters expected, got {list(values)}") from exc


def parse_range(text: str) -> List[int]:
    """'6-14', '6-30:2', '1,3,5' or a single integer."""
    out: List[int] = []
    for part in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*(?:-\s*(\d+)\s*(?::\s*(\d+))?)?\s*", part)
        if not m:
            raise UsageError(f"bad range {text!r}")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) else lo
        step = int(m.group(3)) if m.group(3) else 1
        if hi < lo or step < 1:
            raise UsageError(f"bad range {text!r}")
        out.extend(range(lo, hi + 1, step))
    return sorted(set(out))


# ---------------------------------------------------------------------------
# DOT export


def to_dot(g: Graph, c: Optional[EdgeColoring] = None) -> str:
    lines = [f'graph "{g.name or "G"}" {{']
    if c is not None:
        lines.append(f"  kappa={c.kappa};")
    for v in range(g.n):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(g.edges):
        if c is None:
            lines.append(f"  {u} -- {v};")
        else:
            col = c.colors[e]
            lines.append(f'  {u} -- {v} [color="{DOT_COLORS.get(col, "gray")}", label="{col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*(?:\[(.*)\])?\s*;?\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;\s*$")


def parse_dot(text: str) -> Tuple[Graph, Optional[EdgeColoring]]:
    """Read back the DOT written by :func:`to_dot`."""
    name_m = re.search(r'graph\s+"([^"]*)"', text)
    kappa_m = re.search(r"^\s*kappa=(\d+);", text, re.M)
    edges: List[Tuple[int, int]] = []
    labels: List[Optional[int]] = []
    n = 0
    for line in text.splitlines():
        m = _DOT_EDGE.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            edges.append((u, v))
            lab = re.search(r'label="(\d+)"', m.group(3) or "")
            labels.append(int(lab.group(1)) if lab else None)
            n = max(n, u + 1, v + 1)
            continue
        m = _DOT_NODE.match(line)
        if m:
            n = max(n, int(m.group(1)) + 1)
    g = Graph.build(n, edges, name_m.group(1) if name_m else "")
    if not labels or any(x is None for x in labels):
        return g, None
    by_edge = {(min(u, v), max(u, v)): lab for (u, v), lab in zip(edges, labels)}
    return g, EdgeColoring.from_map(g, int(kappa_m.group(1)) if kappa_m else max(labels), by_edge)


# ---------------------------------------------------------------------------
# generation


def _cutout_spec(surface: str, p: List[int]) -> CutoutSpec:
    if surface == TORUS and len(p) != 3:
        raise UsageError("torus44 takes r t s")
    if surface == KLEIN and len(p) != 2:
        raise UsageError("klein44 takes r t")
    return CutoutSpec(surface, p[0], p[1], p[2] if surface == TORUS else 0)


def _nparams(p: List[int], k: int, usage: str) -> List[int]:
    if len(p) != k:
        raise UsageError(f"expected {usage}")
    return p


GENERATORS: Dict[str, Tuple[str, Callable[[List[str]], Graph]]] = {
    "torus44": ("r t s", lambda a: families.torus44(_cutout_spec(TORUS, _ints(a, "torus44")))),
    "klein44": ("r t", lambda a: families.klein44(_cutout_spec(KLEIN, _ints(a, "klein44")))),
    "named": ("NAME", lambda a: named(a[0]) if len(a) == 1 else _raise("named takes one NAME")),
    "circulant": ("n i j", lambda a: families.circulant(*_nparams(_ints(a, "circulant"), 3, "n i j"))),
    "wreath": ("n", lambda a: families.wreath(*_nparams(_ints(a, "wreath"), 1, "n"))),
    "hypercube": ("d", lambda a: families.hypercube(*_nparams(_ints(a, "hypercube"), 1, "d"))),
    "prism": ("NAME", lambda a: families.prism(named(a[0])) if len(a) == 1 else _raise("prism takes one NAME")),
    "hex-torus": ("m n sigma", lambda a: families.hex_torus(*_nparams(_ints(a, "hex-torus"), 3, "m n sigma")).graph),
    "hex-klein": ("m n", lambda a: families.hex_klein(*_nparams(_ints(a, "hex-klein"), 2, "m n"))),
    "wreath-plg": (
        "n",
        lambda a: families.partial_line_graph(
            families.wreath_decomposition(*_nparams(_ints(a, "wreath-plg"), 1, "n"))
        ),
    ),
    "barrel": (
        "k n r",
        lambda a: families.partial_line_graph(families.barrel(*_nparams(_ints(a, "barrel"), 3, "k n r"))),
    ),
    "mutant-barrel": (
        "k n r",
        lambda a: families.partial_line_graph(
            families.mutant_barrel(*_nparams(_ints(a, "mutant-barrel"), 3, "k n r"))
        ),
    ),
    "petersen-barrel": ("k", lambda a: families.petersen_barrel(*_nparams(_ints(a, "petersen-barrel"), 1, "k"))),
    "dod-barrel": ("k", lambda a: families.dod_barrel(*_nparams(_ints(a, "dod-barrel"), 1, "k"))),
    "ti-barrel": ("k", lambda a: families.ti_barrel(*_nparams(_ints(a, "ti-barrel"), 1, "k"))),
}


def _raise(msg: str):
    raise UsageError(msg)


def cmd_gen(args, cfg: RunConfig, stdin, stdout) -> int:
    if args.family not in GENERATORS:
        raise UsageError(f"unknown family {args.family!r}; known: {', '.join(sorted(GENERATORS))}")
    g = GENERATORS[args.family][1](list(args.params))
    emit_json({"graph": g.to_json()}, cfg, stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# invariants


def _signature_json(g: Graph) -> dict:
    sig = signature(g)
    if isinstance(sig, Signature):
        return {"girth_regular": True, "signature": list(sig.entries), "label": sig.label()}
    return {"girth_regular": False, "signature": None, "label": None, "reason": str(sig)}


def cmd_signature(args, cfg, stdin, stdout) -> int:
    g = graph_of(load_document(args.graph, stdin))
    emit_json({"graph": g.name, **_signature_json(g)}, cfg, stdout)
    return EXIT_OK


def cmd_girth(args, cfg, stdin, stdout) -> int:
    g = graph_of(load_document(args.graph, stdin))
    gg = girth(g)
    doc = {"graph": g.name, "n": g.n, "m": g.m, "degree": g.regular_degree()}
    if gg == INFINITY:
        doc.update(girth=None, girth_cycles=0)
    else:
        doc.update(girth=gg, girth_cycles=len(enumerate_girth_cycles(g)))
    emit_json(doc, cfg, stdout)
    return EXIT_OK


def cmd_obstruct(args, cfg, stdin, stdout) -> int:
    g = graph_of(load_document(args.graph, stdin))
    ob = find_k23_obstruction(g) if girth(g) == 4 else None
    found = ob is not None
    body = {"pair": list(ob["pair"]), "common": list(ob["common"])} if found else None
    emit_json({"graph": g.name, "obstruction": body}, cfg, stdout)
    return EXIT_NEGATIVE if found else EXIT_OK


# ---------------------------------------------------------------------------
# egc find / verify / construct


_STATUS_EXIT = {COLORED: EXIT_OK, IMPOSSIBLE: EXIT_NEGATIVE, TIMEOUT: EXIT_TIMEOUT}


def cmd_egc_find(args, cfg, stdin, stdout) -> int:
    g = graph_of(load_document(args.graph, stdin))
    if args.via_triangles:
        v = egc_120(g, cfg.timeout)
    else:
        v = find_egc(g, timeout=cfg.timeout, jobs=cfg.jobs)
    doc = {"graph": g.to_json(), "verdict": v.to_json(timing=args.timing)}
    if v.coloring is not None:
        doc["coloring"] = v.coloring.to_json()
    emit_json(doc, cfg, stdout)
    return _STATUS_EXIT[v.status]


def cmd_egc_verify(args, cfg, stdin, stdout) -> int:
    doc = load_document(args.document, stdin)
    g = graph_of(doc)
    if args.coloring:
        data = json.loads(_read_text(args.coloring, stdin))
        col = coloring_of(data if "coloring" in data else {"coloring": data})
    else:
        col = coloring_of(doc)
    if col is None:
        raise UsageError("no coloring to verify")
    try:
        bad = verify_egc(g, col)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    out = {
        "graph": g.name,
        "egc": not bad,
        "violations": [{"kind": b.kind, "where": list(b.where), "colors": list(b.colors)} for b in bad],
    }
    emit_json(out, cfg, stdout)
    return EXIT_OK if not bad else EXIT_NEGATIVE


def _pairing_for(name: str, params: List[int], c: EdgeColoring):
    if name == "zigzag":
        res = zigzag_plan_and_coloring(CutoutSpec(TORUS, *params))
        return res[0].pairing if isinstance(res, tuple) else ZigzagPlan().pairing
    if name == "wreath":
        return wreath_plg_pairing(params[0])
    if c.kappa == 4:
        return ((1, 2), (3, 4))
    return tuple((a, b) for a in range(1, c.kappa + 1) for b in range(a + 1, c.kappa + 1))


def cmd_egc_construct(args, cfg, stdin, stdout) -> int:
    params = _ints(args.params, args.name)
    if args.name not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.name!r}; known: {', '.join(CONSTRUCTIONS)}")
    g, c = construct(args.name, params)
    if isinstance(c, NotApplicable):
        emit_json({"graph": g.to_json(), "coloring": None, "not_applicable": c.reason}, cfg, stdout)
        return EXIT_NEGATIVE
    doc = {"graph": g.to_json(), "coloring": c.to_json(), "egc": not verify_egc(g, c)}
    if args.explain:
        doc["explain"] = explain(g, c, _pairing_for(args.name, params, c))
    emit_json(doc, cfg, stdout)
    return EXIT_OK if doc["egc"] else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# triangle replacement


def _load_multigraph(ref: str, extra: List[str], stdin) -> Multigraph:
    if ref == "theta":
        return families.theta()
    if ref == "bridged":
        (k,) = _nparams(_ints(extra, "bridged"), 1, "bridged k")
        return families.bridged_odd_cycles(k)
    if ref != "-" and not os.path.exists(ref) and ref in CATALOG:
        return Multigraph.from_graph(named(ref))
    data = json.loads(_read_text(ref, stdin))
    data = data.get("multigraph", data.get("graph", data))
    return Multigraph.from_pairs(int(data["n"]), data["edges"], data.get("name", ""))


def _multigraph_json(m: Multigraph) -> dict:
    return {"name": m.name, "n": m.n, "edges": [[u, v] for _, u, v in m.edges]}


def cmd_nabla_apply(args, cfg, stdin, stdout) -> int:
    m = _load_multigraph(args.source, list(args.params), stdin)
    g = families.nabla(m)
    emit_json({"graph": g.to_json(), "base": _multigraph_json(m)}, cfg, stdout)
    return EXIT_OK


def cmd_nabla_invert(args, cfg, stdin, stdout) -> int:
    g = graph_of(load_document(args.graph, stdin))
    con = families.nabla_inverse(g)
    if isinstance(con, families.NotTriangleReplaced):
        emit_json(
            {"graph": g.name, "multigraph": None, "reason": f"vertex {con.vertex} lies on {con.triangles} triangles"},
            cfg,
            stdout,
        )
        return EXIT_NEGATIVE
    doc = {
        "graph": g.name,
        "multigraph": _multigraph_json(con.multigraph),
        "triangles": [list(t) for t in con.triangles],
    }
    emit_json(doc, cfg, stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# star notation


def _star_spec(params: Sequence[str]) -> CutoutSpec:
    r, t, s = _nparams(_ints(params, "star"), 3, "r t s")
    return CutoutSpec(TORUS, r, t, s)


def cmd_star(args, cfg, stdin, stdout) -> int:
    spec = _star_spec(args.params)
    if args.which == "formula":
        res = star_by_formula(spec)
        triple = None if isinstance(res, NotApplicable) else res
        extra = {}
    else:
        rep = star_oracle_for_spec(spec)
        res = rep
        triple = None if isinstance(rep, NotApplicable) else rep.triple
        extra = {} if triple is None else {"lengths": [list(x) for x in rep.lengths]}
    if triple is None:
        if cfg.format == "csv":
            emit_csv(["r", "t", "s", "a", "b", "c", "code"], [], cfg, stdout)
        else:
            emit_json({"r": spec.r, "t": spec.t, "s": spec.s, "star": None, "not_applicable": res.reason}, cfg, stdout)
        return EXIT_NEGATIVE
    if cfg.format == "csv":
        row = [str(x) for x in (spec.r, spec.t, spec.s, *triple.as_tuple())] + [triple.code()]
        emit_csv(["r", "t", "s", "a", "b", "c", "code"], [row], cfg, stdout)
    else:
        emit_json(
            {"r": spec.r, "t": spec.t, "s": spec.s, "star": list(triple.as_tuple()), "code": triple.code(), **extra},
            cfg,
            stdout,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweeps


def cmd_sweep_theorem(args, cfg, stdin, stdout) -> int:
    if args.item not in sweeps.ITEMS:
        raise UsageError(f"unknown item {args.item!r}; known: {', '.join(sweeps.ITEMS)}")
    t_values = parse_range(args.t) if args.t else None
    rows = sweeps.theorem_sweep(args.item, parse_range(args.r), t_values, cfg.timeout, cfg.jobs)
    if cfg.format == "csv":
        emit_csv(sweeps.THEOREM_HEADER, [r.csv_fields() for r in rows], cfg, stdout)
    else:
        body = [dict(zip(sweeps.THEOREM_HEADER, r.csv_fields())) for r in rows]
        emit_json({"rows": body, "all_agree": all(r.agree for r in rows if r.engine != "degenerate")}, cfg, stdout)
    if any(r.engine == TIMEOUT for r in rows):
        return EXIT_TIMEOUT
    return EXIT_OK if all(r.agree for r in rows if r.engine != "degenerate") else EXIT_NEGATIVE


def _star_rows_out(rows, cfg, stdout) -> int:
    if cfg.format == "csv":
        emit_csv(CSV_HEADER, [r.csv_fields() for r in rows], cfg, stdout)
    else:
        body = []
        for r in rows:
            d = dict(zip(CSV_HEADER, r.csv_fields()))
            d.update(printed=r.printed, matches_print=r.matches_print, note=r.note)
            body.append(d)
        emit_json({"rows": body}, cfg, stdout)
    applicable = [r for r in rows if r.formula is not None]
    return EXIT_OK if all(r.agree for r in applicable) else EXIT_NEGATIVE


def cmd_sweep_table_ix(args, cfg, stdin, stdout) -> int:
    if args.r or args.t or args.s:
        if not (args.r and args.t and args.s):
            raise UsageError("give all of --r, --t, --s or none")
        rows = table_ix_sweep(parse_range(args.r), parse_range(args.t), parse_range(args.s), TABLE_IX)
    else:
        rows = table_ix_cells()
    return _star_rows_out(rows, cfg, stdout)


def cmd_sweep_display_x(args, cfg, stdin, stdout) -> int:
    if args.r or args.s:
        r_values = parse_range(args.r) if args.r else sorted({k[0] for k in DISPLAY_X})
        s_values = parse_range(args.s) if args.s else sorted({k[2] for k in DISPLAY_X})
        rows = table_ix_sweep(r_values, [2], s_values, DISPLAY_X)
    else:
        rows = display_x_cells()
    return _star_rows_out(rows, cfg, stdout)


# ---------------------------------------------------------------------------
# conjectures, export, catalog


def cmd_conjecture(args, cfg, stdin, stdout) -> int:
    if args.name not in ("2egcs", "att", "att2"):
        raise UsageError(f"unknown conjecture {args.name!r}; use 2egcs, att or att2")
    report = sweeps.conjecture_run(args.name, cfg.timeout, cfg.jobs, args.max_vertices)
    emit_json(report, cfg, stdout)
    if any(r["counterexample"] for r in report["rows"]):
        return EXIT_NEGATIVE
    if any(r["verdict"] == TIMEOUT for r in report["rows"]):
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_export(args, cfg, stdin, stdout) -> int:
    doc = load_document(args.document, stdin)
    g = graph_of(doc)
    c = coloring_of(doc)
    if c is not None:
        c.check_domain(g)
    if cfg.format == "dot":
        _write(to_dot(g, c), cfg, stdout)
    elif cfg.format == "csv":
        rows = [[str(u), str(v)] + ([str(c.colors[e])] if c else []) for e, (u, v) in enumerate(g.edges)]
        emit_csv(["u", "v"] + (["color"] if c else []), rows, cfg, stdout)
    else:
        out = {"graph": g.to_json()}
        if c is not None:
            out["coloring"] = c.to_json()
        emit_json(out, cfg, stdout)
    return EXIT_OK


def cmd_catalog(args, cfg, stdin, stdout) -> int:
    rows = []
    for name in sorted(CATALOG):
        e = CATALOG[name]
        sig = "" if e.signature is None else " ".join(map(str, e.signature))
        cyc = "" if e.girth_cycles is None else str(e.girth_cycles)
        rows.append([name, str(e.n), str(e.degree), str(e.girth), sig, cyc])
        if args.check:
            named(name)  # recomputes and asserts the listed invariants
    cols = ["name", "n", "degree", "girth", "signature", "girth_cycles"]
    if cfg.format == "csv":
        emit_csv(cols, rows, cfg, stdout)
    else:
        emit_json({"graphs": [dict(zip(cols, r)) for r in rows]}, cfg, stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser, timeout: Optional[float] = 300.0, fmt: str = "json") -> None:
    p.add_argument("--timeout", type=float, default=timeout, help="search budget in seconds")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "csv", "dot"), default=fmt)


def _add_egc_actions(esub) -> None:
    p = esub.add_parser("find", help="decide whether an edge-girth coloring exists")
    p.add_argument("graph")
    p.add_argument("--via-triangles", action="store_true", help="decide a (1,1,0) cubic graph by contraction")
    p.add_argument("--timing", action="store_true", help="report wall-clock milliseconds (breaks byte-identity)")
    _common(p)
    p.set_defaults(func=cmd_egc_find)
    p = esub.add_parser("verify", help="check a coloring against every girth cycle")
    p.add_argument("document", help="JSON with graph and coloring, or '-'")
    p.add_argument("--coloring", default=None, help="separate coloring JSON file")
    _common(p)
    p.set_defaults(func=cmd_egc_verify)
    p = esub.add_parser("construct", help="build a known coloring")
    p.add_argument("name", help="one of: " + ", ".join(CONSTRUCTIONS))
    p.add_argument("params", nargs="*")
    p.add_argument("--explain", action="store_true", help="include the 2-factor cycle structure")
    _common(p)
    p.set_defaults(func=cmd_egc_construct)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="egc", description="Edge-girth colorings of girth-tight graphs.")
    ap.add_argument("--version", action="version", version=f"egc {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("family", help="one of: " + ", ".join(sorted(GENERATORS)))
    p.add_argument("params", nargs="*")
    _common(p)
    p.set_defaults(func=cmd_gen)

    for name, fn, helptext in (
        ("signature", cmd_signature, "girth-cycle signature"),
        ("girth", cmd_girth, "girth and number of girth cycles"),
        ("obstruct", cmd_obstruct, "look for a K_{2,3} obstruction"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph", help="graph JSON file, '-' or a catalog name")
        _common(p)
        p.set_defaults(func=fn)

    egc = sub.add_parser("egc", help="find, verify or construct edge-girth colorings")
    _add_egc_actions(egc.add_subparsers(dest="action", required=True))
    # the same three actions are also available without the "egc" prefix
    _add_egc_actions(sub)

    nab = sub.add_parser("nabla", help="triangle replacement and contraction")
    nsub = nab.add_subparsers(dest="action", required=True)
    p = nsub.add_parser("apply")
    p.add_argument("source", help="theta, bridged K, a catalog name or a multigraph JSON file")
    p.add_argument("params", nargs="*")
    _common(p)
    p.set_defaults(func=cmd_nabla_apply)
    p = nsub.add_parser("invert")
    p.add_argument("graph")
    _common(p)
    p.set_defaults(func=cmd_nabla_invert)

    star = sub.add_parser("star", help="star triple of a zigzag-colored torus")
    ssub = star.add_subparsers(dest="which", required=True)
    for which in ("formula", "oracle"):
        p = ssub.add_parser(which)
        p.add_argument("params", nargs=3, metavar=("r", "t", "s"))
        _common(p)
        p.set_defaults(func=cmd_star)

    sw = sub.add_parser("sweep", help="parameter sweeps")
    wsub = sw.add_subparsers(dest="which", required=True)
    p = wsub.add_parser("theorem-re", help="stated egc condition against the engine")
    p.add_argument("--item", required=True, help="3a..3f")
    p.add_argument("--r", required=True, help="range such as 6-14 or 6,8,10")
    p.add_argument("--t", default=None, help="t range for items 3e and 3f")
    _common(p, fmt="csv")
    p.set_defaults(func=cmd_sweep_theorem)
    p = wsub.add_parser("table-ix", help="star formula against oracle, t odd")
    for flag in ("--r", "--t", "--s"):
        p.add_argument(flag, default=None)
    _common(p, fmt="csv")
    p.set_defaults(func=cmd_sweep_table_ix)
    p = wsub.add_parser("display-x", help="star formula against oracle, t = 2")
    for flag in ("--r", "--s"):
        p.add_argument(flag, default=None)
    _common(p, fmt="csv")
    p.set_defaults(func=cmd_sweep_display_x)

    p = sub.add_parser("conjecture", help="search for counterexamples")
    p.add_argument("name", help="2egcs, att or att2")
    p.add_argument("--max-vertices", type=int, default=None)
    _common(p, timeout=60.0)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("export", help="write a graph (and coloring) as json, csv or dot")
    p.add_argument("document")
    _common(p, fmt="dot")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("catalog", help="list the named graphs")
    p.add_argument("--check", action="store_true", help="build each graph and assert its invariants")
    _common(p)
    p.set_defaults(func=cmd_catalog)
    return ap


def _config(args: argparse.Namespace) -> RunConfig:
    skip = {"func", "timeout", "jobs", "out", "format", "command", "action", "which"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    command = " ".join(x for x in (args.command, getattr(args, "action", None), getattr(args, "which", None)) if x)
    timeout = None if args.timeout is not None and args.timeout <= 0 else args.timeout
    return RunConfig(command, params, timeout, max(1, args.jobs), args.out, args.format)


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARAMS
    cfg = _config(args)
    try:
        return args.func(args, cfg, stdin, stdout)
    except (UsageError, GraphError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"egc: error: {msg}\n")
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
