"""Exact backtracking over bitmask domains with all-different groups.

Variables are edges, values are colors 1..k stored as bits 0..k-1. Every
group is an all-different constraint; a group with exactly k members must
use every color once, which enables hidden-single propagation. Both the
proper-coloring constraint at a vertex of degree k and the rainbow
constraint on a girth cycle of length k are of that shape.
"""
from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple


class SearchTimeout(Exception):
    pass


@dataclass(frozen=True)
class Problem:
    """A coloring problem: ``nvars`` variables, ``k`` colors, groups of variable ids.

    ``rank`` gives the static tie-break priority of each variable (lower first).
    """

    nvars: int
    k: int
    groups: Tuple[Tuple[int, ...], ...]
    rank: Tuple[int, ...]


@dataclass
class Outcome:
    status: str  # "sat", "unsat" or "timeout"
    values: Optional[List[int]]
    nodes: int
    depth: int
    root_trace: List[Tuple[int, int]] = field(default_factory=list)


def _bits(mask: int) -> List[int]:
    out = []
    b = 0
    while mask:
        if mask & 1:
            out.append(b)
        mask >>= 1
        b += 1
    return out


class _Solver:
    def __init__(self, problem: Problem, deadline: Optional[float]):
        self.p = problem
        self.full = (1 << problem.k) - 1
        self.dom = [self.full] * problem.nvars
        var_groups: List[List[int]] = [[] for _ in range(problem.nvars)]
        for gi, grp in enumerate(problem.groups):
            for v in grp:
                var_groups[v].append(gi)
        self.var_groups = var_groups
        self.complete = [len(grp) == problem.k for grp in problem.groups]
        self.trail: List[Tuple[int, int]] = []
        self.deadline = deadline
        self.nodes = 0
        self.depth = 0
        self.popcount = [bin(m).count("1") for m in range(self.full + 1)]

    # -- propagation -------------------------------------------------------
    def _undo(self, mark: int) -> None:
        trail, dom = self.trail, self.dom
        while len(trail) > mark:
            v, old = trail.pop()
            dom[v] = old

    def _restrict(self, var: int, mask: int) -> bool:
        """Intersect the domain of ``var`` with ``mask`` and propagate."""
        dom = self.dom
        nd = dom[var] & mask
        if nd == 0:
            return False
        if nd == dom[var]:
            return True
        self.trail.append((var, dom[var]))
        dom[var] = nd
        return self._propagate([var] if nd & (nd - 1) == 0 else [], set(self.var_groups[var]))

    def _propagate(self, queue: List[int], dirty: set) -> bool:
        dom, trail, groups, var_groups = self.dom, self.trail, self.p.groups, self.var_groups
        complete, full = self.complete, self.full
        while queue or dirty:
            while queue:
                v = queue.pop()
                c = dom[v]
                for gi in var_groups[v]:
                    for w in groups[gi]:
                        if w != v:
                            dw = dom[w]
                            if dw & c:
                                nd = dw & ~c
                                if nd == 0:
                                    return False
                                trail.append((w, dw))
                                dom[w] = nd
                                if nd & (nd - 1) == 0:
                                    queue.append(w)
                                dirty.update(var_groups[w])
            if dirty:
                gi = dirty.pop()
                if not complete[gi]:
                    continue
                grp = groups[gi]
                seen_once = 0
                seen_twice = 0
                for w in grp:
                    dw = dom[w]
                    seen_twice |= seen_once & dw
                    seen_once |= dw
                if seen_once != full:
                    return False
                unique = full & ~seen_twice
                while unique:
                    b = unique & -unique
                    unique ^= b
                    for w in grp:
                        dw = dom[w]
                        if dw & b:
                            if dw != b:
                                trail.append((w, dw))
                                dom[w] = b
                                queue.append(w)
                                dirty.update(var_groups[w])
                            break
        return True

    def _select(self) -> Optional[int]:
        dom, pc, rank = self.dom, self.popcount, self.p.rank
        best = None
        best_key = None
        for v in range(self.p.nvars):
            size = pc[dom[v]]
            if size > 1:
                key = (size, rank[v])
                if best_key is None or key < best_key:
                    best_key = key
                    best = v
                    if size == 2 and rank[v] == 0:
                        break
        return best

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and (self.nodes & 255) == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout

    # -- driver ------------------------------------------------------------
    def setup(self, fixed: Dict[int, int]) -> bool:
        for var in sorted(fixed):
            if not self._restrict(var, 1 << (fixed[var] - 1)):
                return False
        # run hidden-single propagation on every group once
        return self._propagate([], set(range(len(self.p.groups))))

    def values(self) -> List[int]:
        return [_bits(d)[0] + 1 for d in self.dom]

    def run_from(self, var: Optional[int], colors: Sequence[int]) -> bool:
        """Depth-first search; ``var``/``colors`` give the first branching frame."""
        if var is None:
            return True
        stack = [[var, list(colors), len(self.trail)]]
        while stack:
            if len(stack) > self.depth:
                self.depth = len(stack)
            frame = stack[-1]
            self._undo(frame[2])
            if not frame[1]:
                stack.pop()
                continue
            c = frame[1].pop(0)
            self._tick()
            if self._restrict(frame[0], 1 << c):
                nxt = self._select()
                if nxt is None:
                    return True
                stack.append([nxt, _bits(self.dom[nxt]), len(self.trail)])
        return False


def _root(problem: Problem, fixed: Dict[int, int], deadline: Optional[float]):
    s = _Solver(problem, deadline)
    ok = s.setup(fixed)
    trace = [(v, _bits(d)[0] + 1) for v, d in enumerate(s.dom) if d and d & (d - 1) == 0]
    return s, ok, trace


def _branch(problem: Problem, fixed: Dict[int, int], deadline: Optional[float], color: int):
    s, ok, _ = _root(problem, fixed, None)
    s.deadline = deadline
    var = s._select()
    try:
        found = s.run_from(var, [color])
    except SearchTimeout:
        return ("timeout", None, s.nodes, s.depth)
    return ("sat" if found else "unsat", s.values() if found else None, s.nodes, s.depth)


def solve(
    problem: Problem,
    fixed: Optional[Dict[int, int]] = None,
    timeout: Optional[float] = None,
    jobs: int = 1,
) -> Outcome:
    """Find the first solution in the deterministic search order.

    With ``jobs > 1`` the branches of the first decision run in separate
    processes; the reported solution and node count match the sequential run.
    """
    fixed = dict(fixed or {})
    deadline = None if timeout is None else time.monotonic() + timeout
    s, ok, trace = _root(problem, fixed, deadline)
    if not ok:
        return Outcome("unsat", None, 0, 0, trace)
    var = s._select()
    if var is None:
        return Outcome("sat", s.values(), 0, 0, trace)
    colors = _bits(s.dom[var])
    if jobs <= 1 or len(colors) < 2:
        try:
            found = s.run_from(var, colors)
        except SearchTimeout:
            return Outcome("timeout", None, s.nodes, s.depth, trace)
        return Outcome("sat" if found else "unsat", s.values() if found else None, s.nodes, s.depth, trace)

    ctx = multiprocessing.get_context("fork")
    pool = ctx.Pool(processes=min(jobs, len(colors)))
    try:
        pending = [pool.apply_async(_branch, (problem, fixed, deadline, c)) for c in colors]
        nodes = 0
        depth = 0
        for res in pending:
            status, values, n, d = res.get()
            nodes += n
            depth = max(depth, d)
            if status != "unsat":
                return Outcome(status, values, nodes, depth, trace)
    finally:
        pool.terminate()
        pool.join()
    return Outcome("unsat", None, nodes, depth, trace)
