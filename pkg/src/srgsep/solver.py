"""Exact maximum clique / coclique search with spectral-bound certification.

The exact search is a bitset branch and bound in the style of Tomita's MCQ
and San Segundo's BBMC: vertices are renumbered by non-increasing degree,
candidate sets are Python ints, and each node is bounded by a greedy
colouring.  An optional spectral cap (e.g. the floor of the Delsarte or
Hoffman bound) ends the search as soon as an incumbent reaches it.
"""

from __future__ import annotations

import enum
import multiprocessing as mp
import os
import time
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .errors import BoundViolated, EmptyGraph
from .graph import DenseGraph

Mode = Literal["clique", "coclique"]

# graphs smaller than this are searched in-process even when threads > 1
PARALLEL_MIN_NU = 64


class SolveStatus(str, enum.Enum):
    Exact = "Exact"
    BoundCertified = "BoundCertified"
    LowerBoundOnly = "LowerBoundOnly"


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**8
    max_time: float = 600.0
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    seed: int = 0

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_time <= 0 or self.threads < 1:
            raise ValueError(f"budget values must be positive: {self}")


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: tuple[int, ...]
    status: SolveStatus
    nodes_explored: int
    elapsed: float
    mode: Mode = "clique"
    upper_bound: int | None = None  # best proven upper bound (== value unless LowerBoundOnly)

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "value": self.value,
            "witness": list(self.witness),
            "status": self.status.value,
            "upper_bound": self.upper_bound,
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
        }


def verify_witness(g: DenseGraph, vertices, mode: Mode = "clique") -> bool:
    """Exact pairwise check that `vertices` is a clique (or coclique)."""
    if mode == "clique":
        return g.is_clique(vertices)
    if mode == "coclique":
        return g.is_coclique(vertices)
    raise ValueError(f"unknown mode {mode!r}")


# -- exact search ---------------------------------------------------------

class _Stop(Exception):
    pass


class _Search:
    """Branch and bound over renumbered bitset rows.

    ``shared`` (optional) holds multiprocessing values (best, stop, nodes)
    used to exchange the incumbent size between worker processes.
    """

    def __init__(self, rows, cap, best, max_nodes, deadline, shared=None):
        self.rows = rows
        nu = len(rows)
        full = (1 << nu) - 1
        self.nonrows = [full & ~(r | (1 << i)) for i, r in enumerate(rows)]
        self.cap = cap
        self.best = best
        self.best_set: list[int] | None = None
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.shared = shared
        self.exhausted = False  # budget ran out
        self._flushed = 0

    def _poll(self):
        sh = self.shared
        if sh is not None:
            best, stop, nodes = sh
            with nodes.get_lock():
                nodes.value += self.nodes - self._flushed
                total = nodes.value
            self._flushed = self.nodes
            if stop.value:
                raise _Stop
            if best.value > self.best:
                self.best = best.value
        else:
            total = self.nodes
        if total >= self.max_nodes or time.monotonic() > self.deadline:
            self.exhausted = True
            if sh is not None:
                sh[1].value = 1
            raise _Stop

    def _improve(self, clique):
        self.best = len(clique)
        self.best_set = list(clique)
        if self.shared is not None:
            best = self.shared[0]
            with best.get_lock():
                if best.value < self.best:
                    best.value = self.best
        if self.cap is not None and self.best >= self.cap:
            if self.shared is not None:
                self.shared[1].value = 1
            raise _Stop

    def colour(self, P: int, kmin: int):
        """Greedy sequential colouring; returns vertices with colour > kmin, colours ascending."""
        nonrows = self.nonrows
        verts, cols = [], []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= nonrows[v]
                U ^= low
                if k > kmin:
                    verts.append(v)
                    cols.append(k)
        return verts, cols

    def expand(self, C: list[int], P: int):
        # node limit checked every node (exact when serial), the clock every 1024
        if self.nodes >= self.max_nodes or self.nodes & 1023 == 1023:
            self._poll()
        self.nodes += 1
        rows = self.rows
        verts, cols = self.colour(P, self.best - len(C))
        for i in range(len(verts) - 1, -1, -1):
            if len(C) + cols[i] <= self.best:
                return
            v = verts[i]
            C.append(v)
            newP = P & rows[v]
            if newP:
                self.expand(C, newP)
            elif len(C) > self.best:
                self._improve(C)
            C.pop()
            P &= ~(1 << v)


def _reorder(g_rows: tuple[int, ...], degrees) -> tuple[list[int], list[int]]:
    """Renumber by non-increasing degree (ties by index); return (order, new rows)."""
    nu = len(g_rows)
    order = sorted(range(nu), key=lambda v: (-int(degrees[v]), v))
    pos = [0] * nu
    for i, v in enumerate(order):
        pos[v] = i
    new_rows = []
    for v in order:
        r = g_rows[v]
        nr = 0
        while r:
            low = r & -r
            nr |= 1 << pos[low.bit_length() - 1]
            r ^= low
        new_rows.append(nr)
    return order, new_rows


def _greedy_clique(rows: list[int], starts: int = 16) -> list[int]:
    """Deterministic greedy cliques from the first few vertices; returns the largest."""
    best: list[int] = []
    nu = len(rows)
    for s in range(min(starts, nu)):
        C = [s]
        P = rows[s]
        while P:
            # pick the candidate with most neighbours among the candidates
            v = max(_bits(P), key=lambda u: ((rows[u] & P).bit_count(), -u))
            C.append(v)
            P &= rows[v]
        if len(C) > len(best):
            best = C
    return best


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# worker-side globals for the fork pool
_W: dict = {}


def _worker_init(rows, cap, max_nodes, deadline, shared):
    _W.update(rows=rows, cap=cap, max_nodes=max_nodes, deadline=deadline, shared=shared)


def _worker_branch(task):
    v, P, col = task
    best, stop, _ = _W["shared"]
    if stop.value or 1 + col <= best.value:
        return None, 0, False
    s = _Search(_W["rows"], _W["cap"], best.value, _W["max_nodes"], _W["deadline"], _W["shared"])
    newP = P & s.rows[v]
    try:
        if newP:
            s.expand([v], newP)
        elif 1 > s.best:
            s._improve([v])
    except _Stop:
        pass
    with _W["shared"][2].get_lock():
        _W["shared"][2].value += s.nodes - s._flushed
    return s.best_set, s.nodes, s.exhausted


def _run_parallel(search: _Search, P: int, threads: int):
    verts, cols = search.colour(P, search.best)
    tasks = []
    for i in range(len(verts) - 1, -1, -1):
        tasks.append((verts[i], P, cols[i]))
        P &= ~(1 << verts[i])
    ctx = mp.get_context("fork")
    best = ctx.Value("i", search.best)
    stop = ctx.Value("b", 0)
    nodes = ctx.Value("q", 0)
    shared = (best, stop, nodes)
    with ctx.Pool(threads, _worker_init, (search.rows, search.cap, search.max_nodes, search.deadline, shared)) as pool:
        for found, _, exhausted in pool.imap_unordered(_worker_branch, tasks, chunksize=1):
            if exhausted:
                search.exhausted = True
            if found is not None and len(found) > search.best:
                search.best = len(found)
                search.best_set = found
    search.nodes += nodes.value + 1


def max_clique(
    g: DenseGraph,
    spectral_cap: int | None = None,
    budget: Budget | None = None,
    initial: Iterable[int] | None = None,
    *,
    _mode: Mode = "clique",
) -> SolveResult:
    """Maximum clique of g.

    ``spectral_cap`` is an a-priori upper bound; reaching it ends the search
    with status BoundCertified.  ``initial`` is an optional known clique used
    as the starting incumbent.
    """
    if g.nu == 0:
        raise EmptyGraph("graph has no vertices")
    budget = budget or Budget()
    t0 = time.monotonic()
    if _mode == "clique":
        g_rows, degrees = g.rows, g.degrees
    else:
        comp = g.complement()
        g_rows, degrees = comp.rows, comp.degrees
    order, rows = _reorder(g_rows, degrees)
    pos = {v: i for i, v in enumerate(order)}

    inc = _greedy_clique(rows)
    if initial is not None:
        init = [pos[int(v)] for v in initial]
        if not verify_witness(g, [order[i] for i in init], _mode):
            raise ValueError(f"initial set is not a {_mode}")
        if len(init) > len(inc):
            inc = init
    if spectral_cap is not None and len(inc) > spectral_cap:
        raise BoundViolated(f"a {_mode} of size {len(inc)} exceeds the cap {spectral_cap}")

    search = _Search(rows, spectral_cap, len(inc), budget.max_nodes, t0 + budget.max_time)
    search.best_set = inc
    full = (1 << len(rows)) - 1
    root_bound = search.colour(full, 0)[1][-1]
    capped = spectral_cap is not None and len(inc) >= spectral_cap
    if not capped and len(inc) < root_bound:
        try:
            if budget.threads > 1 and len(rows) >= PARALLEL_MIN_NU:
                _run_parallel(search, full, budget.threads)
            else:
                search.expand([], full)
        except _Stop:
            pass

    value = search.best
    witness = tuple(sorted(order[i] for i in search.best_set))
    if len(witness) != value or not verify_witness(g, witness, _mode):
        raise AssertionError(f"solver produced an invalid {_mode} witness")
    if spectral_cap is not None and value > spectral_cap:
        raise BoundViolated(f"a {_mode} of size {value} exceeds the cap {spectral_cap}")
    if spectral_cap is not None and value == spectral_cap:
        status = SolveStatus.BoundCertified
        upper = value
    elif search.exhausted:
        status = SolveStatus.LowerBoundOnly
        upper = min(root_bound, spectral_cap) if spectral_cap is not None else root_bound
    else:
        status = SolveStatus.Exact
        upper = value
    return SolveResult(value, witness, status, search.nodes, time.monotonic() - t0, _mode, upper)


def max_coclique(
    g: DenseGraph,
    spectral_cap: int | None = None,
    budget: Budget | None = None,
    initial: Iterable[int] | None = None,
) -> SolveResult:
    """Maximum coclique of g: the same search run on the complement."""
    return max_clique(g, spectral_cap, budget, initial, _mode="coclique")


# -- heuristic search -----------------------------------------------------

def seed_search(
    g: DenseGraph,
    target: int,
    hints=None,
    budget: Budget | None = None,
    mode: Mode = "clique",
    seed: int | None = None,
    max_steps: int = 20_000,
) -> tuple[int, ...] | None:
    """Look for a clique (or coclique) of size >= target.

    Validated hints are tried first, then a tabu local search with add,
    swap and drop moves driven by a seeded generator.  Returns a sorted
    vertex tuple or None.
    """
    if target < 1:
        raise ValueError("target must be at least 1")
    budget = budget or Budget()
    if hints is not None:
        h = hints.clique if mode == "clique" else hints.coclique
        if h is not None and len(h) >= target and verify_witness(g, h, mode):
            return tuple(sorted(h))
    nu = g.nu
    if target > nu:
        return None
    rng = np.random.default_rng(budget.seed if seed is None else seed)
    A = g.adjacency
    if mode == "clique":
        conflict = ~A
        np.fill_diagonal(conflict, False)
    else:
        conflict = A
    deadline = time.monotonic() + budget.max_time
    steps = min(max_steps, budget.max_nodes)

    in_c = np.zeros(nu, dtype=bool)
    miss = np.zeros(nu, dtype=np.int32)  # members of C in conflict with v
    tabu = np.zeros(nu, dtype=np.int64)
    members: list[int] = []
    best: list[int] = []
    stale = 0
    restart_after = 50 * max(target, 10)

    def add(v):
        in_c[v] = True
        members.append(v)
        np.add(miss, conflict[v], out=miss, casting="unsafe")

    def drop(v):
        in_c[v] = False
        members.remove(v)
        np.subtract(miss, conflict[v], out=miss, casting="unsafe")

    add(int(rng.integers(nu)))
    for step in range(steps):
        if len(members) > len(best):
            best = list(members)
            stale = 0
            if len(best) >= target:
                break
        else:
            stale += 1
        if not step & 255 and time.monotonic() > deadline:
            break
        if stale > restart_after:
            for v in list(members):
                drop(v)
            tabu[:] = 0
            add(int(rng.integers(nu)))
            stale = 0
            continue
        free = ~in_c & (tabu <= step)
        adds = np.flatnonzero(free & (miss == 0))
        if adds.size:
            # prefer candidates that keep the most other candidates available
            if adds.size > 1:
                score = (~conflict[np.ix_(adds, adds)]).sum(axis=1)
                top = adds[score == score.max()]
            else:
                top = adds
            add(int(top[rng.integers(top.size)]))
            continue
        swaps = np.flatnonzero(free & (miss == 1))
        if swaps.size:
            v = int(swaps[rng.integers(swaps.size)])
            u = next(m for m in members if conflict[v, m])
            drop(u)
            add(v)
            tabu[u] = step + 7 + int(rng.integers(max(1, swaps.size)))
            continue
        u = members[int(rng.integers(len(members)))]
        drop(u)
        tabu[u] = step + 7
        if not members:
            add(int(rng.integers(nu)))

    if len(best) >= target:
        out = tuple(sorted(best))
        if verify_witness(g, out, mode):
            return out
    return None

