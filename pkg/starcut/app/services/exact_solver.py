"""
Exact h-super edge-connectivity by search over connected vertex subsets.

Any minimum h-edge-cut B contains the boundary of a smallest component X of
G - B, and (X, V - X) still satisfies both degree constraints. So it is
enough to minimise |dX| over connected X with |X| <= |V|/2 such that
G[X] and G[V - X] both have minimum degree >= h.

Subsets are grown from a fixed root r using only vertices with index > r;
every branch either includes or excludes the smallest frontier vertex, so
each connected subset with minimum element r is reached exactly once.
"""

from __future__ import annotations

import logging
import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

from starcut.app.errors import ParameterError, SizeError
from starcut.app.models import SimpleGraph, StarGraph
from starcut.app.schemas import SearchBudget, SolverResult
from starcut.app.services.cut_construct import best_constructive_cut, make_witness

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_VERTICES = 30

# Nodes processed between budget checks.
_CHECK_EVERY = 2048


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------- classical edge connectivity ----------


def _is_connected(g: SimpleGraph) -> bool:
    if g.n_vertices == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n_vertices


def _max_flow(g: SimpleGraph, s: int, t: int, limit: int) -> int:
    """Unit-capacity max-flow between s and t, stopping once it reaches `limit`."""
    flow: dict[tuple[int, int], int] = {}
    value = 0
    while value < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if v not in parent and flow.get((u, v), 0) < 1:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            break
        v = t
        while v != s:
            u = parent[v]
            flow[(u, v)] = flow.get((u, v), 0) + 1
            flow[(v, u)] = flow.get((v, u), 0) - 1
            v = u
        value += 1
    return value


def edge_connectivity(g: SimpleGraph) -> int:
    if g.n_vertices <= 1 or not _is_connected(g):
        return 0
    best = min(g.degrees)
    for t in range(1, g.n_vertices):
        best = min(best, _max_flow(g, 0, t, best))
    return best


# ---------- branch and bound ----------


class _BudgetExceeded(Exception):
    pass


class _Incumbent:
    """Best (value, X) seen so far. Smaller value wins, then the lexicographically smaller X."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.value: int | None = None
        self.members: tuple[int, ...] | None = None

    def snapshot(self) -> tuple[int | None, tuple[int, ...] | None]:
        with self._lock:
            return self.value, self.members

    def offer(self, value: int, members: tuple[int, ...]) -> bool:
        with self._lock:
            if (
                self.value is None
                or value < self.value
                or (value == self.value and members < self.members)
            ):
                self.value, self.members = value, members
                return True
            return False


class _Search:
    def __init__(
        self,
        g: SimpleGraph,
        h: int,
        cap: int,
        incumbent: _Incumbent,
        budget: SearchBudget,
        started: float,
    ) -> None:
        self.masks = g.masks
        self.deg = g.degrees
        self.nv = g.n_vertices
        self.h = h
        self.cap = cap
        self.incumbent = incumbent
        self.node_limit = budget.node_limit
        self.check_every = min(_CHECK_EVERY, budget.node_limit)
        self.deadline = started + budget.time_limit_ms / 1000.0
        self.stop = threading.Event()
        self._lock = threading.Lock()
        self.nodes = 0

    def _charge(self, count: int, final: bool = False) -> None:
        with self._lock:
            self.nodes += count
            over = self.nodes >= self.node_limit
        if final:
            return
        if over or time.perf_counter() >= self.deadline:
            self.stop.set()
        if self.stop.is_set():
            raise _BudgetExceeded()

    @staticmethod
    def _may_tie(r: int, best: tuple[int, ...] | None) -> bool:
        # Ties only matter if a set rooted at r could be lexicographically smaller.
        if best is None:
            return True
        return r < best[0] or (r == best[0] and len(best) > 1)

    def _lower_bound(self, x: int, excl: int, frontier: int, b: int) -> int:
        # Edges X-excluded are final. An undecided neighbour u either joins
        # (its edges to excluded vertices are cut) or stays out (its edges to X
        # are cut), so at least min(|N(u) & X|, |N(u) & excluded|) more.
        masks = self.masks
        slack = 0
        for u in _bits(frontier):
            a = (masks[u] & x).bit_count()
            e = (masks[u] & excl).bit_count()
            if a > e:
                slack += a - e
        return b - slack

    def _valid(self, x: int) -> bool:
        masks, deg, h = self.masks, self.deg, self.h
        outside = 0
        for v in _bits(x):
            if (masks[v] & x).bit_count() < h:
                return False
            outside |= masks[v]
        for y in _bits(outside & ~x):
            if deg[y] - (masks[y] & x).bit_count() < h:
                return False
        return True

    def _consider(self, x: int, b: int, size: int, r: int) -> None:
        value, best = self.incumbent.snapshot()
        if value is not None and (b > value or (b == value and not self._may_tie(r, best))):
            return
        # An even split is counted once, from the side holding vertex 0.
        if 2 * size == self.nv and r != 0:
            return
        if self._valid(x):
            members = tuple(_bits(x))
            if self.incumbent.offer(b, members):
                logger.debug("incumbent %d from root %d (|X|=%d)", b, r, size)

    def _include_ok(self, c: int, x2: int, excl: int) -> bool:
        masks, deg, h = self.masks, self.deg, self.h
        if (masks[c] & ~excl).bit_count() < h:
            return False
        for y in _bits(masks[c] & excl):
            if deg[y] - (masks[y] & x2).bit_count() < h:
                return False
        return True

    def _exclude_ok(self, c: int, x: int, excl2: int) -> bool:
        masks, deg, h = self.masks, self.deg, self.h
        if deg[c] - (masks[c] & x).bit_count() < h:
            return False
        for v in _bits(masks[c] & x):
            if (masks[v] & ~excl2).bit_count() < h:
                return False
        return True

    def run_root(self, r: int) -> None:
        masks, deg = self.masks, self.deg
        x = 1 << r
        excl = x - 1  # vertices below the root stay outside
        if not self._include_ok(r, x, excl):
            return
        b = deg[r]
        self._consider(x, b, 1, r)

        stack = [(x, excl, masks[r] & ~excl, b, 1)]
        pending = 0
        while stack:
            x, excl, frontier, b, size = stack.pop()
            pending += 1
            if pending >= self.check_every:
                self._charge(pending)
                pending = 0

            value, best = self.incumbent.snapshot()
            if value is not None:
                lb = self._lower_bound(x, excl, frontier, b)
                if lb > value or (lb == value and not self._may_tie(r, best)):
                    continue
            if size >= self.cap or not frontier:
                continue

            cbit = frontier & -frontier
            c = cbit.bit_length() - 1
            rest = frontier ^ cbit

            excl2 = excl | cbit
            if self._exclude_ok(c, x, excl2):
                stack.append((x, excl2, rest, b, size))

            x2 = x | cbit
            if self._include_ok(c, x2, excl):
                b2 = b + deg[c] - 2 * (masks[c] & x).bit_count()
                self._consider(x2, b2, size + 1, r)
                # Pushed last so the include branch is explored first.
                stack.append((x2, excl, (rest | masks[c]) & ~x2 & ~excl, b2, size + 1))
        self._charge(pending, final=True)


def lambda_h_exact(
    g: SimpleGraph,
    h: int,
    budget: SearchBudget | None = None,
    threads: int = 1,
    use_symmetry: bool = True,
) -> SolverResult:
    """
    Minimum h-edge-cut of g with a canonical witness (lexicographically
    smallest X among optimal ones).

    On S_{n,k}, symbol relabelings act transitively on vertices, so some
    optimal X contains vertex 0 and a single root suffices.
    """
    if h < 0:
        raise ParameterError(f"h must satisfy h >= 0, got h={h}")
    if threads < 1:
        raise ParameterError(f"threads must be >= 1, got {threads}")
    budget = budget or SearchBudget()
    started = time.perf_counter()
    nv = g.n_vertices

    def _elapsed() -> float:
        return round((time.perf_counter() - started) * 1000.0, 3)

    if nv < 2 or min(g.degrees) < h:
        # Some vertex can never reach degree h on either side.
        return SolverResult(value=None, exact=True, budget=budget, elapsed_ms=_elapsed())

    cap = nv // 2
    if budget.max_subset_size is not None:
        cap = min(cap, budget.max_subset_size)
    incumbent = _Incumbent()

    if isinstance(g, StarGraph):
        seed = best_constructive_cut(g, h)
        if seed is not None and 2 * len(seed.x) <= nv:
            incumbent.offer(seed.cut_size, seed.x)
            logger.debug("seeded incumbent %d from the %s cut", seed.cut_size, seed.mode)

    roots = [0] if use_symmetry and isinstance(g, StarGraph) else list(range(nv))
    search = _Search(g, h, cap, incumbent, budget, started)
    completed = True
    try:
        if threads > 1 and len(roots) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for future in [pool.submit(search.run_root, r) for r in roots]:
                    future.result()
        else:
            for r in roots:
                search.run_root(r)
    except _BudgetExceeded:
        completed = False
        logger.warning(
            "search budget exhausted after %d nodes; best found %s", search.nodes, incumbent.value
        )

    value, members = incumbent.snapshot()
    witness = make_witness(g, members, h) if members is not None else None
    result = SolverResult(
        value=value,
        witness=witness,
        nodes_explored=search.nodes,
        elapsed_ms=_elapsed(),
        exact=completed and cap == nv // 2,
        budget=budget,
    )
    logger.info(
        "lambda_h h=%d |V|=%d -> %s (exact=%s, nodes=%d, %.1f ms)",
        h, nv, value, result.exact, result.nodes_explored, result.elapsed_ms,
    )
    return result


# ---------- unpruned oracle ----------


def lambda_h_bruteforce(g: SimpleGraph, h: int) -> int | None:
    """Exhaustive scan of every connected X with |X| <= |V|/2; only for small graphs."""
    nv = g.n_vertices
    if nv > BRUTEFORCE_MAX_VERTICES:
        raise SizeError(f"brute force is capped at {BRUTEFORCE_MAX_VERTICES} vertices, got {nv}")
    if nv < 2 or min(g.degrees) < h:
        return None
    masks, deg = g.masks, g.degrees
    half = nv // 2
    full = (1 << nv) - 1
    best: int | None = None

    for r in range(nv):
        higher = full & ~((1 << (r + 1)) - 1)
        stack = [(1 << r, masks[r] & higher, masks[r] | 1 << r)]
        while stack:
            sub, ext, closed = stack.pop()
            size = sub.bit_count()

            if 2 * size < nv or r == 0:
                cut = 0
                ok = True
                for v in _bits(sub):
                    inside = (masks[v] & sub).bit_count()
                    cut += deg[v] - inside
                    if inside < h:
                        ok = False
                for y in _bits(closed & ~sub):
                    if deg[y] - (masks[y] & sub).bit_count() < h:
                        ok = False
                if ok and (best is None or cut < best):
                    best = cut

            if size == half:
                continue
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                w = wbit.bit_length() - 1
                stack.append((sub | wbit, ext | (masks[w] & higher & ~closed), closed | masks[w]))
    return best
