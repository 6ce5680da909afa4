from __future__ import annotations

import logging
from collections import deque
from typing import Iterable, Sequence

from starcut.app.errors import InvalidInputError, ParameterError, SizeError
from starcut.app.models import Edge, SimpleGraph, StarGraph
from starcut.app.schemas import CutMode, CutVerification, CutWitness
from starcut.app.services.decomposition import clique_of, default_alpha

logger = logging.getLogger(__name__)


def _normalize_edges(g: SimpleGraph, edges: Iterable[Sequence[int]]) -> list[Edge]:
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not g.has_edge(u, v):
            raise InvalidInputError(f"({u}, {v}) is not an edge of the graph")
        out.add((min(u, v), max(u, v)))
    return sorted(out)


def boundary(g: SimpleGraph, x: Iterable[int]) -> list[Edge]:
    members = set(x)
    if not members:
        raise ParameterError("X must be nonempty")
    if any(not 0 <= v < g.n_vertices for v in members):
        raise ParameterError("X contains a vertex out of range")
    if len(members) == g.n_vertices:
        raise ParameterError("X must be a proper subset of V")
    out = []
    for u in members:
        for v in g.adjacency[u]:
            if v not in members:
                out.append((min(u, v), max(u, v)))
    return sorted(out)


def _components(g: SimpleGraph, removed: set[Edge]) -> list[list[int]]:
    seen = [False] * g.n_vertices
    comps = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v] and (min(u, v), max(u, v)) not in removed:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _surviving_degrees(g: SimpleGraph, removed: Iterable[Edge]) -> list[int]:
    deg = list(g.degrees)
    for u, v in removed:
        deg[u] -= 1
        deg[v] -= 1
    return deg


def verify_h_edge_cut(g: SimpleGraph, b: Iterable[Sequence[int]], h: int) -> CutVerification:
    """Is G - B disconnected with minimum degree >= h?"""
    removed = _normalize_edges(g, b)
    comps = _components(g, set(removed))
    deg = _surviving_degrees(g, removed)
    low = [v for v, d in enumerate(deg) if d < h]
    return CutVerification(
        h=h,
        cut_size=len(removed),
        components=len(comps),
        component_sizes=sorted((len(c) for c in comps), reverse=True),
        min_degree=min(deg) if deg else 0,
        low_degree_vertices=low,
        valid=len(comps) >= 2 and not low,
    )


def make_witness(
    g: SimpleGraph,
    x: Iterable[int],
    h: int,
    mode: CutMode | None = None,
    flagged: bool = False,
) -> CutWitness:
    members = sorted(set(x))
    b = boundary(g, members)
    check = verify_h_edge_cut(g, b, h)
    deg = _surviving_degrees(g, b)
    inside = set(members)
    return CutWitness(
        x=tuple(members),
        boundary=tuple(b),
        h=h,
        min_deg_inside=min(deg[v] for v in members),
        min_deg_outside=min(d for v, d in enumerate(deg) if v not in inside),
        components=check.components,
        component_sizes=check.component_sizes,
        low_degree_vertices=check.low_degree_vertices,
        valid=check.valid,
        flagged=flagged,
        mode=mode,
    )


def construct_cut(
    g: StarGraph,
    h: int,
    alpha: str | Sequence[int] | None = None,
    mode: CutMode = CutMode.SUB_CLIQUE,
) -> CutWitness:
    """
    The constructive upper-bound cuts: the boundary of h+1 members of a clique
    K^alpha (SubClique) or of the whole clique (FullClique).

    SubClique is only guaranteed valid for 2h <= n-2; outside that range the
    witness is still returned, flagged, with its honest validity verdict.
    """
    if g.k < 2:
        raise ParameterError(f"k must satisfy k >= 2 here, got k={g.k}")
    if h < 0:
        raise ParameterError(f"h must satisfy h >= 0, got h={h}")
    clique = clique_of(g, default_alpha(g) if alpha is None else alpha)

    if mode is CutMode.SUB_CLIQUE:
        if h + 1 > len(clique.members):
            raise SizeError(f"h+1={h + 1} exceeds the clique order n-k+1={len(clique.members)}")
        x = clique.members[: h + 1]
        flagged = 2 * h > g.n - 2
    else:
        if h > g.n - g.k:
            raise ParameterError(f"h must satisfy h <= n-k={g.n - g.k}, got h={h}")
        x = clique.members
        flagged = False

    witness = make_witness(g, x, h, mode=mode, flagged=flagged)
    if flagged:
        logger.info("SubClique cut for h=%d outside 2h <= n-2 (n=%d): valid=%s", h, g.n, witness.valid)
    return witness


def best_constructive_cut(g: StarGraph, h: int) -> CutWitness | None:
    """Smallest valid constructive witness, preferring SubClique on ties."""
    if g.k < 2 or not 0 <= h <= g.n - g.k:
        return None
    found = []
    for mode in (CutMode.SUB_CLIQUE, CutMode.FULL_CLIQUE):
        w = construct_cut(g, h, mode=mode)
        if w.valid:
            found.append(w)
    if not found:
        return None
    return min(found, key=lambda w: w.cut_size)
