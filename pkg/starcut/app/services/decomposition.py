from __future__ import annotations

from itertools import combinations
from math import factorial
from typing import Sequence

from starcut.app.errors import InvalidInputError, ParameterError
from starcut.app.models import CliqueHandle, DecompositionView, Edge, PermLabel, StarGraph
from starcut.app.schemas import CrossCount, DecompositionSummary, GraphSpec
from starcut.app.services.graph_core import build, parse_label, validate_label


def _require_k2(g: StarGraph) -> None:
    if g.k < 2:
        raise ParameterError(f"k must satisfy k >= 2 here, got k={g.k}")


def decompose(g: StarGraph, t: int) -> DecompositionView:
    _require_k2(g)
    if not 2 <= t <= g.k:
        raise ParameterError(f"t must satisfy 2 <= t <= k={g.k}, got t={t}")

    parts: dict[int, list[int]] = {i: [] for i in range(1, g.n + 1)}
    for v, p in enumerate(g.perms):
        parts[p[t - 1]].append(v)

    cross: dict[tuple[int, int], list[Edge]] = {
        pair: [] for pair in combinations(range(1, g.n + 1), 2)
    }
    for u, v in g.edges():
        i, j = g.perms[u][t - 1], g.perms[v][t - 1]
        if i != j:
            cross[(min(i, j), max(i, j))].append((u, v))

    return DecompositionView(
        graph=g,
        t=t,
        parts={i: tuple(vs) for i, vs in parts.items()},
        # g.edges() already yields (min, max) pairs in sorted order.
        cross={pair: tuple(es) for pair, es in cross.items()},
    )


def expected_part_size(n: int, k: int) -> int:
    return factorial(n - 1) // factorial(n - k)


def expected_cross_size(n: int, k: int) -> int:
    return factorial(n - 2) // factorial(n - k)


def _project(p: PermLabel, t: int, i: int) -> PermLabel:
    # Drop bit t and close the gap left by symbol i.
    rest = p[: t - 1] + p[t:]
    return tuple(s - 1 if s > i else s for s in rest)


def part_as_star(view: DecompositionView, i: int) -> tuple[StarGraph, dict[int, int]]:
    g = view.graph
    if not 1 <= i <= g.n:
        raise ParameterError(f"part index must satisfy 1 <= i <= n={g.n}, got {i}")
    small = build(GraphSpec.of(g.n - 1, g.k - 1))
    mapping = {v: small.index[_project(g.perms[v], view.t, i)] for v in view.parts[i]}
    return small, mapping


def check_part_isomorphism(view: DecompositionView, i: int) -> bool:
    """Exhaustive check that part i maps onto S_{n-1,k-1} bijectively and edge-preservingly."""
    g = view.graph
    small, mapping = part_as_star(view, i)
    if len(set(mapping.values())) != small.n_vertices or len(mapping) != small.n_vertices:
        return False
    members = set(view.parts[i])
    internal = 0
    for u in view.parts[i]:
        for v in g.adjacency[u]:
            if v in members:
                internal += 1
                if not small.has_edge(mapping[u], mapping[v]):
                    return False
    return internal // 2 == small.edge_count


def clique_of(g: StarGraph, alpha: str | Sequence[int]) -> CliqueHandle:
    _require_k2(g)
    if isinstance(alpha, str):
        symbols = parse_label(alpha, g.n, g.k - 1)
    else:
        symbols = tuple(alpha)
        validate_label(symbols, g.n, g.k - 1)
    present = set(symbols)
    members = sorted(g.index[(p,) + symbols] for p in range(1, g.n + 1) if p not in present)
    return CliqueHandle(alpha=symbols, members=tuple(members))


def clique_key(g: StarGraph, v: int) -> PermLabel:
    """The alpha of the unique clique K^alpha containing v: its bits 2..k."""
    return g.perms[v][1:]


def default_alpha(g: StarGraph) -> PermLabel:
    # Clique through vertex 0 ("12...k"), i.e. alpha = "23...k".
    _require_k2(g)
    return tuple(range(2, g.k + 1))


def summarize(view: DecompositionView) -> DecompositionSummary:
    g = view.graph
    if len(view.parts) != g.n:
        raise InvalidInputError("decomposition has the wrong number of parts")
    return DecompositionSummary(
        n=g.n,
        k=g.k,
        t=view.t,
        part_sizes={i: len(vs) for i, vs in view.parts.items()},
        cross_counts=[CrossCount(i=i, j=j, edges=len(es)) for (i, j), es in view.cross.items()],
        isomorphic={i: check_part_isomorphism(view, i) for i in view.parts},
    )
