from __future__ import annotations

import logging
from itertools import permutations
from math import perm
from typing import Sequence

from starcut.app.errors import InvalidInputError, ParameterError
from starcut.app.models import EdgeTag, PermLabel, StarGraph
from starcut.app.schemas import GraphSpec

logger = logging.getLogger(__name__)


def vertex_count(spec: GraphSpec) -> int:
    return perm(spec.n, spec.k)


def format_label(label: Sequence[int], n: int) -> str:
    # p1p2...pk for single-digit symbols, comma separated once n >= 10.
    if n <= 9:
        return "".join(str(s) for s in label)
    return ",".join(str(s) for s in label)


def parse_label(text: str, n: int, length: int | None = None) -> PermLabel:
    text = text.strip()
    if not text:
        raise InvalidInputError("empty label")
    try:
        if "," in text or n > 9:
            symbols = tuple(int(part) for part in text.split(","))
        else:
            symbols = tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise InvalidInputError(f"label {text!r} is not a symbol sequence") from exc
    validate_label(symbols, n, length)
    return symbols


def validate_label(label: Sequence[int], n: int, length: int | None = None) -> None:
    if length is not None and len(label) != length:
        raise InvalidInputError(f"label {tuple(label)} must have length {length}")
    for s in label:
        if not 1 <= s <= n:
            raise InvalidInputError(f"symbol {s} outside 1..{n} in {tuple(label)}")
    if len(set(label)) != len(label):
        raise InvalidInputError(f"label {tuple(label)} repeats a symbol")


def rank(label: Sequence[int], spec: GraphSpec) -> int:
    """Position of `label` in the lexicographic order of all k-permutations of 1..n."""
    validate_label(label, spec.n, spec.k)
    n, k = spec.n, spec.k
    used: set[int] = set()
    r = 0
    for pos, s in enumerate(label):
        smaller_unused = sum(1 for c in range(1, s) if c not in used)
        # Each choice at this position is followed by P(n-pos-1, k-pos-1) completions.
        r += smaller_unused * perm(n - pos - 1, k - pos - 1)
        used.add(s)
    return r


def unrank(index: int, spec: GraphSpec) -> PermLabel:
    n, k = spec.n, spec.k
    total = perm(n, k)
    if not 0 <= index < total:
        raise IndexError(f"index {index} outside 0..{total - 1}")
    remaining = list(range(1, n + 1))
    out = []
    for pos in range(k):
        block = perm(n - pos - 1, k - pos - 1)
        digit, index = divmod(index, block)
        out.append(remaining.pop(digit))
    return tuple(out)


def _neighbors_of(p: PermLabel, n: int) -> list[tuple[PermLabel, EdgeTag]]:
    out = []
    for i in range(2, len(p) + 1):
        q = list(p)
        q[0], q[i - 1] = q[i - 1], q[0]
        out.append((tuple(q), EdgeTag.swap(i)))
    present = set(p)
    for alpha in range(1, n + 1):
        if alpha not in present:
            out.append(((alpha,) + p[1:], EdgeTag.unswap()))
    return out


def build(spec: GraphSpec) -> StarGraph:
    spec = GraphSpec.of(spec.n, spec.k)
    n, k = spec.n, spec.k

    # itertools.permutations of a sorted pool yields lexicographic order.
    perms = tuple(permutations(range(1, n + 1), k))
    index = {p: i for i, p in enumerate(perms)}

    adjacency = []
    tags = []
    for p in perms:
        entries = sorted((index[q], tag) for q, tag in _neighbors_of(p, n))
        adjacency.append(tuple(v for v, _ in entries))
        tags.append(tuple(tag for _, tag in entries))

    logger.debug("built S_{%d,%d}: %d vertices", n, k, len(perms))
    return StarGraph(
        labels=tuple(format_label(p, n) for p in perms),
        adjacency=tuple(adjacency),
        spec=spec,
        perms=perms,
        index=index,
        tags=tuple(tags),
    )


def build_star(n: int, k: int) -> StarGraph:
    return build(GraphSpec.of(n, k))


def neighbors(g: StarGraph, v: int) -> list[tuple[int, EdgeTag]]:
    if not 0 <= v < g.n_vertices:
        raise IndexError(f"vertex {v} outside 0..{g.n_vertices - 1}")
    return list(zip(g.adjacency[v], g.tags[v]))


def vertex_of(g: StarGraph, label: str | Sequence[int]) -> int:
    symbols = parse_label(label, g.n, g.k) if isinstance(label, str) else tuple(label)
    try:
        return g.index[symbols]
    except KeyError:
        raise InvalidInputError(f"{symbols} is not a vertex of S_{{{g.n},{g.k}}}") from None


def relabel_symbols(g: StarGraph, sigma: dict[int, int]) -> list[int]:
    """
    Vertex map induced by applying the symbol permutation `sigma` to every label.
    Any such map is an automorphism of S_{n,k}, which is why the graph is
    vertex-transitive.
    """
    if sorted(sigma) != list(range(1, g.n + 1)) or sorted(sigma.values()) != list(range(1, g.n + 1)):
        raise ParameterError(f"sigma must permute 1..{g.n}")
    return [g.index[tuple(sigma[s] for s in p)] for p in g.perms]


def is_automorphism(g: StarGraph, mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(g.n_vertices)):
        return False
    for u, v in g.edges():
        if not g.has_edge(mapping[u], mapping[v]):
            return False
    return True


def check_structure(g: StarGraph) -> list[str]:
    """Problems with the invariants of S_{n,k}; empty when the graph is sound."""
    problems = []
    n, k = g.n, g.k
    if g.n_vertices != perm(n, k):
        problems.append(f"|V|={g.n_vertices}, expected {perm(n, k)}")
    for v, nbrs in enumerate(g.adjacency):
        if v in nbrs:
            problems.append(f"self-loop at {g.labels[v]}")
        if len(set(nbrs)) != len(nbrs) or list(nbrs) != sorted(nbrs):
            problems.append(f"adjacency of {g.labels[v]} is not sorted and simple")
        swaps = sum(1 for t in g.tags[v] if t.index is not None)
        if swaps != k - 1 or len(nbrs) - swaps != n - k:
            problems.append(f"{g.labels[v]} has {swaps} swap / {len(nbrs) - swaps} unswap neighbours")
        for u in nbrs:
            if v not in g.adjacency[u]:
                problems.append(f"edge {g.labels[v]}-{g.labels[u]} is not symmetric")
    return problems
