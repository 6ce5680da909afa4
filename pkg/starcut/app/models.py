from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from starcut.app.errors import InvalidInputError
from starcut.app.schemas import GraphSpec

# A vertex identity of S_{n,k}: k distinct symbols drawn from 1..n.
PermLabel = tuple[int, ...]

Edge = tuple[int, int]


class EdgeKind(str, Enum):
    SWAP = "swap"
    UNSWAP = "unswap"


@dataclass(frozen=True, order=True)
class EdgeTag:
    kind: EdgeKind
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind is EdgeKind.SWAP and (self.index is None or self.index < 2):
            raise InvalidInputError(f"swap edge needs a position >= 2, got {self.index}")
        if self.kind is EdgeKind.UNSWAP and self.index is not None:
            raise InvalidInputError("unswap edge carries no position")

    @classmethod
    def swap(cls, i: int) -> EdgeTag:
        return cls(EdgeKind.SWAP, i)

    @classmethod
    def unswap(cls) -> EdgeTag:
        return cls(EdgeKind.UNSWAP)

    @classmethod
    def parse(cls, text: str) -> EdgeTag:
        text = text.strip().lower()
        if text == "unswap":
            return cls.unswap()
        if text.startswith("swap_") and text[5:].isdigit():
            return cls.swap(int(text[5:]))
        raise InvalidInputError(f"unknown edge tag {text!r}")

    def __str__(self) -> str:
        if self.kind is EdgeKind.SWAP:
            return f"swap_{self.index}"
        return "unswap"


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected simple graph on dense indices 0..|V|-1 with sorted adjacency lists."""

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls,
        n_vertices: int,
        edges: Sequence[Edge],
        labels: Sequence[str] | None = None,
    ) -> SimpleGraph:
        nbrs: list[set[int]] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise InvalidInputError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise InvalidInputError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        names = tuple(labels) if labels is not None else tuple(str(v) for v in range(n_vertices))
        return cls(labels=names, adjacency=tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n_vertices(self) -> int:
        return len(self.adjacency)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        # Neighbourhood bitmasks; the solver works on these.
        out = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def label(self, v: int) -> str:
        return self.labels[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n_vertices and 0 <= v < self.n_vertices and bool(self.masks[u] >> v & 1)

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)


@dataclass(frozen=True, eq=False)
class StarGraph(SimpleGraph):
    """S_{n,k}. Indices follow the lexicographic order of the permutation labels."""

    spec: GraphSpec
    perms: tuple[PermLabel, ...]
    index: Mapping[PermLabel, int]
    tags: tuple[tuple[EdgeTag, ...], ...]

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.spec.k

    def tag(self, u: int, v: int) -> EdgeTag:
        nbrs = self.adjacency[u]
        for pos, w in enumerate(nbrs):
            if w == v:
                return self.tags[u][pos]
        raise InvalidInputError(f"({self.labels[u]}, {self.labels[v]}) is not an edge")

    def tagged_edges(self) -> Iterator[tuple[int, int, EdgeTag]]:
        for u, nbrs in enumerate(self.adjacency):
            for v, tag in zip(nbrs, self.tags[u]):
                if u < v:
                    yield (u, v, tag)


@dataclass(frozen=True)
class DecompositionView:
    """S_{n,k} split by the symbol at bit t into n copies of S_{n-1,k-1}."""

    graph: StarGraph
    t: int
    parts: Mapping[int, tuple[int, ...]]
    cross: Mapping[tuple[int, int], tuple[Edge, ...]]

    def part_of(self, v: int) -> int:
        return self.graph.perms[v][self.t - 1]


@dataclass(frozen=True)
class CliqueHandle:
    alpha: PermLabel
    members: tuple[int, ...]
