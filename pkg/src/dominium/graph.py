"""Immutable simple graphs with bit-vector adjacency rows.

Vertices are dense labels ``0..n-1``; row ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge. Rows fit one 64-bit word, so ``n <= MAX_ORDER``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_ORDER = 64


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of an order-``n`` graph, stored as a bitmask."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_ORDER:
            raise ValueError(f"vertex set width {self.n} outside 0..{MAX_ORDER}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} exceed width {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise IndexError(f"vertex {v} outside 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} outside 0..{self.n - 1}")
        return bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def _check(self, other: VertexSet) -> None:
        if other.n != self.n:
            raise ValueError(f"width mismatch: {self.n} vs {other.n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build through :meth:`from_edges` or :meth:`from_rows`; both validate
    symmetry and looplessness.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        limit = 1 << self.n
        total = 0
        for v, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise ValueError(f"row {v} has bits beyond order {self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            total += popcount(row)
        if total != 2 * self.m:
            raise ValueError(f"edge count {self.m} does not match rows ({total // 2})")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...], m: int) -> Graph:
        # Skips validation; callers build symmetric loopless rows by construction.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "m", m)
        return g

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> Graph:
        rows = tuple(rows)
        return cls(len(rows), rows, sum(popcount(r) for r in rows) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside 1..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls.from_rows(rows)

    def _vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, ordered by ``j`` then ``i``."""
        for j in range(self.n):
            for i in iter_bits(self.adj[j] & ((1 << j) - 1)):
                yield i, j

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self._vertex(u)] >> self._vertex(v) & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[self._vertex(v)])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def closed_rows(self) -> tuple[int, ...]:
        return tuple(r | 1 << v for v, r in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={list(self.edges())})"


def neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet(g.n, g.adj[g._vertex(v)])


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: ``v`` together with its neighbours."""
    return VertexSet(g.n, g.adj[g._vertex(v)] | 1 << v)


def degree_in(g: Graph, v: int, s: VertexSet) -> int:
    """Number of neighbours of ``v`` inside ``s``; ``v`` itself never counts."""
    if s.n != g.n:
        raise ValueError(f"width mismatch: graph order {g.n}, set width {s.n}")
    return popcount(g.adj[g._vertex(v)] & s.bits)


def min_degree(g: Graph) -> int:
    return min(popcount(r) for r in g.adj)


def max_degree(g: Graph) -> int:
    return max(popcount(r) for r in g.adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between the two parts.

    ``g`` keeps indices ``0..g.n-1``; ``h`` is shifted to ``g.n..g.n+h.n-1``.
    """
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"join order {n} exceeds {MAX_ORDER}")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [r | h_mask for r in g.adj] + [(r << g.n) | g_mask for r in h.adj]
    return Graph(n, tuple(rows), g.m + h.m + g.n * h.n)
