"""Deterministic graph generators and the ``kind:params`` family syntax.

Random graphs use SplitMix64 (Steele, Lea and Flood 2014): state advances by
``0x9E3779B97F4A7C15`` and each output is the standard 30/27/31 xor-shift
multiply finalizer. A pair is kept when the top 53 bits of its draw, read as
a fraction in ``[0, 1)``, are below ``p``. Pairs are drawn in graph6 order
(by ``j`` then ``i``). This algorithm is part of the output contract and must
not change.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import MAX_ORDER, Graph, join

MASK64 = (1 << 64) - 1
MAX_ENUMERATION_ORDER = 7


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` (modulo draw; bias is < 2**-50 here)."""
        return lo + self.next_u64() % (hi - lo + 1)


def _check_order(n: int, minimum: int = 1) -> None:
    if not minimum <= n <= MAX_ORDER:
        raise ValueError(f"order {n} outside {minimum}..{MAX_ORDER}")


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << v) for v in range(n)), n * (n - 1) // 2)


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, (0,) * n, 0)


def cycle(n: int) -> Graph:
    _check_order(n, 3)
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side at indices ``0..a-1``."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    _check_order(a + b)
    return join(empty(a), empty(b))


def h_family(k: int, r: int) -> Graph:
    """Clique on ``k*r`` vertices plus ``r`` apexes, each joined to its own block of ``k``.

    Clique vertices ``v_1..v_kr`` sit at indices ``0..kr-1``; apex ``u_{i+1}``
    sits at index ``kr+i`` and is adjacent to indices ``ki..ki+k-1``.
    """
    if k < 2 or r < 1:
        raise ValueError(f"h_family needs k >= 2 and r >= 1, got k={k}, r={r}")
    kr = k * r
    _check_order(kr + r)
    edges = [(i, j) for j in range(kr) for i in range(j)]
    for i in range(r):
        edges += [(kr + i, k * i + t) for t in range(k)]
    return Graph.from_edges(kr + r, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    _check_order(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def pair_index(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 order; bit ``t`` of an enumeration mask is pair ``t``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs if pairs is not None else pair_index(n)
    rows = [0] * n
    m = 0
    t = 0
    while mask:
        if mask & 1:
            i, j = pairs[t]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            m += 1
        mask >>= 1
        t += 1
    return Graph._trusted(n, tuple(rows), m)


def enumerate_all(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, by increasing upper-triangle mask."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration order {n} outside 1..{MAX_ENUMERATION_ORDER}")
    pairs = pair_index(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask, pairs)


def gnp_corpus(samples: int, seed: int, orders: tuple[int, int] = (7, 14),
               p: float | None = None) -> Iterator[FamilySpec]:
    """Specs for ``samples`` random graphs; order and (unless fixed) p drawn from ``seed``.

    Free ``p`` is drawn uniformly from ``[0.25, 0.95)``.
    """
    rng = SplitMix64(seed)
    for _ in range(samples):
        n = rng.randint(*orders)
        q = p if p is not None else round(0.25 + 0.7 * rng.random(), 4)
        yield FamilySpec("gnp", (n, q), rng.next_u64())


# FamilySpec text syntax

_ALIASES = {"bipartite": "complete_bipartite", "h": "h_family"}
_PUBLIC = {"complete_bipartite": "bipartite", "h_family": "h"}
_ARITY = {"complete": 1, "empty": 1, "cycle": 1, "path": 1,
          "complete_bipartite": 2, "h_family": 2}


class FamilySpecError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family instance such as ``h:4,2`` or ``gnp:12,0.5,42``.

    For ``join`` the params are the two operand specs.
    """

    kind: str
    params: tuple
    seed: int | None = None

    def __post_init__(self) -> None:
        kind = self.kind
        if kind in _ARITY:
            if len(self.params) != _ARITY[kind] or not all(isinstance(x, int) for x in self.params):
                raise FamilySpecError(f"{kind} takes {_ARITY[kind]} integer parameter(s)")
        elif kind == "gnp":
            if len(self.params) != 2 or self.seed is None:
                raise FamilySpecError("gnp takes n, p and a seed")
            n, p = self.params
            if not 1 <= n <= MAX_ORDER or not 0.0 <= p <= 1.0:
                raise FamilySpecError(f"gnp parameters out of range: n={n}, p={p}")
        elif kind == "join":
            if len(self.params) != 2 or not all(isinstance(x, FamilySpec) for x in self.params):
                raise FamilySpecError("join takes two family specs")
        else:
            raise FamilySpecError(f"unknown family kind {kind!r}")
        if kind == "h_family" and (self.params[0] < 2 or self.params[1] < 1):
            raise FamilySpecError("h_family requires k >= 2 and r >= 1")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        text = text.strip()
        kind, sep, rest = text.partition(":")
        if not sep or not rest:
            raise FamilySpecError(f"expected kind:params, got {text!r}")
        kind = _ALIASES.get(kind, kind)
        if kind == "join":
            operands: list[str] = []
            for token in rest.split(","):
                if ":" in token or not operands:
                    operands.append(token)
                else:
                    operands[-1] += "," + token
            if len(operands) != 2:
                raise FamilySpecError(f"join needs exactly two operands, got {text!r}")
            if any(op.startswith("join:") for op in operands):
                raise FamilySpecError("nested join is not supported")
            return cls("join", tuple(cls.parse(op) for op in operands))
        fields = rest.split(",")
        try:
            if kind == "gnp":
                if len(fields) != 3:
                    raise FamilySpecError("gnp takes n,p,seed")
                return cls("gnp", (int(fields[0]), float(fields[1])), int(fields[2]))
            return cls(kind, tuple(int(f) for f in fields))
        except ValueError as exc:
            if isinstance(exc, FamilySpecError):
                raise
            raise FamilySpecError(f"bad parameters in {text!r}: {exc}") from None

    def __str__(self) -> str:
        if self.kind == "join":
            return "join:" + ",".join(str(p) for p in self.params)
        if self.kind == "gnp":
            return f"gnp:{self.params[0]},{self.params[1]!r},{self.seed}"
        return f"{_PUBLIC.get(self.kind, self.kind)}:" + ",".join(map(str, self.params))

    def build(self) -> Graph:
        if self.kind == "join":
            return join(self.params[0].build(), self.params[1].build())
        if self.kind == "gnp":
            return gnp(*self.params, self.seed)
        return _BUILDERS[self.kind](*self.params)


_BUILDERS = {"complete": complete, "empty": empty, "cycle": cycle, "path": path,
             "complete_bipartite": complete_bipartite, "h_family": h_family}
