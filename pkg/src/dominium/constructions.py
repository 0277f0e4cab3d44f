"""Turning k-dominating sets and 2-packings into k-tuple dominating sets.

:func:`augment_to_ktuple` seeds a k-dominating set ``D`` with ``k - 1``
outside vertices ``U`` and then tops up the members of ``D`` that still lack
``k - 1`` neighbours. The result has at most ``k|D| - (k-1)^2`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, iter_bits, min_degree, popcount
from .solvers import is_2_packing, is_k_dominating


class ConstructionError(ValueError):
    """A construction precondition does not hold."""


@dataclass(frozen=True)
class AugmentationTrace:
    k: int
    d: VertexSet
    u: VertexSet
    d_prime: VertexSet
    d_zero: VertexSet
    d_double_prime: VertexSet
    fallback: bool

    @property
    def bound(self) -> int:
        return self.k * len(self.d) - (self.k - 1) ** 2

    def counting_sides(self, g: Graph) -> tuple[int, int]:
        """``(sum of deg_{D'} over D_0 + |D minus D_0|(k-1), k(k-1))``."""
        k = self.k
        lhs = sum(popcount(g.adj[v] & self.d_prime.bits) for v in self.d_zero)
        lhs += (len(self.d) - len(self.d_zero)) * (k - 1)
        return lhs, k * (k - 1)

    def deficiency_total(self, g: Graph) -> int:
        """Helpers still owed to D_0 after seeding; bounds ``|D'' minus D'|``."""
        return sum(self.k - 1 - popcount(g.adj[v] & self.d_prime.bits) for v in self.d_zero)

    def check_proof_fidelity(self, g: Graph) -> None:
        """Assert the counting inequality and the helper-count bound for this run."""
        if self.fallback:
            return
        k = self.k
        if len(self.u) != k - 1 or self.u.bits & self.d.bits:
            raise AssertionError(f"U must be {k - 1} vertices outside D, got {self.u}")
        lhs, rhs = self.counting_sides(g)
        if lhs < rhs:
            raise AssertionError(f"counting inequality failed: {lhs} < {rhs}")
        added = len(self.d_double_prime) - len(self.d_prime)
        owed = self.deficiency_total(g)
        if not added <= owed <= (k - 1) * len(self.d) - k * (k - 1):
            raise AssertionError(f"helper count {added}, owed {owed} exceed the bound")


def _check_augment_inputs(g: Graph, d: VertexSet, k: int) -> None:
    if k < 2:
        raise ConstructionError(f"k must be at least 2, got {k}")
    if d.n != g.n:
        raise ConstructionError(f"width mismatch: graph order {g.n}, set width {d.n}")
    delta = min_degree(g)
    if delta < k - 1:
        raise ConstructionError(f"min degree {delta} < k - 1 = {k - 1}")
    if not is_k_dominating(g, d, k):
        raise ConstructionError(f"input set is not {k}-dominating")


def augment_to_ktuple(g: Graph, d: VertexSet, k: int) -> AugmentationTrace:
    """Extend a k-dominating set ``d`` to a k-tuple dominating set.

    ``U`` is the ``k - 1`` vertices outside ``d`` with the most neighbours in
    ``d`` (lowest index on ties). Helpers for the deficient members ``D_0``
    are added greedily, each time taking the outside vertex adjacent to the
    most still-deficient members (lowest index on ties). When
    ``k|d| - (k-1)^2 > n`` or fewer than ``k - 1`` vertices lie outside ``d``
    the whole vertex set is returned instead.
    """
    _check_augment_inputs(g, d, k)
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    outside = full & ~d.bits
    empty = VertexSet(n)

    if k * len(d) - (k - 1) ** 2 > n or popcount(outside) < k - 1:
        return AugmentationTrace(k, d, empty, d, empty, VertexSet(n, full), True)

    ranked = sorted(iter_bits(outside), key=lambda v: (-popcount(adj[v] & d.bits), v))
    u = 0
    for v in ranked[:k - 1]:
        u |= 1 << v
    d_prime = d.bits | u
    d_zero = 0
    for v in iter_bits(d.bits):
        if popcount(adj[v] & d_prime) < k - 1:
            d_zero |= 1 << v

    w = d_prime
    while True:
        still = 0
        for v in iter_bits(d_zero):
            if popcount(adj[v] & w) < k - 1:
                still |= 1 << v
        if not still:
            break
        best, best_hits = -1, 0
        for x in iter_bits(full & ~w):
            hits = popcount(adj[x] & still)
            if hits > best_hits:
                best, best_hits = x, hits
        # min degree >= k-1 guarantees a deficient vertex has a neighbour outside w
        assert best >= 0
        w |= 1 << best

    return AugmentationTrace(k, d, VertexSet(n, u), VertexSet(n, d_prime),
                             VertexSet(n, d_zero), VertexSet(n, w), False)


def kgamma_trivial_bound(g: Graph, d: VertexSet, k: int) -> VertexSet:
    """Give each member of ``d`` up to ``k - 1`` helpers, lowest indices first.

    Baseline without the ``U`` seeding; the result has at most ``k|d|``
    vertices.
    """
    _check_augment_inputs(g, d, k)
    w = d.bits
    for v in iter_bits(d.bits):
        missing = k - 1 - popcount(g.adj[v] & w)
        for x in iter_bits(g.adj[v] & ~w):
            if missing <= 0:
                break
            w |= 1 << x
            missing -= 1
    return VertexSet(g.n, w)


def packing_complement(g: Graph, p: VertexSet, k: int) -> VertexSet:
    """Everything outside a 2-packing; k-tuple dominating when min degree >= k."""
    if k < 2:
        raise ConstructionError(f"k must be at least 2, got {k}")
    if p.n != g.n:
        raise ConstructionError(f"width mismatch: graph order {g.n}, set width {p.n}")
    delta = min_degree(g)
    if delta < k:
        raise ConstructionError(f"min degree {delta} < k = {k}")
    if not is_2_packing(g, p):
        raise ConstructionError("input set is not a 2-packing")
    return p.complement()
