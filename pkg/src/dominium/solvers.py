"""Exact k-domination, k-tuple domination and 2-packing numbers.

Each parameter has a branch-and-bound solver and a brute-force oracle
(:func:`oracle_solve`) that shares nothing with it except the feasibility
checkers, so the two can cross-validate each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, VertexSet, iter_bits, min_degree, popcount

ORACLE_MAX_ORDER = 20


class Parameter(str, enum.Enum):
    GAMMA_K = "gamma_k"
    GAMMA_XK = "gamma_xk"
    RHO = "rho"


class ParameterUndefined(ValueError):
    """gamma_xk requested with k > delta + 1; no k-tuple dominating set exists."""


@dataclass(frozen=True)
class SolveResult:
    parameter: Parameter
    k: int | None
    value: int
    witness: VertexSet
    nodes_explored: int
    method: str  # "branch_and_bound" or "oracle"


def _check_width(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise ValueError(f"width mismatch: graph order {g.n}, set width {s.n}")


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")


# Feasibility on raw masks; the public checkers below wrap these.

def k_dominating_mask(adj: tuple[int, ...], d: int, k: int) -> bool:
    for v, row in enumerate(adj):
        if not d >> v & 1 and popcount(row & d) < k:
            return False
    return True


def ktuple_dominating_mask(adj: tuple[int, ...], d: int, k: int) -> bool:
    for v, row in enumerate(adj):
        need = k - 1 if d >> v & 1 else k
        if popcount(row & d) < need:
            return False
    return True


def packing_mask(closed: tuple[int, ...], p: int) -> bool:
    seen = 0
    for v in iter_bits(p):
        if seen & closed[v]:
            return False
        seen |= closed[v]
    return True


def is_k_dominating(g: Graph, d: VertexSet, k: int) -> bool:
    """Every vertex outside ``d`` has at least ``k`` neighbours in ``d``."""
    _check_width(g, d)
    _check_k(k)
    return k_dominating_mask(g.adj, d.bits, k)


def is_ktuple_dominating(g: Graph, d: VertexSet, k: int) -> bool:
    """k-dominating, and every member of ``d`` has at least ``k - 1`` neighbours in ``d``."""
    _check_width(g, d)
    _check_k(k)
    return ktuple_dominating_mask(g.adj, d.bits, k)


def is_ktuple_dominating_closed(g: Graph, d: VertexSet, k: int) -> bool:
    """Equivalent form: ``|N[v] & d| >= k`` for every vertex ``v``."""
    _check_width(g, d)
    _check_k(k)
    return all(popcount(c & d.bits) >= k for c in g.closed_rows())


def is_2_packing(g: Graph, p: VertexSet) -> bool:
    _check_width(g, p)
    return packing_mask(g.closed_rows(), p.bits)


# Branch and bound

def _dominate(g: Graph, k: int, tuple_: bool) -> tuple[int, int, int]:
    """Minimum set with every vertex covered ``k`` times.

    Coverage of ``v`` counts ``N[v] & D`` for the tuple variant. For plain
    k-domination a member of ``D`` is satisfied outright and an outsider
    counts ``N(v) & D``. Branches on the most deficient vertex (lowest index
    on ties), trying the undecided members of ``N[v]`` in ascending order,
    each branch excluding the candidates tried before it. The bound sorts
    per-vertex deficiency gains and counts how many additions could clear
    the total deficiency.
    """
    n = g.n
    adj = g.adj
    closed = g.closed_rows()
    full = (1 << n) - 1
    best_size = n
    best_set = full
    nodes = 0

    def search(d: int, x: int, size: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        undecided = full & ~(d | x)
        total = 0
        deficient = 0
        defs = [0] * n
        pick = -1
        pick_def = 0
        for v in range(n):
            if tuple_:
                dv = k - popcount(closed[v] & d)
            elif d >> v & 1:
                continue
            else:
                dv = k - popcount(adj[v] & d)
            if dv <= 0:
                continue
            if popcount(closed[v] & undecided) < (dv if tuple_ or x >> v & 1 else 1):
                return
            defs[v] = dv
            total += dv
            deficient |= 1 << v
            if dv > pick_def:
                pick, pick_def = v, dv
        if not total:
            if size < best_size:
                best_size, best_set = size, d
            return
        if size + 1 >= best_size:
            return
        if tuple_:
            gains = [popcount(closed[u] & deficient) for u in iter_bits(undecided)]
        else:
            gains = [defs[u] + popcount(adj[u] & deficient) for u in iter_bits(undecided)]
        gains.sort(reverse=True)
        need = 0
        covered = 0
        for gain in gains:
            if covered >= total or size + need >= best_size:
                break
            covered += gain
            need += 1
        if covered < total or size + need >= best_size:
            return
        tried = 0
        for c in iter_bits(closed[pick] & undecided):
            bit = 1 << c
            search(d | bit, x | tried, size + 1)
            tried |= bit
            if size + 1 >= best_size:
                return

    search(0, 0, 0)
    return best_size, best_set, nodes


def _max_packing(g: Graph) -> tuple[int, int, int]:
    """Maximum independent set of the distance-at-most-2 conflict graph.

    Include-first branching on the lowest candidate; bounded by a greedy
    clique cover of the remaining candidates in the conflict graph.
    """
    n = g.n
    closed = g.closed_rows()
    conflict = []
    for v in range(n):
        reach = 0
        for u in iter_bits(closed[v]):
            reach |= closed[u]
        conflict.append(reach)  # includes v itself
    best_size = 0
    best_set = 0
    nodes = 0

    def cover_bound(p: int) -> int:
        cliques = 0
        while p:
            low = p & -p
            v = low.bit_length() - 1
            clique_common = conflict[v]
            p ^= low
            rest = p & clique_common
            while rest:
                lw = rest & -rest
                u = lw.bit_length() - 1
                p ^= lw
                clique_common &= conflict[u]
                rest = p & clique_common
            cliques += 1
        return cliques

    def search(p: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if not p:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + cover_bound(p) <= best_size:
            return
        low = p & -p
        v = low.bit_length() - 1
        search(p & ~conflict[v], chosen | low, size + 1)
        search(p ^ low, chosen, size)

    search((1 << n) - 1, 0, 0)
    return best_size, best_set, nodes


def gamma_k(g: Graph, k: int) -> SolveResult:
    _check_k(k)
    value, bits, nodes = _dominate(g, k, tuple_=False)
    return SolveResult(Parameter.GAMMA_K, k, value, VertexSet(g.n, bits), nodes, "branch_and_bound")


def _check_tuple_defined(g: Graph, k: int) -> None:
    _check_k(k)
    delta = min_degree(g)
    if k > delta + 1:
        raise ParameterUndefined(f"gamma_x{k} undefined: k exceeds min degree + 1 = {delta + 1}")


def gamma_xk(g: Graph, k: int) -> SolveResult:
    _check_tuple_defined(g, k)
    value, bits, nodes = _dominate(g, k, tuple_=True)
    return SolveResult(Parameter.GAMMA_XK, k, value, VertexSet(g.n, bits), nodes, "branch_and_bound")


def rho(g: Graph) -> SolveResult:
    value, bits, nodes = _max_packing(g)
    return SolveResult(Parameter.RHO, None, value, VertexSet(g.n, bits), nodes, "branch_and_bound")


def solve(g: Graph, parameter: Parameter | str, k: int | None = None) -> SolveResult:
    parameter = Parameter(parameter)
    if parameter is Parameter.RHO:
        return rho(g)
    if k is None:
        raise ValueError(f"{parameter.value} needs k")
    return gamma_k(g, k) if parameter is Parameter.GAMMA_K else gamma_xk(g, k)


def oracle_solve(g: Graph, parameter: Parameter | str, k: int | None = None) -> SolveResult:
    """Plain subset enumeration by cardinality; the first feasible set in
    ``itertools.combinations`` order is the witness."""
    parameter = Parameter(parameter)
    n = g.n
    if n > ORACLE_MAX_ORDER:
        raise ValueError(f"oracle limited to order {ORACLE_MAX_ORDER}, got {n}")
    bits = [1 << v for v in range(n)]
    checked = 0
    if parameter is Parameter.RHO:
        closed = g.closed_rows()
        sizes = range(n, -1, -1)
        feasible = lambda s: packing_mask(closed, s)  # noqa: E731
    else:
        if k is None:
            raise ValueError(f"{parameter.value} needs k")
        if parameter is Parameter.GAMMA_XK:
            _check_tuple_defined(g, k)
            feasible = lambda s: ktuple_dominating_mask(g.adj, s, k)  # noqa: E731
        else:
            _check_k(k)
            feasible = lambda s: k_dominating_mask(g.adj, s, k)  # noqa: E731
        sizes = range(0, n + 1)
    for size in sizes:
        for combo in combinations(bits, size):
            s = sum(combo)
            checked += 1
            if feasible(s):
                return SolveResult(parameter, None if parameter is Parameter.RHO else k,
                                   size, VertexSet(n, s), checked, "oracle")
    raise AssertionError("no feasible set found")  # unreachable: V or {} always qualifies
