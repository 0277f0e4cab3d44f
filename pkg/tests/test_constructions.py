import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from dominium import families
from dominium.constructions import (
    ConstructionError,
    augment_to_ktuple,
    kgamma_trivial_bound,
    packing_complement,
)
from dominium.graph import VertexSet, min_degree
from dominium.solvers import gamma_k, is_2_packing, is_k_dominating, is_ktuple_dominating, rho

from test_graph import graphs

K23 = families.complete_bipartite(2, 3)


def test_augment_bipartite_trace():
    # hand trace: U = {2} (first 3-side vertex, deg_D = 2), D' = {0,1,2},
    # each of 0 and 1 now has one neighbour in D', so D_0 is empty
    t = augment_to_ktuple(K23, VertexSet.of(5, [0, 1]), 2)
    assert not t.fallback
    assert t.u.to_list() == [2]
    assert t.d_prime.to_list() == [0, 1, 2]
    assert t.d_zero.to_list() == []
    assert t.d_double_prime.to_list() == [0, 1, 2]
    assert t.bound == 3
    assert is_ktuple_dominating(K23, t.d_double_prime, 2)
    assert t.counting_sides(K23) == (2, 2)
    t.check_proof_fidelity(K23)


def test_augment_complete6_trace():
    g = families.complete(6)
    t = augment_to_ktuple(g, VertexSet.of(6, [0, 1, 2]), 3)
    assert t.u.to_list() == [3, 4]
    assert t.d_zero.to_list() == []
    assert len(t.d_double_prime) == 5 == t.bound
    assert is_ktuple_dominating(g, t.d_double_prime, 3)
    t.check_proof_fidelity(g)


def test_augment_fallback_when_bound_exceeds_order():
    g = families.complete(4)
    t = augment_to_ktuple(g, g.vertices, 3)  # 3*4 - 4 = 8 > 4
    assert t.fallback
    assert t.d_double_prime == g.vertices


def test_augment_with_deficient_members():
    # C_6 with D = {0, 2, 4}: U = {1}, so 0 and 2 reach one D'-neighbour but 4 does not
    g = families.cycle(6)
    d = VertexSet.of(6, [0, 2, 4])
    assert is_k_dominating(g, d, 2)
    t = augment_to_ktuple(g, d, 2)
    assert t.u.to_list() == [1]
    assert t.d_zero.to_list() == [4]
    assert t.d_double_prime.to_list() == [0, 1, 2, 3, 4]
    assert len(t.d_double_prime) <= t.bound == 5
    lhs, rhs = t.counting_sides(g)
    assert (lhs, rhs) == (0 + 2 * 1, 2)
    t.check_proof_fidelity(g)


@pytest.mark.parametrize("call", [
    lambda: augment_to_ktuple(K23, VertexSet.of(5, [0, 1]), 1),
    lambda: augment_to_ktuple(K23, VertexSet.of(5, [0]), 2),
    lambda: augment_to_ktuple(families.path(4), VertexSet.of(4, [0, 1, 2, 3]), 3),
    lambda: augment_to_ktuple(K23, VertexSet.of(4, [0, 1]), 2),
    lambda: packing_complement(families.cycle(6), VertexSet.of(6, [0, 1]), 2),
    lambda: packing_complement(families.cycle(6), VertexSet.of(6, [0, 3]), 3),
    lambda: packing_complement(families.cycle(6), VertexSet.of(6, [0, 3]), 1),
])
def test_preconditions(call):
    with pytest.raises(ConstructionError):
        call()


def test_kgamma_trivial():
    d = VertexSet.of(5, [0, 1])
    w = kgamma_trivial_bound(K23, d, 2)
    assert len(w) <= 4 and d <= w
    assert is_ktuple_dominating(K23, w, 2)
    g = families.complete(6)
    w = kgamma_trivial_bound(g, VertexSet.of(6, [0, 1, 2]), 3)
    assert len(w) <= 6 and is_ktuple_dominating(g, w, 3)


@pytest.mark.parametrize("g, p, k, expected", [
    (families.h_family(4, 2), [8, 9], 4, list(range(8))),
    (families.complete(6), [0], 3, [1, 2, 3, 4, 5]),
    (families.cycle(6), [0, 3], 2, [1, 2, 4, 5]),
])
def test_packing_complement(g, p, k, expected):
    out = packing_complement(g, VertexSet.of(g.n, p), k)
    assert out.to_list() == expected
    assert is_ktuple_dominating(g, out, k)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=10), st.integers(2, 4), st.data())
def test_augment_any_k_dominating_set(g, k, data):
    assume(min_degree(g) >= k - 1)
    # random k-dominating set: a random set grown by the solver witness
    bits = data.draw(st.integers(0, (1 << g.n) - 1)) | gamma_k(g, k).witness.bits
    d = VertexSet(g.n, bits)
    assert is_k_dominating(g, d, k)
    t = augment_to_ktuple(g, d, k)
    assert t.d <= t.d_prime <= t.d_double_prime
    assert is_ktuple_dominating(g, t.d_double_prime, k)
    if t.fallback:
        assert t.d_double_prime == g.vertices
    else:
        assert len(t.d_double_prime) <= k * len(d) - (k - 1) ** 2
        t.check_proof_fidelity(g)
    assert len(kgamma_trivial_bound(g, d, k)) <= k * len(d)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=10), st.integers(2, 4))
def test_packing_complement_any_graph(g, k):
    assume(min_degree(g) >= k)
    p = rho(g).witness
    assert is_2_packing(g, p)
    out = packing_complement(g, p, k)
    assert len(out) == g.n - len(p)
    assert is_ktuple_dominating(g, out, k)
