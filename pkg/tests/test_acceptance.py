"""Exit criteria. Each test's first docstring line is echoed as a PASS/FAIL row.

Corpus: every labeled graph of order 1..6 plus 500 seeded G(n, p) graphs with
n in 7..14 (see conftest). All comparisons are exact (integers or Fractions).
"""

from fractions import Fraction

from dominium import families
from dominium.bounds import (
    BoundName,
    Verdict,
    eval_harary_haynes,
    eval_prop24,
    eval_thm22,
    eval_thm23,
    evaluate_bounds,
)
from dominium.constructions import augment_to_ktuple, packing_complement
from dominium.graph import MAX_ORDER, min_degree
from dominium.graph6 import from_graph6, to_graph6
from dominium.harness import main
from dominium.solvers import gamma_k, gamma_xk, is_ktuple_dominating, oracle_solve, rho

SOLVE_ORDER_CAP = 20


def corpus(small, sampled):
    return list(small) + list(sampled)


def reports(records, bound_ks):
    for rec in records:
        for k in bound_ks(rec):
            yield rec, k, evaluate_bounds(rec.g, k, rec.gamma_k[k].value,
                                          rec.gamma_xk[k].value, rec.rho.value)


def tuple_ks(rec):
    """Every k >= 2 with gamma_xk defined and solved for this record."""
    return [k for k in rec.gamma_xk if k >= 2]


def test_c1_oracle_equivalence(small):
    """C1 oracle equivalence: all 32,768 order-6 graphs, k in 1..4, B&B == oracle (exact)."""
    order6 = [rec for rec in small if rec.g.n == 6]
    assert len(order6) == 32768
    mismatches = []
    for rec in order6:
        g = rec.g
        for k in range(1, 5):
            if rec.gamma_k[k].value != oracle_solve(g, "gamma_k", k).value:
                mismatches.append((to_graph6(g), "gamma_k", k))
            if k <= rec.delta + 1 and rec.gamma_xk[k].value != oracle_solve(g, "gamma_xk", k).value:
                mismatches.append((to_graph6(g), "gamma_xk", k))
        if rec.rho.value != oracle_solve(g, "rho").value:
            mismatches.append((to_graph6(g), "rho", None))
    assert mismatches == []


def test_c2_ktuple_upper_from_kdomination(small, sampled):
    """C2 gamma_xk <= k*gamma_k - (k-1)^2: zero violations on corpus; K_{k,k'} tight for k 2..6, k' k..8."""
    checked = 0
    for rec, k, rep in reports(corpus(small, sampled), tuple_ks):
        assert rep.entry(BoundName.THM22_UPPER).verdict is not Verdict.VIOLATED, (rep.graph_id, k)
        assert rec.gamma_xk[k].value <= eval_thm22(rec.gamma_k[k].value, k)
        checked += 1
    assert checked > 0
    for k in range(2, 7):
        for kp in range(k, 9):
            g = families.complete_bipartite(k, kp)
            gk, gxk = gamma_k(g, k).value, gamma_xk(g, k).value
            assert (gk, gxk) == (k, 2 * k - 1), (k, kp)
            assert gxk == eval_thm22(gk, k)


def test_c3_packing_sandwich(small, sampled):
    """C3 k*rho <= gamma_xk <= n - rho on corpus (delta >= k); h_family(k,r) doubly tight, H_{4,2}: n=10, 8, 2."""
    for rec, k, rep in reports(corpus(small, sampled), lambda r: [k for k in tuple_ks(r) if k <= r.delta]):
        lo, hi = eval_thm23(rec.g.n, rec.rho.value, k)
        assert lo <= rec.gamma_xk[k].value <= hi, (rep.graph_id, k)
        assert rep.entry(BoundName.THM23_LOWER).verdict is not Verdict.VIOLATED
        assert rep.entry(BoundName.THM23_UPPER).verdict is not Verdict.VIOLATED
    pairs = [(k, r) for k in range(2, 7) for r in range(1, 4) if r * (k + 1) <= SOLVE_ORDER_CAP]
    assert len(pairs) == 14  # only (6, 3) at order 21 is excluded
    for k, r in pairs:
        g = families.h_family(k, r)
        gxk, p = gamma_xk(g, k).value, rho(g).value
        assert (gxk, p) == (k * r, r), (k, r)
        assert eval_thm23(g.n, p, k) == (gxk, gxk)
    h42 = families.h_family(4, 2)
    assert (h42.n, gamma_xk(h42, 4).value, rho(h42).value) == (10, 8, 2)


def test_c4_degree_lower_bound(small, sampled):
    """C4 gamma_xk >= ((delta+k)n - 2m)/(delta+1): zero violations; tight on K_k + C_k (k 3..5) and K_n (n <= 12)."""
    for rec, k, rep in reports(corpus(small, sampled), lambda r: [k for k in tuple_ks(r) if k <= r.delta]):
        g = rec.g
        assert rec.gamma_xk[k].value >= eval_prop24(g.n, g.m, rec.delta, k), (rep.graph_id, k)
        assert rep.entry(BoundName.PROP24_LOWER).verdict is not Verdict.VIOLATED
    tight = []
    for k in (3, 4, 5):
        tight.append((families.join(families.complete(k), families.cycle(k)), k))
    for n in range(3, 13):
        tight += [(families.complete(n), k) for k in range(2, n)]
    for g, k in tight:
        gxk = gamma_xk(g, k).value
        assert gxk == k
        assert Fraction(gxk) == eval_prop24(g.n, g.m, min_degree(g), k), (to_graph6(g), k)


def test_c5_refinement(small, sampled):
    """C5 prop24 >= Harary-Haynes on every corpus graph with delta >= k, equality iff delta == k (exact)."""
    seen_equal = seen_strict = 0
    for rec in corpus(small, sampled):
        g = rec.g
        for k in range(2, rec.delta + 1):
            p24, hh = eval_prop24(g.n, g.m, rec.delta, k), eval_harary_haynes(g.n, g.m, k)
            assert p24 >= hh
            assert (p24 == hh) == (rec.delta == k), (to_graph6(g), k)
            seen_equal += p24 == hh
            seen_strict += p24 > hh
    assert seen_equal and seen_strict


def test_c6_construction_validity(small):
    """C6 augment_to_ktuple on gamma_k witnesses and packing_complement on rho witnesses: zero failures (order <= 6)."""
    runs = fallbacks = complements = 0
    for rec in small:
        g = rec.g
        for k in range(2, rec.delta + 2):
            d = rec.gamma_k[k].witness
            t = augment_to_ktuple(g, d, k)
            assert is_ktuple_dominating(g, t.d_double_prime, k)
            if t.fallback:
                assert t.d_double_prime == g.vertices
                fallbacks += 1
            else:
                assert len(t.d_double_prime) <= k * rec.gamma_k[k].value - (k - 1) ** 2
            runs += 1
            if k <= rec.delta:
                out = packing_complement(g, rec.rho.witness, k)
                assert is_ktuple_dominating(g, out, k)
                complements += 1
    assert runs and complements


def test_c7_proof_fidelity(small):
    """C7 counting inequality sum_{D_0} deg_{D'} + |D \\ D_0|(k-1) >= k(k-1) in every non-fallback run."""
    runs = 0
    for rec in small:
        for k in range(2, rec.delta + 2):
            t = augment_to_ktuple(rec.g, rec.gamma_k[k].witness, k)
            if t.fallback:
                continue
            lhs, rhs = t.counting_sides(rec.g)
            assert lhs >= rhs, (to_graph6(rec.g), k)
            t.check_proof_fidelity(rec.g)
            runs += 1
    assert runs > 0


def family_instances():
    for n in range(1, MAX_ORDER + 1):
        yield families.complete(n)
        yield families.empty(n)
        yield families.path(n)
        if n >= 3:
            yield families.cycle(n)
        for a in range(1, n):
            yield families.complete_bipartite(a, n - a)
        yield families.gnp(n, 0.5, n)
    for k in range(2, MAX_ORDER):
        for r in range(1, MAX_ORDER // (k + 1) + 1):
            yield families.h_family(k, r)
    for a in range(3, 33):
        yield families.join(families.complete(a), families.cycle(a))


def test_c8_codec_round_trip():
    """C8 graph6 round-trip identity: all graphs of order <= 6 and all family instances of order <= 64."""
    count = 0
    for n in range(1, 7):
        for g in families.enumerate_all(n):
            assert from_graph6(to_graph6(g)) == g
            count += 1
    assert count == sum(2 ** (n * (n - 1) // 2) for n in range(1, 7))
    for g in family_instances():
        h = from_graph6(to_graph6(g))
        assert h == g and h.m == g.m


def test_c9_sweep_determinism(tmp_path):
    """C9 two runs of sweep --gnp 10,0.5 --samples 100 --seed 1 --k 2..3 are byte-identical."""
    blobs = []
    for name in ("run1.json", "run2.json"):
        out = tmp_path / name
        code = main(["sweep", "--gnp", "10,0.5", "--samples", "100", "--seed", "1",
                     "--k", "2..3", "--out", str(out)])
        assert code == 0
        blobs.append(out.read_bytes())
    assert blobs[0] == blobs[1]
    assert b'"violations": 0' in blobs[0]
