from __future__ import annotations

from dataclasses import dataclass

import pytest

from dominium import families, solvers
from dominium.graph import Graph, min_degree

GNP_CORPUS_SEED = 20240611
GNP_CORPUS_SIZE = 500
GNP_MAX_K = 5


@dataclass
class Solved:
    """Exact results for one graph; keyed by k where k applies."""

    g: Graph
    delta: int
    gamma_k: dict[int, solvers.SolveResult]
    gamma_xk: dict[int, solvers.SolveResult]
    rho: solvers.SolveResult


def solve_graph(g: Graph, max_k: int) -> Solved:
    delta = min_degree(g)
    return Solved(
        g,
        delta,
        {k: solvers.gamma_k(g, k) for k in range(1, max(max_k, delta + 1) + 1)},
        {k: solvers.gamma_xk(g, k) for k in range(1, delta + 2)},
        solvers.rho(g),
    )


_cache: dict[str, list[Solved]] = {}


def small_corpus() -> list[Solved]:
    """Every labeled graph of order 1..6 (33,867 graphs), gamma_k for k <= max(4, delta+1)."""
    if "small" not in _cache:
        _cache["small"] = [solve_graph(g, 4) for n in range(1, 7) for g in families.enumerate_all(n)]
    return _cache["small"]


def gnp_corpus() -> list[Solved]:
    """500 G(n, p) graphs, n in 7..14, seeded; k capped at GNP_MAX_K."""
    if "gnp" not in _cache:
        out = []
        for spec in families.gnp_corpus(GNP_CORPUS_SIZE, GNP_CORPUS_SEED):
            g = spec.build()
            delta = min_degree(g)
            top = min(delta + 1, GNP_MAX_K)
            out.append(Solved(
                g, delta,
                {k: solvers.gamma_k(g, k) for k in range(1, top + 1)},
                {k: solvers.gamma_xk(g, k) for k in range(1, top + 1)},
                solvers.rho(g),
            ))
        _cache["gnp"] = out
    return _cache["gnp"]


@pytest.fixture(scope="session")
def small():
    return small_corpus()


@pytest.fixture(scope="session")
def sampled():
    return gnp_corpus()


# One PASS/FAIL line per acceptance criterion, printed after the run.

_acceptance_lines: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_lines.append(f"{'PASS' if report.passed else 'FAIL'}  {doc}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
