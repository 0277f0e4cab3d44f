"""Exact-rational bound evaluation and verdicts against solver values."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import solvers
from .graph import Graph, min_degree
from .graph6 import to_graph6


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    TIGHT = "tight"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not_applicable"


class BoundNotApplicable(ValueError):
    """The bound's degree hypothesis fails for this graph and k."""


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"bounds are stated for k >= 2, got {k}")


def eval_thm22(gamma_k_value: int, k: int) -> Fraction:
    """Upper bound k*gamma_k - (k-1)^2 on gamma_xk."""
    _check_k(k)
    return Fraction(k * gamma_k_value - (k - 1) ** 2)


def eval_trivial_kgamma(gamma_k_value: int, k: int) -> Fraction:
    _check_k(k)
    return Fraction(k * gamma_k_value)


def eval_thm23(n: int, rho_value: int, k: int) -> tuple[Fraction, Fraction]:
    """(k*rho, n - rho): lower and upper bounds on gamma_xk."""
    _check_k(k)
    return Fraction(k * rho_value), Fraction(n - rho_value)


def eval_prop24(n: int, m: int, delta: int, k: int) -> Fraction:
    """Lower bound ((delta + k)n - 2m) / (delta + 1), valid for delta >= k."""
    _check_k(k)
    if delta < k:
        raise BoundNotApplicable(f"min degree {delta} < k = {k}")
    return Fraction((delta + k) * n - 2 * m, delta + 1)


def eval_harary_haynes(n: int, m: int, k: int) -> Fraction:
    """Lower bound (2kn - 2m) / (k + 1), valid for delta >= k - 1."""
    _check_k(k)
    return Fraction(2 * k * n - 2 * m, k + 1)


class BoundName(str, enum.Enum):
    THM22_UPPER = "thm22_upper"
    THM23_LOWER = "thm23_lower"
    THM23_UPPER = "thm23_upper"
    PROP24_LOWER = "prop24_lower"
    HARARY_HAYNES_LOWER = "harary_haynes_lower"
    TRIVIAL_KGAMMA_UPPER = "trivial_kgamma_upper"


UPPER_BOUNDS = {BoundName.THM22_UPPER, BoundName.THM23_UPPER, BoundName.TRIVIAL_KGAMMA_UPPER}


@dataclass(frozen=True)
class BoundEntry:
    name: BoundName
    value: Fraction | None
    verdict: Verdict

    @property
    def is_upper(self) -> bool:
        return self.name in UPPER_BOUNDS

    @property
    def integer_form(self) -> int | None:
        """Strengthened integer bound (ceil for lower, floor for upper); display only."""
        if self.value is None:
            return None
        return math.floor(self.value) if self.is_upper else math.ceil(self.value)

    def gap(self, exact: int) -> Fraction | None:
        """Slack between bound and exact value; zero means tight."""
        if self.value is None:
            return None
        return self.value - exact if self.is_upper else exact - self.value


def judge(bound: Fraction, exact: int, upper: bool) -> Verdict:
    if bound == exact:
        return Verdict.TIGHT
    holds = exact < bound if upper else exact > bound
    return Verdict.HOLDS if holds else Verdict.VIOLATED


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    n: int
    m: int
    delta: int
    k: int
    exact: dict[str, int | None]
    bounds: list[BoundEntry]
    verdict_summary: dict[str, int] = field(default_factory=dict)

    @property
    def violations(self) -> list[BoundEntry]:
        return [b for b in self.bounds if b.verdict is Verdict.VIOLATED]

    def entry(self, name: BoundName | str) -> BoundEntry:
        name = BoundName(name)
        return next(b for b in self.bounds if b.name is name)


def verify_all(g: Graph, k: int) -> BoundReport:
    """Solve gamma_k, gamma_xk and rho exactly and judge every bound.

    When ``k > delta + 1`` gamma_xk is undefined; its value is reported as
    ``None`` and every bound is ``not_applicable``.
    """
    _check_k(k)
    gk = solvers.gamma_k(g, k).value
    rho = solvers.rho(g).value
    gxk = solvers.gamma_xk(g, k).value if k <= min_degree(g) + 1 else None
    return evaluate_bounds(g, k, gk, gxk, rho)


def evaluate_bounds(g: Graph, k: int, gk: int, gxk: int | None, rho: int) -> BoundReport:
    """Judge every bound given already-computed exact values (``gxk`` None if undefined)."""
    _check_k(k)
    n, m, delta = g.n, g.m, min_degree(g)
    candidates: list[tuple[BoundName, bool, Fraction | None]] = []
    tuple_ok = gxk is not None
    candidates.append((BoundName.THM22_UPPER, tuple_ok, eval_thm22(gk, k)))
    candidates.append((BoundName.TRIVIAL_KGAMMA_UPPER, tuple_ok, eval_trivial_kgamma(gk, k)))
    lo, hi = eval_thm23(n, rho, k)
    candidates.append((BoundName.THM23_LOWER, delta >= k, lo))
    candidates.append((BoundName.THM23_UPPER, delta >= k, hi))
    candidates.append((BoundName.PROP24_LOWER, delta >= k,
                       eval_prop24(n, m, delta, k) if delta >= k else None))
    candidates.append((BoundName.HARARY_HAYNES_LOWER, tuple_ok, eval_harary_haynes(n, m, k)))

    entries = []
    for name, applies, value in candidates:
        if not applies:
            entries.append(BoundEntry(name, None, Verdict.NOT_APPLICABLE))
        else:
            entries.append(BoundEntry(name, value, judge(value, gxk, name in UPPER_BOUNDS)))
    summary = {v.value: sum(e.verdict is v for e in entries) for v in Verdict}
    return BoundReport(to_graph6(g), n, m, delta, k,
                       {"gamma_k": gk, "gamma_xk": gxk, "rho": rho}, entries, summary)

