"""Command line front end: ``dominium {solve,verify,sweep,generate,construct}``.

Exit codes: 0 success, 2 parse or configuration error, 3 undefined parameter
or failed construction precondition, 4 a bound was violated.

Reports are JSON (``schema_version: 1``, rationals as ``{"num", "den",
"decimal"}``) or CSV with the fixed columns in :data:`CSV_COLUMNS`.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from . import bounds, constructions, families, solvers
from .graph import MAX_ORDER, Graph, VertexSet, min_degree
from .graph6 import Graph6Error, from_graph6, to_graph6

SCHEMA_VERSION = 1
CSV_COLUMNS = ["graph_id", "n", "m", "delta", "k", "gamma_k", "gamma_xk", "rho",
               "bound_name", "bound_num", "bound_den", "verdict"]
DEFAULT_SOLVE_ORDER = 20
DEFAULT_EXHAUSTIVE_ORDER = 6

EXIT_OK, EXIT_CONFIG, EXIT_UNDEFINED, EXIT_VIOLATION = 0, 2, 3, 4


class ConfigError(ValueError):
    pass


def order_limit(default: int) -> int:
    raw = os.environ.get("DOMINIUM_MAX_ORDER")
    if raw is None:
        return default
    try:
        return min(int(raw), MAX_ORDER)
    except ValueError:
        raise ConfigError(f"DOMINIUM_MAX_ORDER must be an integer, got {raw!r}") from None


def parse_k_range(text: str) -> list[int]:
    """``"3"`` or ``"2..4"`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        ks = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise ConfigError(f"bad k or k-range {text!r}") from None
    if not ks:
        raise ConfigError(f"empty k-range {text!r}")
    if ks[0] < 1:
        raise ConfigError("k must be positive")
    return ks


@dataclass
class RunConfig:
    command: str
    input: Path | None = None
    family: families.FamilySpec | None = None
    exhaustive: int | None = None
    gnp: tuple[int, float] | None = None
    ks: list[int] = field(default_factory=list)
    samples: int = 1
    seed: int = 0
    out: Path | None = None
    format: str = "json"
    params: list[str] = field(default_factory=list)
    method: str | None = None
    given_set: list[int] | None = None
    allow_large: bool = False

    def __post_init__(self) -> None:
        sources = [s for s in (self.input, self.family, self.exhaustive, self.gnp) if s is not None]
        if len(sources) != 1:
            raise ConfigError("give exactly one of --input, --family, --exhaustive, --gnp")
        if self.samples < 1:
            raise ConfigError("--samples must be at least 1")
        if self.exhaustive is not None:
            cap = families.MAX_ENUMERATION_ORDER if self.allow_large else DEFAULT_EXHAUSTIVE_ORDER
            if not 1 <= self.exhaustive <= cap:
                raise ConfigError(f"--exhaustive must be in 1..{cap}"
                                  + ("" if self.allow_large else " (use --allow-large for 7)"))

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        family = families.FamilySpec.parse(args.family) if getattr(args, "family", None) else None
        gnp = None
        if getattr(args, "gnp", None):
            try:
                n_text, p_text = args.gnp.split(",")
                gnp = (int(n_text), float(p_text))
            except ValueError:
                raise ConfigError(f"--gnp expects n,p, got {args.gnp!r}") from None
            if not 1 <= gnp[0] <= MAX_ORDER or not 0.0 <= gnp[1] <= 1.0:
                raise ConfigError(f"--gnp parameters out of range: {args.gnp}")
        given = None
        if getattr(args, "set", None) is not None:
            try:
                given = [int(t) for t in args.set.split(",") if t.strip()]
            except ValueError:
                raise ConfigError(f"--set expects comma-separated vertices, got {args.set!r}") from None
        k_text = getattr(args, "k", None)
        return cls(
            command=args.command,
            input=Path(args.input) if getattr(args, "input", None) else None,
            family=family,
            exhaustive=getattr(args, "exhaustive", None),
            gnp=gnp,
            ks=parse_k_range(k_text) if k_text else [],
            samples=getattr(args, "samples", 1),
            seed=getattr(args, "seed", 0),
            out=Path(args.out) if getattr(args, "out", None) else None,
            format=getattr(args, "format", "json"),
            params=getattr(args, "param", None) or [],
            method=getattr(args, "method", None),
            given_set=given,
            allow_large=getattr(args, "allow_large", False),
        )


def read_graph6_file(path: Path) -> Iterator[Graph]:
    """One graph6 string per line; ``#`` comments and blank lines are skipped."""
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                yield from_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}", exc.offset) from None


def iter_graphs(cfg: RunConfig, limit: int) -> Iterator[Graph]:
    if cfg.input is not None:
        source: Iterable[Graph] = read_graph6_file(cfg.input)
    elif cfg.family is not None:
        source = [cfg.family.build()]
    elif cfg.exhaustive is not None:
        source = families.enumerate_all(cfg.exhaustive)
    else:
        n, p = cfg.gnp
        source = (spec.build() for spec in families.gnp_corpus(cfg.samples, cfg.seed, (n, n), p))
    for g in source:
        if g.n > limit:
            raise ConfigError(f"graph of order {g.n} exceeds the order guard {limit} "
                              "(set DOMINIUM_MAX_ORDER to raise it)")
        yield g


# Serialization

def rational(q: Fraction | int | None) -> dict | None:
    if q is None:
        return None
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = 12
        dec = Decimal(q.numerator) / Decimal(q.denominator)
    text = format(dec.normalize(), "f")
    return {"num": q.numerator, "den": q.denominator, "decimal": text}


def solve_record(g: Graph, res: solvers.SolveResult) -> dict:
    return {
        "graph_id": to_graph6(g),
        "n": g.n,
        "parameter": res.parameter.value,
        "k": res.k,
        "value": res.value,
        "witness": res.witness.to_list(),
        "nodes_explored": res.nodes_explored,
        "method": res.method,
    }


def report_record(rep: bounds.BoundReport) -> dict:
    gxk = rep.exact["gamma_xk"]
    return {
        "graph_id": rep.graph_id,
        "n": rep.n,
        "m": rep.m,
        "delta": rep.delta,
        "k": rep.k,
        "exact": dict(rep.exact),
        "gamma_xk_defined": gxk is not None,
        "bounds": [
            {
                "name": e.name.value,
                "value": rational(e.value),
                "integer_form": e.integer_form,
                "verdict": e.verdict.value,
                "gap": rational(e.gap(gxk)) if gxk is not None else None,
            }
            for e in rep.bounds
        ],
        "verdict_summary": dict(rep.verdict_summary),
    }


def csv_rows(rep: bounds.BoundReport) -> Iterator[list]:
    ex = rep.exact
    for e in rep.bounds:
        yield [rep.graph_id, rep.n, rep.m, rep.delta, rep.k, ex["gamma_k"],
               "" if ex["gamma_xk"] is None else ex["gamma_xk"], ex["rho"], e.name.value,
               "" if e.value is None else e.value.numerator,
               "" if e.value is None else e.value.denominator, e.verdict.value]


def emit(cfg: RunConfig, payload: dict | None = None, rows: list[list] | None = None) -> None:
    if rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text, encoding="ascii")


# Commands

PARAM_NAMES = {"gamma-k": solvers.Parameter.GAMMA_K, "gamma-xk": solvers.Parameter.GAMMA_XK,
               "rho": solvers.Parameter.RHO}


def cmd_solve(cfg: RunConfig) -> int:
    names = cfg.params or ["all"]
    explicit = "all" not in names
    wanted = list(PARAM_NAMES.values()) if not explicit else [PARAM_NAMES[p] for p in names]
    needs_k = any(p is not solvers.Parameter.RHO for p in wanted)
    if needs_k and not cfg.ks:
        raise ConfigError("--k is required for gamma-k and gamma-xk")
    records = []
    for g in iter_graphs(cfg, order_limit(DEFAULT_SOLVE_ORDER)):
        for param in wanted:
            if param is solvers.Parameter.RHO:
                records.append(solve_record(g, solvers.rho(g)))
                continue
            for k in cfg.ks:
                if param is solvers.Parameter.GAMMA_XK and k > min_degree(g) + 1:
                    if explicit:
                        raise solvers.ParameterUndefined(
                            f"gamma_x{k} undefined for {to_graph6(g)}: min degree {min_degree(g)}")
                    records.append({"graph_id": to_graph6(g), "n": g.n, "parameter": param.value,
                                    "k": k, "value": None, "undefined": True})
                    continue
                records.append(solve_record(g, solvers.solve(g, param, k)))
    if cfg.format == "csv":
        header = ["graph_id", "n", "parameter", "k", "value", "witness", "nodes_explored", "method"]
        rows = [header] + [[r.get(c) if c != "witness" else " ".join(map(str, r.get(c) or []))
                            for c in header] for r in records]
        emit(cfg, rows=[["" if x is None else x for x in row] for row in rows])
    else:
        emit(cfg, {"schema_version": SCHEMA_VERSION, "command": "solve", "results": records})
    return EXIT_OK


def _reports(cfg: RunConfig) -> Iterator[bounds.BoundReport]:
    ks = [k for k in cfg.ks if k >= 2]
    if not ks:
        raise ConfigError("--k must include a value >= 2")
    for g in iter_graphs(cfg, order_limit(DEFAULT_SOLVE_ORDER)):
        for k in ks:
            yield bounds.verify_all(g, k)


def cmd_verify(cfg: RunConfig) -> int:
    reports = list(_reports(cfg))
    violations = sum(len(r.violations) for r in reports)
    if cfg.format == "csv":
        rows = [CSV_COLUMNS] + [row for r in reports for row in csv_rows(r)]
        emit(cfg, rows=rows)
    else:
        emit(cfg, {"schema_version": SCHEMA_VERSION, "command": "verify",
                   "reports": [report_record(r) for r in reports], "violations": violations})
    return EXIT_VIOLATION if violations else EXIT_OK


def _source_label(cfg: RunConfig) -> dict:
    if cfg.input is not None:
        return {"input": str(cfg.input)}
    if cfg.family is not None:
        return {"family": str(cfg.family)}
    if cfg.exhaustive is not None:
        return {"exhaustive": cfg.exhaustive}
    return {"gnp": {"n": cfg.gnp[0], "p": cfg.gnp[1]}, "samples": cfg.samples, "seed": cfg.seed}


def summarize(reports: Iterable[bounds.BoundReport]) -> dict:
    """Verdict counts, gap statistics and tight instances per bound name."""
    per = {name.value: {"verdicts": {v.value: 0 for v in bounds.Verdict}, "gaps": [],
                        "tight_instances": []} for name in bounds.BoundName}
    n_reports = undefined = violations = 0
    graphs: set[str] = set()
    for rep in reports:
        n_reports += 1
        graphs.add(rep.graph_id)
        gxk = rep.exact["gamma_xk"]
        if gxk is None:
            undefined += 1
        for e in rep.bounds:
            slot = per[e.name.value]
            slot["verdicts"][e.verdict.value] += 1
            if e.verdict is bounds.Verdict.VIOLATED:
                violations += 1
            if e.value is not None:
                slot["gaps"].append(e.gap(gxk))
            if e.verdict is bounds.Verdict.TIGHT:
                slot["tight_instances"].append({"graph_id": rep.graph_id, "k": rep.k})
    out = {}
    for name, slot in per.items():
        gaps = slot["gaps"]
        out[name] = {
            "verdicts": slot["verdicts"],
            "gap_min": rational(min(gaps)) if gaps else None,
            "gap_max": rational(max(gaps)) if gaps else None,
            "gap_mean": rational(sum(gaps, Fraction(0)) / len(gaps)) if gaps else None,
            "tight_instances": slot["tight_instances"],
        }
    return {"reports": n_reports, "distinct_graphs": len(graphs), "gamma_xk_undefined": undefined,
            "violations": violations, "bounds": out}


def cmd_sweep(cfg: RunConfig) -> int:
    if cfg.format == "csv":
        reports = list(_reports(cfg))
        rows = [CSV_COLUMNS] + [row for r in reports for row in csv_rows(r)]
        emit(cfg, rows=rows)
        violations = sum(len(r.violations) for r in reports)
    else:
        summary = summarize(_reports(cfg))
        violations = summary["violations"]
        emit(cfg, {"schema_version": SCHEMA_VERSION, "command": "sweep",
                   "source": _source_label(cfg), "k": cfg.ks, **summary})
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_generate(cfg: RunConfig) -> int:
    lines = [to_graph6(g) + "\n" for g in iter_graphs(cfg, order_limit(MAX_ORDER))]
    text = "".join(lines)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text, encoding="ascii")
    return EXIT_OK


def _construct_one(g: Graph, cfg: RunConfig, k: int) -> dict:
    gid = to_graph6(g)
    if cfg.given_set is not None:
        start, origin = VertexSet.of(g.n, cfg.given_set), "given"
    elif cfg.method == "thm22":
        start, origin = solvers.gamma_k(g, k).witness, "gamma_k_witness"
    else:
        start, origin = solvers.rho(g).witness, "rho_witness"
    record: dict = {"graph_id": gid, "n": g.n, "k": k, "input_set": start.to_list(),
                    "input_source": origin}
    if cfg.method == "thm22":
        trace = constructions.augment_to_ktuple(g, start, k)
        result = trace.d_double_prime
        lhs, rhs = trace.counting_sides(g)
        record.update({
            "u": trace.u.to_list(),
            "d_prime": trace.d_prime.to_list(),
            "d_zero": trace.d_zero.to_list(),
            "d_double_prime": result.to_list(),
            "fallback": trace.fallback,
            "bound": trace.bound,
            "counting_inequality": None if trace.fallback else {"lhs": lhs, "rhs": rhs,
                                                                 "holds": lhs >= rhs},
        })
        within = trace.fallback or len(result) <= trace.bound
    else:
        result = constructions.packing_complement(g, start, k)
        record.update({"complement": result.to_list(), "bound": g.n - len(start)})
        within = len(result) == g.n - len(start)
    record.update({"size": len(result),
                   "is_ktuple_dominating": solvers.is_ktuple_dominating(g, result, k),
                   "within_bound": within})
    return record


def cmd_construct(cfg: RunConfig) -> int:
    if cfg.method not in ("thm22", "thm23"):
        raise ConfigError("--method must be thm22 or thm23")
    if not cfg.ks:
        raise ConfigError("--k is required")
    records = [_construct_one(g, cfg, k)
               for g in iter_graphs(cfg, order_limit(DEFAULT_SOLVE_ORDER)) for k in cfg.ks]
    emit(cfg, {"schema_version": SCHEMA_VERSION, "command": "construct", "method": cfg.method,
               "results": records})
    ok = all(r["is_ktuple_dominating"] and r["within_bound"] for r in records)
    return EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "sweep": cmd_sweep,
            "generate": cmd_generate, "construct": cmd_construct}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dominium", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sources(p: argparse.ArgumentParser, k_required: bool = False) -> None:
        p.add_argument("--input", help="graph6 file, one graph per line")
        p.add_argument("--family", help="family spec, e.g. h:4,2 or join:complete:3,cycle:3")
        p.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs of order N")
        p.add_argument("--gnp", metavar="N,P", help="random graphs G(N,P); see --samples/--seed")
        p.add_argument("--samples", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--allow-large", action="store_true", help="permit --exhaustive 7")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--k", required=k_required, help="k or inclusive range a..b")

    p = sub.add_parser("solve", help="exact gamma_k, gamma_xk, rho")
    add_sources(p)
    p.add_argument("--param", action="append", choices=[*PARAM_NAMES, "all"])
    p.add_argument("--format", choices=["json", "csv"], default="json")
    for name in ("verify", "sweep"):
        p = sub.add_parser(name, help="bound report per graph" if name == "verify"
                           else "aggregate bound verdicts over a corpus")
        add_sources(p, k_required=True)
        p.add_argument("--format", choices=["json", "csv"], default="json")
    p = sub.add_parser("generate", help="write graph6 lines")
    add_sources(p)
    p = sub.add_parser("construct", help="run a constructive proof procedure")
    add_sources(p, k_required=True)
    p.add_argument("--method", choices=["thm22", "thm23"], required=True)
    p.add_argument("--set", help="starting vertex set, comma separated (default: solver witness)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (ConfigError, families.FamilySpecError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (solvers.ParameterUndefined, constructions.ConstructionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except ValueError as exc:
        # family parameters below a generator's minimum, e.g. cycle:2
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
