"""Verdict counts per bound for every labeled graph of each order."""

import argparse
import json
from collections import Counter

from dominium import families
from dominium.bounds import verify_all
from dominium.graph import min_degree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=5, help="up to 7; order 6 takes minutes")
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()

    table = {}
    for n in range(1, args.max_order + 1):
        counts: dict[str, Counter] = {}
        for g in families.enumerate_all(n):
            top = min(args.max_k, min_degree(g) + 1)
            for k in range(2, top + 1):
                for e in verify_all(g, k).bounds:
                    counts.setdefault(e.name.value, Counter())[e.verdict.value] += 1
        table[n] = {name: dict(sorted(c.items())) for name, c in counts.items()}
        print(f"order {n}: {sum(sum(c.values()) for c in counts.values())} verdicts", flush=True)
    print(json.dumps(table, indent=2))
    violated = sum(c.get("violated", 0) for per in table.values() for c in per.values())
    raise SystemExit(4 if violated else 0)


if __name__ == "__main__":
    main()
