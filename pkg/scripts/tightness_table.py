"""Print exact values and bound verdicts for the extremal families."""

import argparse

from dominium import families
from dominium.bounds import verify_all
from dominium.graph6 import to_graph6


def instances(max_order: int):
    for k in range(2, 7):
        for kp in range(k, 9):
            if k + kp <= max_order:
                yield f"bipartite:{k},{kp}", families.complete_bipartite(k, kp), k
    for k in range(2, 7):
        for r in range(1, 4):
            if r * (k + 1) <= max_order:
                yield f"h:{k},{r}", families.h_family(k, r), k
    for k in (3, 4, 5):
        yield f"join:complete:{k},cycle:{k}", families.join(families.complete(k), families.cycle(k)), k
    for n in range(3, min(max_order, 12) + 1):
        for k in range(2, n):
            yield f"complete:{n}", families.complete(n), k


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=20)
    ap.add_argument("--graph6", action="store_true", help="show graph6 instead of family name")
    args = ap.parse_args()

    header = None
    for label, g, k in instances(args.max_order):
        rep = verify_all(g, k)
        if header is None:
            header = ["graph", "n", "k", "gk", "gxk", "rho"] + [e.name.value for e in rep.bounds]
            print("\t".join(header))
        name = to_graph6(g) if args.graph6 else label
        row = [name, g.n, k, rep.exact["gamma_k"], rep.exact["gamma_xk"], rep.exact["rho"]]
        row += [e.verdict.value for e in rep.bounds]
        print("\t".join(map(str, row)))


if __name__ == "__main__":
    main()
