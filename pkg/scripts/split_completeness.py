"""Compare canonical planes with cross-ratio normal forms on random split configurations."""
import argparse
import random
import time
from fractions import Fraction

from twisted_m0n.errors import Degenerate
from twisted_m0n.etale import EtaleAlgebra
from twisted_m0n.parametrize import Configuration, build_context, canonical
from twisted_m0n.projective import mobius, normal_form


def random_points(rng, n, height):
    return [(Fraction(rng.randint(-height, height)), Fraction(rng.randint(1, height)))
            for _ in range(n)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", default="5,7,9")
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--height", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for n in map(int, args.degrees.split(",")):
        e = EtaleAlgebra.split(n)
        ctx = build_context(e)
        tally = {"agree": 0, "mismatch": 0, "degenerate": 0}
        start = time.perf_counter()
        for _ in range(args.pairs):
            pts = random_points(rng, n, args.height)
            if rng.random() < 0.5:
                m = [[1, rng.randint(-3, 3)], [rng.randint(-3, 3), 2]]
                if m[0][0] * m[1][1] == m[0][1] * m[1][0]:
                    m = [[1, 0], [1, 1]]
                other = [mobius(m, p) for p in pts]
            else:
                other = random_points(rng, n, args.height)
            try:
                nf = [normal_form(q) for q in (pts, other)]
                cs = [canonical(ctx, Configuration.from_coords(e, [p[0] for p in q], [p[1] for p in q]))
                      for q in (pts, other)]
            except (ValueError, Degenerate):
                tally["degenerate"] += 1
                continue
            tally["agree" if (cs[0] == cs[1]) == (nf[0] == nf[1]) else "mismatch"] += 1
        print(f"n={n}: {tally} in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
