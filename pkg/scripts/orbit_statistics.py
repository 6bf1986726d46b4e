"""How often random configurations fall outside the parametrized open set."""
import argparse
import random

from twisted_m0n.acceptance import acceptance_algebras
from twisted_m0n.errors import Degenerate
from twisted_m0n.parametrize import build_context, canonical
from twisted_m0n.sampling import random_configuration


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--draws", type=int, default=200)
    ap.add_argument("--height", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for name, e in acceptance_algebras().items():
        ctx = build_context(e)
        reasons = {}
        for _ in range(args.draws):
            try:
                canonical(ctx, random_configuration(rng, e, args.height))
                reasons["ok"] = reasons.get("ok", 0) + 1
            except Degenerate as exc:
                reasons[exc.code] = reasons.get(exc.code, 0) + 1
        print(f"{name}: {reasons}")


if __name__ == "__main__":
    main()
