"""Tabulate non-retract-rationality certificates for small quaternion symbols."""
import argparse

from twisted_m0n.brauer import QuaternionAlgebra, non_retract_witness, verify_certificate
from twisted_m0n.errors import M0nError


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--bound", type=int, default=7)
    args = ap.parse_args()
    print(f"{'a':>4} {'b':>4}  result")
    for a in range(-args.bound, args.bound + 1):
        for b in range(a, args.bound + 1):
            if a == 0 or b == 0:
                continue
            try:
                cert = non_retract_witness(args.n, QuaternionAlgebra(a, b)).to_json()
            except M0nError as exc:
                print(f"{a:>4} {b:>4}  {exc.code}")
                continue
            ram = [p for p, s in cert["local_symbols"].items() if s == -1]
            ok = verify_certificate(cert)
            print(f"{a:>4} {b:>4}  certificate ramified={','.join(ram)} verified={ok}")


if __name__ == "__main__":
    main()
