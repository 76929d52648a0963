"""Table of degrees for foliations of P^2 with an invariant smooth conic."""

import argparse
import time

from folideg.bott import conic_degree
from folideg.reference import p2_conic_degree
from folideg.weights import WeightVector


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=17)
    ap.add_argument("--weights", default="0,1,3")
    args = ap.parse_args()
    w = WeightVector.parse(args.weights)
    print(f"{'d':>3} {'codim':>5} {'N':>5} {'degree':>16}  closed form")
    for d in range(2, args.d_max + 1):
        t0 = time.perf_counter()
        rep = conic_degree(d, w)
        dt = time.perf_counter() - t0
        ok = "ok" if rep.degree == p2_conic_degree(d) else "MISMATCH"
        print(f"{d:>3} {rep.codimension:>5} {rep.ambient_dimension:>5} {rep.degree:>16}  {ok}  ({dt * 1e3:.1f} ms)")


if __name__ == "__main__":
    main()
