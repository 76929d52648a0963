"""Degrees of the loci of foliations with an invariant k-plane, for small n, k, d."""

import argparse

from folideg.grassmann import hyperplane_degree_closed, plane_codimension, plane_degree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--d-max", type=int, default=5)
    args = ap.parse_args()
    for n in range(2, args.n_max + 1):
        for k in range(n):
            for d in range(2, args.d_max + 1):
                deg = plane_degree(k, n, d)
                note = ""
                if k == n - 1:
                    note = "closed form ok" if deg == hyperplane_degree_closed(n, d) else "MISMATCH"
                print(f"n={n} k={k} d={d}  codim={plane_codimension(k, n, d):<4} degree={deg}  {note}")


if __name__ == "__main__":
    main()
