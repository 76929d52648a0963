"""Interpolate degree polynomials in d for the conic family and every (k, n) with n <= N_MAX."""

import argparse

from folideg.interpolate import Family, SampleCache, default_d_range, extract_small_roots, sample_and_interpolate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--cache", default="samples.json")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cache = SampleCache.load(args.cache)
    families = [Family("conic")] + [Family("plane", k, n) for n in range(1, args.n_max + 1) for k in range(n)]
    for fam in families:
        lo, hi = default_d_range(fam)
        res = sample_and_interpolate(fam, lo, hi, cache=cache, workers=args.workers)
        status = "" if res.confirmed else "  [needs more samples]"
        print(f"{fam.tag:>12}: {extract_small_roots(res.poly, 10)}{status}")
    cache.save()


if __name__ == "__main__":
    main()
