"""Command line front end.

    folideg plane -n 3 -k 1 -d 2
    folideg conic -d 5 --json
    folideg formula --family conic --d-min 2 --d-max 17 --cache samples.json

Exit codes: 0 ok, 1 internal inconsistency, 2 usage, 3 degenerate weights,
4 interpolation needs more samples.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .bott import BottReport, conic_degree
from .conic_space import dump_fixed_points
from .errors import DegenerateWeightsError, LocalizationInconsistency, WeightSearchExhausted
from .exact import frac_to_str
from .grassmann import MAX_N, hyperplane_degree_closed, plane_report
from .interpolate import Family, SampleCache, default_d_range, extract_small_roots, sample_and_interpolate
from .reference import REFERENCE_FORMULAS, p2_conic_degree
from .weights import WeightVector, random_valid_weights, validate_distinct_weights

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_NEEDS_SAMPLES = 4

ROOT_BOUND = 10

log = logging.getLogger("folideg")


class UsageError(Exception):
    pass


def _weights(text):
    try:
        return WeightVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for weight re-randomization")
    common.add_argument("--weights", type=_weights, default=None, help="comma-separated torus weights")

    p = argparse.ArgumentParser(prog="folideg", description=__doc__.split("\n\n")[0])
    p.add_argument("--show-reference-formulas", action="store_true",
                   help="print the published closed formulas and exit")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command")

    sp = sub.add_parser("plane", parents=[common], help="foliations with an invariant k-plane")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)

    sc = sub.add_parser("conic", parents=[common], help="foliations of P^2 with an invariant smooth conic")
    sc.add_argument("-d", type=int, required=True)
    sc.add_argument("--dump-fixed-points", action="store_true")

    sf = sub.add_parser("formula", parents=[common], help="interpolate the degree as a polynomial in d")
    sf.add_argument("--family", choices=("conic", "plane"), required=True)
    sf.add_argument("-n", type=int)
    sf.add_argument("-k", type=int)
    sf.add_argument("--d-min", type=int)
    sf.add_argument("--d-max", type=int)
    sf.add_argument("--cache", default=None, metavar="PATH")
    sf.add_argument("--stats", action="store_true", help="report cache hits and Bott evaluations")
    sf.add_argument("--workers", type=int, default=1)
    return p


def _print_report(lines: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in lines)
    for k, v in lines:
        print(f"{k:<{width}}  {v}")


def cmd_plane(args) -> int:
    n, k, d = args.n, args.k, args.d
    if not (0 <= k < n <= MAX_N):
        raise UsageError(f"need 0 <= k < n <= {MAX_N}")
    if d < 1:
        raise UsageError("need d >= 1")
    if args.weights is not None and len(args.weights) != n + 1:
        raise UsageError(f"need {n + 1} weights")
    rep = plane_report(k, n, d, args.weights, seed=args.seed)
    # self-check on an independent weight vector
    other = random_valid_weights(n, validate_distinct_weights, args.seed + 1)
    check = plane_report(k, n, d, other, seed=args.seed + 2)
    independent = check.degree == rep.degree
    closed = hyperplane_degree_closed(n, d) if k == n - 1 else None
    match = None if closed is None else closed == rep.degree

    if args.json:
        out = rep.to_json()
        out["weight_check"] = {"weights": list(check.weights_used.w), "degree": str(check.degree),
                               "match": independent}
        out["closed_form"] = None if closed is None else {"degree": str(closed), "match": match}
        out["injective_regime"] = d >= 2
        print(json.dumps(out, indent=2))
    else:
        lines = [
            ("family", f"invariant {k}-plane in P^{n}"),
            ("d", d),
            ("degree", rep.degree),
            ("codimension", rep.codimension),
            ("ambient N", rep.ambient_dimension),
            ("weights", rep.weights_used),
            ("weight check", f"{check.degree} at ({check.weights_used}): {'match' if independent else 'MISMATCH'}"),
        ]
        if closed is not None:
            lines.append(("closed form", f"{closed}: {'match' if match else 'MISMATCH'}"))
        if d < 2:
            lines.append(("note", "d = 1 is outside the generically injective regime"))
        _print_report(lines)
    return EXIT_OK if independent and match is not False else EXIT_INCONSISTENT


def cmd_conic(args) -> int:
    d = args.d
    if d < 2:
        raise UsageError("need d >= 2")
    if args.weights is not None and len(args.weights) != 3:
        raise UsageError("conic weights need 3 entries")
    rep: BottReport = conic_degree(d, args.weights, seed=args.seed)
    expected = p2_conic_degree(d)
    match = expected == rep.degree
    if args.json:
        out = rep.to_json()
        out["closed_form"] = {"degree": str(expected), "match": match}
        if args.dump_fixed_points:
            out["fixed_points"] = dump_fixed_points(d, rep.weights_used)
        print(json.dumps(out, indent=2))
    else:
        _print_report([
            ("family", "invariant smooth conic in P^2"),
            ("d", d),
            ("degree", rep.degree),
            ("codimension", rep.codimension),
            ("ambient N", rep.ambient_dimension),
            ("weights", rep.weights_used),
            ("closed form", f"{expected}: {'match' if match else 'MISMATCH'}"),
        ])
        if args.dump_fixed_points:
            print(json.dumps(dump_fixed_points(d, rep.weights_used), indent=1))
    return EXIT_OK if match else EXIT_INCONSISTENT


def cmd_formula(args) -> int:
    if args.family == "plane":
        if args.n is None or args.k is None:
            raise UsageError("plane family needs -n and -k")
        if not (0 <= args.k < args.n <= MAX_N):
            raise UsageError(f"need 0 <= k < n <= {MAX_N}")
        family = Family("plane", args.k, args.n)
    else:
        family = Family("conic")
    lo, hi = default_d_range(family)
    d_min = lo if args.d_min is None else args.d_min
    d_max = hi if args.d_max is None else args.d_max
    if d_min < (2 if family.name == "conic" else 1) or d_max - d_min + 1 < 2:
        raise UsageError(f"bad degree range {d_min}..{d_max}")
    if args.weights is not None and len(args.weights) != family.n + 1:
        raise UsageError(f"need {family.n + 1} weights")

    cache = SampleCache.load(args.cache)
    res = sample_and_interpolate(family, d_min, d_max, args.weights, cache=cache,
                                 workers=max(1, args.workers), seed=args.seed)
    cache.save()
    fac = extract_small_roots(res.poly, ROOT_BOUND) if not res.poly.is_zero() else None
    status = "confirmed" if res.confirmed else "needs more samples"

    if args.json:
        out = {
            "family": family.tag,
            "d_range": [d_min, d_max],
            "status": status,
            "samples": [[d, str(v)] for d, v in res.samples],
            "nodes_used": res.nodes_used,
            "coefficients": res.poly.to_json(),
            "expanded": res.poly.format(),
            "factored": None if fac is None else fac.format(),
            "content": None if fac is None else frac_to_str(fac.content),
            "roots": [] if fac is None else [[r, m] for r, m in fac.roots],
        }
        if args.stats:
            out["stats"] = {"computed": cache.computed, "cache_hits": cache.hits}
        print(json.dumps(out, indent=2))
    else:
        lines = [
            ("family", family.tag),
            ("degrees", f"{d_min}..{d_max}"),
            ("status", status),
            ("expanded", res.poly.format()),
            ("factored", "0" if fac is None else fac.format()),
        ]
        if args.stats:
            lines.append(("stats", f"computed {cache.computed}, cache hits {cache.hits}"))
        _print_report(lines)
    return EXIT_OK if res.confirmed else EXIT_NEEDS_SAMPLES


def show_reference() -> int:
    for ref in REFERENCE_FORMULAS:
        tag = "" if ref["computed_here"] else "  [reference only, not computed]"
        print(f"{ref['name']}{tag}")
        print(f"  degree:       {ref['degree']}")
        print(f"  codimension:  {ref['codimension']}")
    return EXIT_OK


COMMANDS = {"plane": cmd_plane, "conic": cmd_conic, "formula": cmd_formula}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.show_reference_formulas:
        return show_reference()
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with 2
    except (DegenerateWeightsError, WeightSearchExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except LocalizationInconsistency as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
