"""Foliations of P^n with an invariant k-plane, by localization on G(k, n).

The degree is the top Chern class c_g(Q (x) Sym^d T^v) on G(k, n), g = dim G.
At the coordinate plane spanned by e_s (s in S) the torus weights are

    tangent  Hom(T, Q):          w_q - w_s          (s in S, q not in S)
    fiber    Q (x) Sym^d T^v:    w_q - wt(mu)       (q not in S, mu in M_d(S))
"""

from __future__ import annotations

import itertools
import logging
from math import comb

from .bott import BottReport, ambient_dimension, bott_sum_chern_top, with_retry
from .datum import LocalizationDatum
from .errors import DegenerateWeightsError
from .weights import WeightVector, default_plane_weights, monomial_weights, validate_distinct_weights

log = logging.getLogger(__name__)

MAX_N = 8


def _check_range(k: int, n: int) -> None:
    if not (0 <= k < n <= MAX_N):
        raise ValueError(f"need 0 <= k < n <= {MAX_N}, got k={k}, n={n}")


def grassmann_dimension(k: int, n: int) -> int:
    return (k + 1) * (n - k)


def enumerate_planes(k: int, n: int) -> list[tuple[int, ...]]:
    """The C(n+1, k+1) coordinate k-planes, as index subsets in lexicographic order."""
    _check_range(k, n)
    return list(itertools.combinations(range(n + 1), k + 1))


def plane_label(S) -> str:
    return "<" + ",".join(f"e{s}" for s in S) + ">"


def plane_localization_datum(S, d: int, w: WeightVector) -> LocalizationDatum:
    S = tuple(S)
    rest = [q for q in range(len(w)) if q not in S]
    tangent = tuple(w[q] - w[s] for s in S for q in rest)
    if 0 in tangent:
        raise DegenerateWeightsError(f"zero tangent weight at {plane_label(S)}", weights=w)
    mons = monomial_weights(d, S, w)
    fiber = tuple(w[q] - m for q in rest for m in mons)
    return LocalizationDatum(plane_label(S), tangent, fiber)


def plane_codimension(k: int, n: int, d: int) -> int:
    return (n - k) * (comb(k + d, d) - (k + 1))


def hyperplane_degree_closed(n: int, d: int) -> int:
    """Degree of the locus of foliations with an invariant hyperplane: C(C(d+n, n), n)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return comb(comb(d + n, n), n)


def plane_report(k: int, n: int, d: int, w: WeightVector | None = None, *, seed: int = 0) -> BottReport:
    _check_range(k, n)
    if d < 1:
        raise ValueError("d must be >= 1")
    w = default_plane_weights(n) if w is None else w
    if len(w) != n + 1:
        raise ValueError(f"need {n + 1} weights, got {len(w)}")
    if d == 1:
        log.info("d = 1 lies outside the generically injective regime (d >= 2)")
    g = grassmann_dimension(k, n)

    def compute(wv: WeightVector) -> BottReport:
        if not validate_distinct_weights(wv):
            raise DegenerateWeightsError(f"weights {wv} are not pairwise distinct", weights=wv)
        data = [plane_localization_datum(S, d, wv) for S in enumerate_planes(k, n)]
        return bott_sum_chern_top(
            data,
            g,
            weights_used=wv,
            parameters={"family": "plane", "d": d, "k": k, "n": n},
            codimension=plane_codimension(k, n, d),
            ambient_dimension=ambient_dimension(n, d),
        )

    return with_retry(compute, w, validate_distinct_weights, seed)


def plane_degree(k: int, n: int, d: int, w: WeightVector | None = None, *, seed: int = 0) -> int:
    """Degree of the closure of foliations of degree d on P^n with an invariant k-plane."""
    return plane_report(k, n, d, w, seed=seed).degree
