"""Equivariant Chern and Segre classes from fiber weights, power sums, Newton's identities.

Weights are plain ints (or Fractions); a weight multiset is any iterable.
Chern classes are the elementary symmetric functions of the weights,
accumulated as a truncated product so the cost is (number of weights) x order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import TruncatedSeries, series_invert, series_mul_linear


def chern_series(ws: Iterable, m: int) -> TruncatedSeries:
    """prod(1 + xi t) over the weights, truncated at t^m."""
    # plain ints for the hot loop; Fractions only if the input has them
    cs = [0] * (m + 1)
    cs[0] = 1
    for xi in ws:
        if xi == 0:
            continue
        for i in range(m, 0, -1):
            cs[i] += xi * cs[i - 1]
    return TruncatedSeries(m, tuple(cs))


def chern_from_weights(ws: Iterable, m: int) -> tuple[Fraction, ...]:
    """(c_1, ..., c_m) of the weight multiset; c_0 = 1 is implicit."""
    if m < 1:
        raise ValueError("order must be >= 1")
    return chern_series(ws, m).coeffs[1:]


def segre_top(ws: Iterable, m: int) -> Fraction:
    """Coefficient of t^m in 1 / prod(1 + xi t), i.e. s_m with s(t) c(t) = 1."""
    return series_invert(chern_series(ws, m))[m]


def elementary_top(ws: Iterable, g: int) -> Fraction:
    """e_g of the weights; zero when g exceeds the number of weights."""
    if g == 0:
        return Fraction(1)
    return chern_series(ws, g)[g]


def power_sums(ws: Iterable, kmax: int) -> list[Fraction]:
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    ws = list(ws)
    return [Fraction(sum(x**k for x in ws)) for k in range(1, kmax + 1)]


def elementary_from_power_sums(p: Sequence) -> list[Fraction]:
    """e_0..e_K from p_1..p_K via k e_k = sum_{i=1..k} (-1)^{i+1} e_{k-i} p_i."""
    e = [Fraction(1)]
    for k in range(1, len(p) + 1):
        acc = sum(((-1) ** (i + 1) * e[k - i] * p[i - 1] for i in range(1, k + 1)), Fraction(0))
        e.append(acc / k)
    return e
