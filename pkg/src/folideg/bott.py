"""Bott's localization formula as an exact summation engine.

The engine only sees (tangent weights, fiber weights) pairs per fixed point,
so the conic space and the Grassmannians share one summation path.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Callable, Sequence

from . import conic_space
from .datum import LocalizationDatum
from .errors import DegenerateWeightsError, LocalizationInconsistency
from .exact import frac_to_str
from .symfun import elementary_top, segre_top
from .weights import (
    DEFAULT_CONIC_WEIGHTS,
    WeightVector,
    random_valid_weights,
    validate_conic_weights,
)

log = logging.getLogger(__name__)

CONIC_ORDER = 5  # dim B


@dataclass
class BottReport:
    degree: int
    contributions: list[tuple[str, Fraction]]
    weights_used: WeightVector | None = None
    parameters: dict = field(default_factory=dict)
    codimension: int | None = None
    ambient_dimension: int | None = None

    def to_json(self) -> dict:
        return {
            "degree": str(self.degree),
            "codimension": None if self.codimension is None else str(self.codimension),
            "ambient_dimension": None if self.ambient_dimension is None else str(self.ambient_dimension),
            "weights": None if self.weights_used is None else list(self.weights_used.w),
            "parameters": dict(self.parameters),
            "contributions": [{"label": lab, "contribution": frac_to_str(c)} for lab, c in self.contributions],
        }


def ambient_dimension(n: int, d: int) -> int:
    """N with P^N the space of degree-d one-dimensional foliations on P^n."""
    return (n + 1) * comb(d + n, n) - comb(d + n - 1, n) - 1


def conic_codimension(d: int) -> int:
    return 2 * (d - 1)


def _bott_sum(data: Sequence[LocalizationDatum], m: int, numerator: Callable) -> tuple[Fraction, list]:
    contributions = []
    total = Fraction(0)
    for datum in data:
        if len(datum.tangent_weights) != m:
            raise ValueError(f"{datum.label}: expected {m} tangent weights, got {len(datum.tangent_weights)}")
        den = prod(datum.tangent_weights)
        if den == 0:
            raise DegenerateWeightsError(f"zero tangent weight at {datum.label}")
        c = Fraction(numerator(datum.fiber_weights, m)) / den
        contributions.append((datum.label, c))
        total += c
    return total, contributions


def _to_report(total: Fraction, contributions, **kw) -> BottReport:
    if total.denominator != 1:
        raise LocalizationInconsistency(total, contributions)
    return BottReport(total.numerator, contributions, **kw)


def bott_sum_segre(data: Sequence[LocalizationDatum], m: int, **kw) -> BottReport:
    """sum_p s_m(E_p) / prod(tangent weights at p), asserted integral."""
    total, contributions = _bott_sum(data, m, segre_top)
    return _to_report(total, contributions, **kw)


def bott_sum_chern_top(data: Sequence[LocalizationDatum], g: int, **kw) -> BottReport:
    """sum_p e_g(E_p) / prod(tangent weights at p), asserted integral."""
    total, contributions = _bott_sum(data, g, elementary_top)
    return _to_report(total, contributions, **kw)


def with_retry(compute: Callable[[WeightVector], BottReport], w: WeightVector, validator, seed: int) -> BottReport:
    """Run ``compute(w)``; on degenerate weights retry once with seeded random weights."""
    try:
        return compute(w)
    except DegenerateWeightsError as exc:
        fallback = random_valid_weights(w.n, validator, seed)
        log.warning("weights %s degenerate (%s); retrying with %s", w, exc, fallback)
        try:
            return compute(fallback)
        except DegenerateWeightsError as exc2:
            raise DegenerateWeightsError(
                f"degenerate weights twice: {w} then {fallback}: {exc2}", weights=fallback
            ) from exc2


def conic_degree(d: int, w: WeightVector | None = None, *, seed: int = 0) -> BottReport:
    """Degree of the closure of foliations of degree d on P^2 with an invariant smooth conic."""
    if d < 2:
        raise ValueError("d must be >= 2")
    w = WeightVector(DEFAULT_CONIC_WEIGHTS) if w is None else w

    def compute(wv: WeightVector) -> BottReport:
        return bott_sum_segre(
            conic_space.localization_data(d, wv),
            CONIC_ORDER,
            weights_used=wv,
            parameters={"family": "conic", "d": d, "k": None, "n": 2},
            codimension=conic_codimension(d),
            ambient_dimension=ambient_dimension(2, d),
        )

    return with_retry(compute, w, validate_conic_weights, seed)
