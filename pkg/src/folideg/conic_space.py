"""Torus fixed points of the space of complete conics B = Bl_V P^5 and the
weights of the bundle E(d) of vector fields leaving the conic invariant.

There are twelve fixed points:

* ``off``    -- the conic z_i z_j, away from the exceptional divisor (3 points);
* ``pair``   -- the double line z_i^2 with normal direction z_j z_k (3 points);
* ``double`` -- the double line z_i^2 with normal direction z_j^2 (6 points).

Throughout, k denotes the index not among those stored on the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .datum import LocalizationDatum
from .errors import DegenerateWeightsError
from .weights import WeightVector, monomial_weights, validate_conic_weights

ALL = (0, 1, 2)
KINDS = ("off", "pair", "double")


@dataclass(frozen=True)
class ConicFixedPoint:
    kind: str
    i: int
    j: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown fixed point kind {self.kind!r}")
        if self.i not in ALL:
            raise ValueError("index out of range")
        if self.kind == "pair":
            if self.j is not None:
                raise ValueError("pair points carry only i")
        elif self.j not in ALL or self.j == self.i:
            raise ValueError("j must be an index different from i")
        if self.kind == "off" and self.i > self.j:
            raise ValueError("off points are stored with i < j")

    @property
    def others(self) -> tuple[int, ...]:
        """The indices not equal to i, in increasing order."""
        return tuple(x for x in ALL if x != self.i)

    @property
    def k(self) -> int:
        """Third index: the one not in {i, j} (for pair points, the larger complement)."""
        if self.kind == "pair":
            return self.others[1]
        return 3 - self.i - self.j

    @property
    def label(self) -> str:
        if self.kind == "off":
            return f"z{self.i}z{self.j}"
        if self.kind == "pair":
            j, k = self.others
            return f"E[z{self.i}^2; z{j}z{k}]"
        return f"E[z{self.i}^2; z{self.j}^2]"


def enumerate_fixed_points() -> list[ConicFixedPoint]:
    pts = [ConicFixedPoint("off", i, j) for i in ALL for j in ALL if i < j]
    pts += [ConicFixedPoint("pair", i) for i in ALL]
    pts += [ConicFixedPoint("double", i, j) for i in ALL for j in ALL if i != j]
    return pts


def tangent_weights(p: ConicFixedPoint, w: WeightVector) -> tuple[int, ...]:
    """The five weights of T_p B."""
    if p.kind == "off":
        i, j = p.i, p.j
        base = w[i] + w[j]
        ws = monomial_weights(2, ALL, w)
        # the monomial z_i z_j itself is the point; drop one copy of its weight
        ws.remove(base)
        out = tuple(x - base for x in ws)
    elif p.kind == "pair":
        i = p.i
        j, k = p.others
        out = (w[j] - w[i], w[k] - w[i], w[j] - w[k], w[k] - w[j], w[j] + w[k] - 2 * w[i])
    else:
        i, j, k = p.i, p.j, p.k
        out = (w[j] - w[i], w[k] - w[i], w[k] - w[j], 2 * (w[k] - w[j]), 2 * (w[j] - w[i]))
    if 0 in out:
        raise DegenerateWeightsError(f"zero tangent weight at {p.label}", weights=w)
    return out


def _without_top_power(d: int, k: int, w: WeightVector) -> list[int]:
    # weights of F * d_k for F in M_d minus {z_k^d}
    ws = monomial_weights(d, ALL, w, -w[k])
    ws.remove(d * w[k] - w[k])
    return ws


def fiber_weights(p: ConicFixedPoint, d: int, w: WeightVector) -> tuple[int, ...]:
    """Weights of the fiber of E(d) at p; there are d(d+2) of them.

    The vector field z_i d_i - z_j d_j has weight 0 and d_k has weight -w_k.
    """
    if d < 2:
        raise ValueError("conic fiber weights need d >= 2")
    i = p.i
    if p.kind == "off":
        ws = monomial_weights(d - 1, ALL, w) + _without_top_power(d, p.k, w)
    elif p.kind == "pair":
        j, k = p.others
        ws = (
            monomial_weights(d - 1, ALL, w, w[i] - w[j])
            + monomial_weights(d - 1, ALL, w, w[i] - w[k])
            + monomial_weights(d - 1, (j, k), w)
        )
    else:
        ws = monomial_weights(d - 1, ALL, w, w[i] - w[p.j]) + _without_top_power(d, p.k, w)
    return tuple(ws)


def localization_data(d: int, w: WeightVector) -> list[LocalizationDatum]:
    if not validate_conic_weights(w):
        raise DegenerateWeightsError(f"conic weights {w} have coinciding pair sums", weights=w)
    return [
        LocalizationDatum(p.label, tangent_weights(p, w), fiber_weights(p, d, w))
        for p in enumerate_fixed_points()
    ]


def dump_fixed_points(d: int, w: WeightVector) -> list[dict]:
    """JSON-ready description of every fixed point (kind, tangent and fiber weights)."""
    out = []
    for p in enumerate_fixed_points():
        out.append(
            {
                "label": p.label,
                "kind": p.kind,
                "indices": [p.i] if p.j is None else [p.i, p.j],
                "tangent_weights": list(tangent_weights(p, w)),
                "fiber_weights": sorted(fiber_weights(p, d, w)),
            }
        )
    return out
