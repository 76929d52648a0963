"""Recover a degree formula in d from exact samples.

Interpolation grows the node set one sample at a time and stops at the first
interpolant that reproduces *every* sample. If only the interpolant through
all samples fits, the answer is unconfirmed and flagged as needing more
samples; callers widen the range and retry.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Sequence

from .bott import conic_degree
from .exact import UniPoly, poly_eval
from .grassmann import plane_report
from .weights import DEFAULT_CONIC_WEIGHTS, WeightVector, default_plane_weights

log = logging.getLogger(__name__)

# Bott sum for conics is a polynomial in d of degree <= 15, so 16 samples pin it down.
CONIC_DEGREE_BOUND = 15
CONIC_D_RANGE = (2, 17)


@dataclass(frozen=True)
class Interpolation:
    poly: UniPoly
    confirmed: bool
    nodes_used: int
    samples: tuple[tuple[int, int], ...] = ()

    @property
    def needs_more_samples(self) -> bool:
        return not self.confirmed


def _lagrange_through(points: Sequence[tuple[int, Fraction]]) -> UniPoly:
    xs = [x for x, _ in points]
    out = UniPoly()
    for i, (xi, yi) in enumerate(points):
        basis = UniPoly.from_roots([x for j, x in enumerate(xs) if j != i])
        out = out + basis.scale(Fraction(yi) / poly_eval(basis, xi))
    return out


def lagrange(samples: Sequence[tuple[int, int]]) -> Interpolation:
    """Smallest-prefix Lagrange interpolant that fits all samples."""
    samples = [(int(x), Fraction(y)) for x, y in samples]
    if len(samples) < 2:
        raise ValueError("need at least 2 samples")
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate sample abscissae")
    s = len(samples)
    g = UniPoly()
    j = s
    for j in range(2, s + 1):
        g = _lagrange_through(samples[:j])
        if all(poly_eval(g, x) == y for x, y in samples):
            break
    frozen = tuple((x, int(y) if y.denominator == 1 else y) for x, y in samples)
    return Interpolation(g, confirmed=g.degree < s - 1, nodes_used=j, samples=frozen)


@dataclass(frozen=True)
class Factored:
    """p = content * prod (d - r)^mult * cofactor."""

    content: Fraction
    roots: tuple[tuple[int, int], ...]
    cofactor: UniPoly

    def expand(self) -> UniPoly:
        p = UniPoly((self.content,))
        for r, mult in self.roots:
            p = p * UniPoly.from_roots([r] * mult)
        return p * self.cofactor

    def format(self, var: str = "d") -> str:
        parts = []
        if self.content != 1:
            parts.append(str(self.content))
        for r, mult in self.roots:
            if r == 0:
                f = var
            else:
                f = f"({var} {'-' if r > 0 else '+'} {abs(r)})"
            parts.append(f if mult == 1 else f"{f}^{mult}")
        if self.cofactor.degree > 0:
            parts.append(f"({self.cofactor.format(var)})")
        elif not parts or self.cofactor.coeffs != (1,):
            parts.append(self.cofactor.format(var))
        return " * ".join(parts)

    def __str__(self) -> str:
        return self.format()


def extract_small_roots(p: UniPoly, bound: int) -> Factored:
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    roots = []
    # descending, so the display reads (d - 1) * d * (d + 1)
    for r in range(bound, -bound - 1, -1):
        mult = 0
        while p.degree > 0:
            q, rem = p.divide_linear(r)
            if rem != 0:
                break
            p, mult = q, mult + 1
        if mult:
            roots.append((r, mult))
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    cofactor = UniPoly(tuple(Fraction(c // g) for c in ints))
    return Factored(Fraction(g, den), tuple(roots), cofactor)


@dataclass(frozen=True)
class Family:
    """Which degree to sample: ``conic`` (n = 2) or ``plane`` (invariant k-planes in P^n)."""

    name: str
    k: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.name == "conic":
            object.__setattr__(self, "n", 2)
        elif self.name == "plane":
            if self.k is None or self.n is None:
                raise ValueError("plane family needs k and n")
        else:
            raise ValueError(f"unknown family {self.name!r}")

    @property
    def tag(self) -> str:
        return "conic" if self.name == "conic" else f"plane-k{self.k}-n{self.n}"

    def default_weights(self) -> WeightVector:
        if self.name == "conic":
            return WeightVector(DEFAULT_CONIC_WEIGHTS)
        return default_plane_weights(self.n)

    def evaluate(self, d: int, w: WeightVector, seed: int = 0) -> int:
        if self.name == "conic":
            return conic_degree(d, w, seed=seed).degree
        return plane_report(self.k, self.n, d, w, seed=seed).degree


def _evaluate(args):
    family, d, w, seed = args
    return family.evaluate(d, w, seed)


@dataclass
class SampleCache:
    """JSON file mapping ``family/d/w0,w1,...`` to a decimal-string degree."""

    path: Path | None = None
    entries: dict[str, str] = field(default_factory=dict)
    hits: int = 0
    computed: int = 0

    @staticmethod
    def key(family: Family, d: int, w: WeightVector) -> str:
        return f"{family.tag}/{d}/{w}"

    @classmethod
    def load(cls, path) -> "SampleCache":
        cache = cls(Path(path) if path is not None else None)
        if cache.path is None or not cache.path.exists():
            return cache
        try:
            data = json.loads(cache.path.read_text())
            if not isinstance(data, dict) or not all(isinstance(v, str) for v in data.values()):
                raise ValueError("cache must be an object of strings")
            for v in data.values():
                int(v)
            cache.entries = dict(data)
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache %s: %s", cache.path, exc)
        return cache

    def save(self) -> bool:
        if self.path is None:
            return True
        try:
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            tmp.write_text(json.dumps(self.entries, indent=1, sort_keys=True))
            os.replace(tmp, self.path)
            return True
        except OSError as exc:
            log.warning("could not write cache %s: %s", self.path, exc)
            return False


def sample_degrees(
    family: Family,
    d_values: Sequence[int],
    w: WeightVector | None = None,
    *,
    cache: SampleCache | None = None,
    workers: int = 1,
    seed: int = 0,
) -> list[tuple[int, int]]:
    w = family.default_weights() if w is None else w
    cache = SampleCache() if cache is None else cache
    found: dict[int, int] = {}
    todo = []
    for d in d_values:
        hit = cache.entries.get(cache.key(family, d, w))
        if hit is not None:
            found[d] = int(hit)
            cache.hits += 1
        else:
            todo.append(d)
    jobs = [(family, d, w, seed) for d in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_evaluate, jobs))
    else:
        values = [_evaluate(j) for j in jobs]
    for d, v in zip(todo, values):
        found[d] = v
        cache.entries[cache.key(family, d, w)] = str(v)
        cache.computed += 1
    return [(d, found[d]) for d in d_values]


def sample_and_interpolate(
    family: Family,
    d_min: int,
    d_max: int,
    w: WeightVector | None = None,
    *,
    cache: SampleCache | None = None,
    workers: int = 1,
    seed: int = 0,
) -> Interpolation:
    if d_max - d_min + 1 < 2:
        raise ValueError("need at least two degrees to interpolate")
    samples = sample_degrees(family, range(d_min, d_max + 1), w, cache=cache, workers=workers, seed=seed)
    return lagrange(samples)


def default_d_range(family: Family) -> tuple[int, int]:
    """Enough degrees to determine the answer and confirm it with one spare sample."""
    if family.name == "conic":
        return CONIC_D_RANGE
    g = (family.k + 1) * (family.n - family.k)
    # each c_i of the fiber grows like d^{i(k+1)} at most
    return 2, 2 + g * (family.k + 1) + 1
