"""Diagonal C* weights on the coordinates z_0..z_n and weights of monomial bases."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import WeightSearchExhausted

WEIGHT_BOUND = 2**20
RANDOM_RANGE = 64
MAX_TRIES = 10_000

DEFAULT_CONIC_WEIGHTS = (0, 1, 3)


@dataclass(frozen=True)
class WeightVector:
    """Weights w_0..w_n; the torus acts by t.z_i = t^{w_i} z_i."""

    w: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.w)
        if not w:
            raise ValueError("empty weight vector")
        if any(abs(x) > WEIGHT_BOUND for x in w):
            raise ValueError(f"weights must satisfy |w_i| <= {WEIGHT_BOUND}")
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return len(self.w) - 1

    def __getitem__(self, i: int) -> int:
        return self.w[i]

    def __len__(self) -> int:
        return len(self.w)

    def __iter__(self):
        return iter(self.w)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.w)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        parts = [p for p in text.replace(" ", "").split(",") if p]
        return cls(tuple(int(p) for p in parts))


def default_plane_weights(n: int) -> WeightVector:
    # 2^i - 1: all entries and all pairwise differences are distinct
    return WeightVector(tuple(2**i - 1 for i in range(n + 1)))


def validate_conic_weights(w: WeightVector) -> bool:
    """True iff the six sums w_i + w_j (i <= j) on P^2 are pairwise distinct."""
    if len(w) != 3:
        raise ValueError("conic weights need n = 2")
    sums = [w[i] + w[j] for i in range(3) for j in range(i, 3)]
    return len(set(sums)) == len(sums)


def validate_distinct_weights(w: WeightVector) -> bool:
    return len(set(w.w)) == len(w.w)


def exponent_vectors(e: int, r: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of length r and total degree e, lexicographically descending."""
    if r == 1:
        yield (e,)
        return
    for a in range(e, -1, -1):
        for rest in exponent_vectors(e - a, r - 1):
            yield (a,) + rest


def monomial_weights(e: int, J: Sequence[int], w: WeightVector, shift: int = 0) -> list[int]:
    """Weights (plus ``shift``) of the degree-e monomials in the variables indexed by J."""
    if e < 0:
        raise ValueError("degree must be non-negative")
    J = tuple(J)
    if not J:
        raise ValueError("J must be nonempty")
    wj = [w[j] for j in J]
    return [sum(a * x for a, x in zip(exps, wj)) + shift for exps in exponent_vectors(e, len(J))]


def random_valid_weights(
    n: int,
    validator: Callable[[WeightVector], bool],
    seed: int,
    *,
    span: int = RANDOM_RANGE,
    max_tries: int = MAX_TRIES,
) -> WeightVector:
    """Seeded rejection sampling of n+1 integers in [-span, span] accepted by ``validator``."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        cand = WeightVector(tuple(rng.randint(-span, span) for _ in range(n + 1)))
        if validator(cand):
            return cand
    raise WeightSearchExhausted(f"no valid weights found after {max_tries} tries (n={n}, seed={seed})")


def weight_vectors_for_tests(n: int, validator, count: int, seed: int = 0) -> list[WeightVector]:
    """``count`` distinct valid vectors; convenience for weight-independence checks."""
    out: list[WeightVector] = []
    for s in itertools.count(seed):
        cand = random_valid_weights(n, validator, s)
        if cand not in out:
            out.append(cand)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")
