"""Exact arithmetic substrate: rationals, univariate polynomials in d, truncated series.

Rationals are :class:`fractions.Fraction`, which already keeps every value
reduced with a positive denominator. The helpers below add the error
behaviour the localization code relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotIntegralError, ZeroDenominatorError

__all__ = [
    "Fraction",
    "frac_add",
    "frac_sub",
    "frac_mul",
    "frac_div",
    "frac_inv",
    "frac_to_integer",
    "frac_to_str",
    "frac_from_str",
    "UniPoly",
    "poly_eval",
    "TruncatedSeries",
    "series_mul_linear",
    "series_invert",
]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def frac_add(a, b) -> Fraction:
    return _q(a) + _q(b)


def frac_sub(a, b) -> Fraction:
    return _q(a) - _q(b)


def frac_mul(a, b) -> Fraction:
    return _q(a) * _q(b)


def frac_div(a, b) -> Fraction:
    b = _q(b)
    if b == 0:
        raise ZeroDenominatorError()
    return _q(a) / b


def frac_inv(a) -> Fraction:
    return frac_div(1, a)


def frac_to_integer(a) -> int:
    """Return ``a`` as an int, raising :class:`NotIntegralError` if it has a denominator."""
    a = _q(a)
    if a.denominator != 1:
        raise NotIntegralError(a)
    return a.numerator


def frac_to_str(a) -> str:
    a = _q(a)
    return f"{a.numerator}/{a.denominator}"


def frac_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one variable with rational coefficients, constant term first.

    Trailing zeros are stripped on construction, so ``UniPoly(())`` is the zero
    polynomial and ``degree`` is ``-1`` for it.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [_q(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots: Iterable[int], lead=1) -> "UniPoly":
        p = cls((lead,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    def scale(self, c) -> "UniPoly":
        c = _q(c)
        return UniPoly(tuple(c * a for a in self.coeffs))

    def divide_linear(self, r) -> tuple["UniPoly", Fraction]:
        """Synthetic division by ``(x - r)``; returns ``(quotient, remainder)``."""
        r = _q(r)
        if not self.coeffs:
            return UniPoly(), Fraction(0)
        acc = Fraction(0)
        quot = []
        for c in reversed(self.coeffs):
            acc = acc * r + c
            quot.append(acc)
        rem = quot.pop()
        return UniPoly(tuple(reversed(quot))), rem

    def to_json(self) -> list[str]:
        return [frac_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UniPoly":
        return cls(tuple(frac_from_str(s) for s in data))

    def format(self, var: str = "d") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()


def poly_eval(p: UniPoly, x) -> Fraction:
    x = _q(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t known up to and including t^order."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        cs = [_q(c) for c in self.coeffs[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        out = [Fraction(0)] * (m + 1)
        for i in range(m + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(m + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(m, tuple(out))


def series_mul_linear(s: TruncatedSeries, w) -> TruncatedSeries:
    """Return ``s * (1 + w t)`` truncated at ``s.order``."""
    w = _q(w)
    cs = list(s.coeffs)
    for i in range(s.order, 0, -1):
        cs[i] += w * cs[i - 1]
    return TruncatedSeries(s.order, tuple(cs))


def series_invert(c: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term 1 (Chern -> Segre)."""
    if c.coeffs[0] != 1:
        raise ValueError("series_invert needs constant term 1")
    s = [Fraction(1)]
    for i in range(1, c.order + 1):
        s.append(-sum((c.coeffs[j] * s[i - j] for j in range(1, i + 1)), Fraction(0)))
    return TruncatedSeries(c.order, tuple(s))
