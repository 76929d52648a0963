"""Published closed formulas, kept as reference constants.

Only the P^2 conic formula is reproduced by computation here. The P^3 conic
and quadric formulas have no fixed-point data behind them in this package;
they are printed by ``--show-reference-formulas`` and nothing else.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .exact import UniPoly

# (d-1) d (d+1), then the irreducible tail, lowest degree first
_P2_CONIC_TAIL = (768, 2256, 2468, 1856, 795, 231, 25, 1)
_P3_CONIC_TAIL = (
    -332640, -118908, 248856, 316221, 38993, 182101, 164937, 225801,
    256737, 207891, 114847, 54395, 15447, 2763, 207,
)
_P3_QUADRIC_TAIL = (
    4334215495680, 8139069775872, 8264265366528, 4477695012864,
    -1115680433472, -3885321416832, -2874493287072, 413912636928,
    3232639214668, 4249158105672, 3628929239056, 2353394912904,
    1212870415960, 503603726976, 168507293704, 44737976160,
    9251138050, 1481854743, 185031133, 18084843, 1369333, 77949, 3151, 81, 1,
)

P2_CONIC_CONTENT = Fraction(1, 2**5 * factorial(5))
P3_CONIC_CONTENT = Fraction(4, factorial(8) * 3**2)
P3_QUADRIC_CONTENT = Fraction(1, factorial(9) * factorial(3) ** 9)

P2_CONIC_DEGREE = UniPoly.from_roots([1, 0, -1], P2_CONIC_CONTENT) * UniPoly(_P2_CONIC_TAIL)
P3_CONIC_DEGREE = UniPoly.from_roots([1, 0], P3_CONIC_CONTENT) * UniPoly(_P3_CONIC_TAIL)
P3_QUADRIC_DEGREE = UniPoly.from_roots([1, 0, -1], P3_QUADRIC_CONTENT) * UniPoly(_P3_QUADRIC_TAIL)


def p2_conic_degree(d: int) -> int:
    v = P2_CONIC_DEGREE(d)
    assert v.denominator == 1
    return v.numerator


def p2_line_degree(d: int) -> int:
    """Invariant lines in P^2: 3 C(d+3, 4)."""
    return 3 * comb(d + 3, 4)


REFERENCE_FORMULAS = [
    {
        "name": "P2 invariant smooth conic",
        "computed_here": True,
        "degree": f"1/3840 * (d - 1) * d * (d + 1) * ({UniPoly(_P2_CONIC_TAIL)})",
        "codimension": "2*(d - 1)",
    },
    {
        "name": "P2 invariant line",
        "computed_here": True,
        "degree": "3 * C(d + 3, 4)",
        "codimension": "d - 1",
    },
    {
        "name": "P3 invariant smooth conic",
        "computed_here": False,
        "degree": f"{P3_CONIC_CONTENT} * (d - 1) * d * ({UniPoly(_P3_CONIC_TAIL)})",
        "codimension": "4*(d - 1)",
    },
    {
        "name": "P3 invariant quadric surface",
        "computed_here": False,
        "degree": f"{P3_QUADRIC_CONTENT} * (d - 1) * d * (d + 1) * ({UniPoly(_P3_QUADRIC_TAIL)})",
        "codimension": "(d - 1)*(d + 5)",
    },
]
