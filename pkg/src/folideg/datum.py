from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LocalizationDatum:
    """What Bott's formula needs from one isolated fixed point.

    ``tangent_weights`` are the weights of the tangent space of the ambient
    variety at the point, ``fiber_weights`` those of the bundle's fiber.
    """

    label: str
    tangent_weights: tuple[int, ...]
    fiber_weights: tuple[int, ...]
