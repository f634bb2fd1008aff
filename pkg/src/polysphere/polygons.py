"""Exact metrics and planar vertex coordinates for regular polygons.

All lengths are centimeters, areas cm^2. Angles are handled in radians
internally; the pentagon's familiar "tan 54 degrees" factor is 3*pi/10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["PolygonSpec", "regular_polygon_area", "polygon_vertices"]


@dataclass(frozen=True)
class PolygonSpec:
    """A regular polygon: ``sides_n`` sides of common length ``side``.

    ``side`` may be 0 (degenerate polygon, every metric is 0); negative
    side lengths and fewer than 3 sides are rejected.
    """

    sides_n: int
    side: float

    def __post_init__(self) -> None:
        if self.sides_n < 3:
            raise DomainError(f"a polygon needs at least 3 sides, got {self.sides_n}")
        if self.side < 0:
            raise DomainError(f"side length must be >= 0, got {self.side}")

    @property
    def perimeter(self) -> float:
        return self.sides_n * self.side

    @property
    def circumradius(self) -> float:
        """Radius of the circle through all vertices: side / (2 sin(pi/n))."""
        return self.side / (2.0 * math.sin(math.pi / self.sides_n))


def regular_polygon_area(spec: PolygonSpec) -> float:
    """Area of a regular n-gon: (n/4) * side^2 * cot(pi/n).

    Specializes to (3*sqrt(3)/2) * side^2 for the hexagon and to
    (5/4) * side^2 * tan(3*pi/10) for the pentagon.
    """
    n = spec.sides_n
    return (n / 4.0) * spec.side * spec.side / math.tan(math.pi / n)


def polygon_vertices(spec: PolygonSpec) -> list[tuple[float, float]]:
    """Counterclockwise vertices of the polygon, centered on the origin.

    Canonical orientation: one edge horizontal at the bottom, first vertex
    at the bottom-left. Consecutive vertices are exactly ``side`` apart,
    all on the circle of radius ``spec.circumradius``.
    """
    n = spec.sides_n
    r = spec.circumradius
    # Edge midpoints point at angle start + pi/n; putting the first one at
    # -pi/2 makes the bottom edge horizontal.
    start = -math.pi / 2.0 - math.pi / n
    step = 2.0 * math.pi / n
    return [
        (r * math.cos(start + k * step), r * math.sin(start + k * step))
        for k in range(n)
    ]
