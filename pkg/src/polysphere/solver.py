"""Solvers for the common panel side x when covering a sphere with polygons.

Two methods are offered and deliberately kept side by side:

* surface matching: choose x so the total flat area of all panels equals
  the sphere's surface area, x = sqrt(4 pi r^2 / sum of unit-edge areas).
  Closed form; the denominator is linear in x^2, so no iteration is needed.
* inscribed fit: choose x so the solid's circumscribed sphere has the
  target radius, x = r / (R/a). Geometrically exact, but the flat faces
  then cover less area than the sphere they approximate.

Neither is declared canonical; ``compare_methods`` quantifies the gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .catalog import FaceInventory, SolidRecord, as_inventory
from .errors import CapabilityError, DomainError
from .polygons import PolygonSpec, regular_polygon_area

__all__ = [
    "SURFACE_MATCH",
    "INSCRIBED_FIT",
    "SphereSpec",
    "EdgeSolution",
    "MethodComparison",
    "surface_match_edge",
    "inscribed_fit_edge",
    "compare_methods",
]

SURFACE_MATCH = "surface-match"
INSCRIBED_FIT = "inscribed-fit"


@dataclass(frozen=True)
class SphereSpec:
    """The sphere to cover; radius in cm."""

    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise DomainError(f"sphere radius must be > 0, got {self.radius}")

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    @property
    def surface_area(self) -> float:
        """4 pi r^2, in cm^2."""
        return 4.0 * math.pi * self.radius * self.radius


@dataclass(frozen=True)
class EdgeSolution:
    """Solved common side, with the per-face-type coverage breakdown.

    ``coverage`` maps each polygon side count n to the total flat area
    (cm^2) contributed by all n-gon panels at the solved side.
    """

    side: float
    side_sq: float
    method: str
    coverage: Mapping[int, float]
    flat_total: float
    sphere_surface: float
    flat_to_sphere_ratio: float

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "side_sq": self.side_sq,
            "method": self.method,
            "coverage": {str(n): area for n, area in sorted(self.coverage.items())},
            "flat_total": self.flat_total,
            "sphere_surface": self.sphere_surface,
            "flat_to_sphere_ratio": self.flat_to_sphere_ratio,
        }


def _coverage(inventory: FaceInventory, side: float) -> dict[int, float]:
    return {
        n: count * regular_polygon_area(PolygonSpec(n, side))
        for n, count in inventory.items()
    }


def _solution(
    inventory: FaceInventory, side: float, method: str, sphere: SphereSpec
) -> EdgeSolution:
    coverage = _coverage(inventory, side)
    flat_total = sum(coverage.values())
    return EdgeSolution(
        side=side,
        side_sq=side * side,
        method=method,
        coverage=coverage,
        flat_total=flat_total,
        sphere_surface=sphere.surface_area,
        flat_to_sphere_ratio=flat_total / sphere.surface_area,
    )


def surface_match_edge(
    sphere: SphereSpec, inventory: FaceInventory | Mapping[int, int]
) -> EdgeSolution:
    """Side length making the panels' total flat area equal the sphere's.

    x = sqrt(4 pi r^2 / A1) where A1 = sum of c_n * (n/4) * cot(pi/n) is the
    inventory's total area at unit side. The coverage breakdown therefore
    sums back to the sphere surface exactly (up to roundoff).
    """
    inv = as_inventory(inventory)
    if not inv.entries:
        raise DomainError("cannot solve for an empty face inventory")
    side = math.sqrt(sphere.surface_area / inv.unit_edge_surface())
    return _solution(inv, side, SURFACE_MATCH, sphere)


def inscribed_fit_edge(sphere: SphereSpec, solid: SolidRecord) -> EdgeSolution:
    """Side length putting the solid's vertices exactly on the sphere.

    x = r / (R/a). The flat faces of the inscribed solid necessarily cover
    less than the sphere surface, so flat_to_sphere_ratio < 1.
    """
    if solid.circumradius_coeff is None:
        raise CapabilityError(
            f"solid '{solid.name}' has no circumradius coefficient"
        )
    side = sphere.radius / solid.circumradius_coeff
    return _solution(solid.inventory, side, INSCRIBED_FIT, sphere)


@dataclass(frozen=True)
class MethodComparison:
    """Both solutions for one sphere/solid, plus the headline ratios.

    ``side_ratio`` is surface-match side over inscribed-fit side (> 1: the
    surface-matching method oversizes panels). ``flat_deficit`` is the area
    (cm^2) by which the inscribed solid's flat faces undershoot the sphere.
    """

    sphere: SphereSpec
    solid_name: str
    surface_match: EdgeSolution
    inscribed_fit: EdgeSolution
    side_ratio: float
    flat_deficit: float

    def to_dict(self) -> dict:
        return {
            "sphere": {"radius": self.sphere.radius},
            "solid": self.solid_name,
            "surface_match": self.surface_match.to_dict(),
            "inscribed_fit": self.inscribed_fit.to_dict(),
            "side_ratio": self.side_ratio,
            "flat_deficit": self.flat_deficit,
        }


def compare_methods(sphere: SphereSpec, solid: SolidRecord) -> MethodComparison:
    """Run both solvers on the same solid and quantify the disagreement."""
    matched = surface_match_edge(sphere, solid.inventory)
    inscribed = inscribed_fit_edge(sphere, solid)
    return MethodComparison(
        sphere=sphere,
        solid_name=solid.name,
        surface_match=matched,
        inscribed_fit=inscribed,
        side_ratio=matched.side / inscribed.side,
        flat_deficit=sphere.surface_area - inscribed.flat_total,
    )
