"""Catalog of the 5 Platonic and 13 Archimedean solids.

Each record carries the face inventory, the (F, E, V) counts checked
against the Descartes-Euler relation E = F + V - 2, and, for the featured
solids, exact per-unit-edge metric coefficients evaluated from their
closed forms at load time. Vertex coordinates are provided for the solids
the rest of the package builds on (the truncated icosahedron foremost).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import (
    CapabilityError,
    DomainError,
    GeometryError,
    InventoryError,
    UnknownSolidError,
)
from .polygons import PolygonSpec, regular_polygon_area

__all__ = [
    "FaceInventory",
    "SolidRecord",
    "as_inventory",
    "derive_counts",
    "euler_check",
    "circumsphere_volume_ratio",
    "catalog_names",
    "catalog_records",
    "catalog_lookup",
    "catalog_report",
    "truncated_icosahedron_vertices",
    "unit_edge_vertices",
    "hull_metrics_oracle",
]

PHI = (1.0 + math.sqrt(5.0)) / 2.0
SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True)
class FaceInventory:
    """Multiset of face types: polygon side count n -> number of such faces.

    Every n must be >= 3 with a positive count, and the total number of
    edge incidences (sum of n * count) must be even, since each edge of a
    closed surface borders exactly two faces. An empty inventory is legal
    as a degenerate value; individual operations reject it where needed.
    """

    entries: Mapping[int, int]

    def __post_init__(self) -> None:
        clean: dict[int, int] = {}
        for n, count in sorted(self.entries.items()):
            n, count = int(n), int(count)
            if n < 3:
                raise InventoryError(f"face type must have >= 3 sides, got {n}")
            if count < 1:
                raise InventoryError(f"face count for {n}-gons must be >= 1, got {count}")
            clean[n] = count
        object.__setattr__(self, "entries", clean)
        if self.edge_incidences % 2:
            raise InventoryError(
                f"total edge incidences must be even, got {self.edge_incidences} "
                "(each edge borders exactly two faces)"
            )

    @property
    def edge_incidences(self) -> int:
        return sum(n * c for n, c in self.entries.items())

    def items(self) -> Iterable[tuple[int, int]]:
        return self.entries.items()

    def unit_edge_surface(self) -> float:
        """Total flat area of all faces at side 1: sum of c_n * (n/4) * cot(pi/n)."""
        return sum(c * regular_polygon_area(PolygonSpec(n, 1.0)) for n, c in self.items())


def as_inventory(inventory: FaceInventory | Mapping[int, int]) -> FaceInventory:
    """Coerce a plain {n: count} mapping into a validated FaceInventory."""
    if isinstance(inventory, FaceInventory):
        return inventory
    return FaceInventory(dict(inventory))


def derive_counts(inventory: FaceInventory | Mapping[int, int]) -> tuple[int, int, int]:
    """(F, E, V) from a face inventory.

    F and E are combinatorial: F = sum of counts, E = (sum of n * count) / 2.
    V comes from the Descartes-Euler relation, V = E - F + 2.
    """
    inv = as_inventory(inventory)
    faces = sum(inv.entries.values())
    edges = inv.edge_incidences // 2
    return faces, edges, edges - faces + 2


@dataclass(frozen=True)
class SolidRecord:
    """A named convex solid with its combinatorics and optional metrics.

    The metric coefficients are dimensionless per-unit-edge values:
    circumradius_coeff = R/a, volume_coeff = Vol/a^3, surface_coeff = Area/a^2.
    """

    name: str
    family: str  # "platonic" | "archimedean"
    inventory: FaceInventory
    faces_F: int
    edges_E: int
    vertices_V: int
    circumradius_coeff: float | None = None
    volume_coeff: float | None = None
    surface_coeff: float | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        """JSON-ready report entry; roundness included when computable."""
        try:
            ratio = circumsphere_volume_ratio(self)
        except CapabilityError:
            ratio = None
        return {
            "name": self.name,
            "family": self.family,
            "inventory": {str(n): c for n, c in self.inventory.items()},
            "faces": self.faces_F,
            "edges": self.edges_E,
            "vertices": self.vertices_V,
            "euler_ok": euler_check(self),
            "circumradius_coeff": self.circumradius_coeff,
            "volume_coeff": self.volume_coeff,
            "surface_coeff": self.surface_coeff,
            "circumsphere_volume_ratio": ratio,
            "note": self.note,
        }


def euler_check(record: SolidRecord) -> bool:
    """True iff E = F + V - 2 and the counts match the face inventory."""
    if record.edges_E != record.faces_F + record.vertices_V - 2:
        return False
    return derive_counts(record.inventory) == (
        record.faces_F,
        record.edges_E,
        record.vertices_V,
    )


def circumsphere_volume_ratio(record: SolidRecord) -> float:
    """Fraction of the circumscribed sphere's volume the solid fills.

    Dimensionless by construction: volume_coeff / ((4 pi / 3) * R_coeff^3).
    """
    if record.volume_coeff is None or record.circumradius_coeff is None:
        raise CapabilityError(
            f"solid '{record.name}' has no volume/circumradius coefficients"
        )
    sphere = (4.0 * math.pi / 3.0) * record.circumradius_coeff**3
    return record.volume_coeff / sphere


# --------------------------------------------------------------------------
# Catalog data. Closed forms per solid (a = edge length):
#   tetrahedron     R/a = sqrt(6)/4            Vol/a^3 = sqrt(2)/12
#   cube            R/a = sqrt(3)/2            Vol/a^3 = 1
#   octahedron      R/a = sqrt(2)/2            Vol/a^3 = sqrt(2)/3
#   dodecahedron    R/a = sqrt(3)(1+sqrt5)/4   Vol/a^3 = (15+7 sqrt5)/4
#   icosahedron     R/a = sqrt(10+2 sqrt5)/4   Vol/a^3 = 5(3+sqrt5)/12
#   truncated icosahedron      R/a = sqrt(58+18 sqrt5)/4   Vol/a^3 = (125+43 sqrt5)/4
#   rhombicosidodecahedron     R/a = sqrt(11+4 sqrt5)/2    Vol/a^3 = (60+29 sqrt5)/3
# Surface coefficients are always derived from the inventory (regular faces).
# --------------------------------------------------------------------------

_ROUNDNESS_NOTE = (
    "Secondary sources sometimes quote ~94% sphere-filling for this solid; the "
    "circumscribed-sphere volume ratio computed here is 0.8923. The higher figure "
    "presumably uses a different roundness measure (e.g. an inscribed or middle "
    "sphere) and is not reproduced."
)

_CATALOG_SPECS: list[tuple] = [
    # (name, family, inventory, R/a, Vol/a^3, note)
    ("tetrahedron", "platonic", {3: 4}, math.sqrt(6.0) / 4.0, math.sqrt(2.0) / 12.0, None),
    ("cube", "platonic", {4: 6}, math.sqrt(3.0) / 2.0, 1.0, None),
    ("octahedron", "platonic", {3: 8}, math.sqrt(2.0) / 2.0, math.sqrt(2.0) / 3.0, None),
    (
        "dodecahedron",
        "platonic",
        {5: 12},
        math.sqrt(3.0) * (1.0 + SQRT5) / 4.0,
        (15.0 + 7.0 * SQRT5) / 4.0,
        None,
    ),
    (
        "icosahedron",
        "platonic",
        {3: 20},
        math.sqrt(10.0 + 2.0 * SQRT5) / 4.0,
        5.0 * (3.0 + SQRT5) / 12.0,
        None,
    ),
    ("truncated-tetrahedron", "archimedean", {3: 4, 6: 4}, None, None, None),
    ("cuboctahedron", "archimedean", {3: 8, 4: 6}, None, None, None),
    ("truncated-cube", "archimedean", {3: 8, 8: 6}, None, None, None),
    ("truncated-octahedron", "archimedean", {4: 6, 6: 8}, None, None, None),
    ("rhombicuboctahedron", "archimedean", {3: 8, 4: 18}, None, None, None),
    ("truncated-cuboctahedron", "archimedean", {4: 12, 6: 8, 8: 6}, None, None, None),
    # Chiral solids appear once; both enantiomers share the combinatorics.
    ("snub-cube", "archimedean", {3: 32, 4: 6}, None, None, None),
    ("icosidodecahedron", "archimedean", {3: 20, 5: 12}, None, None, None),
    ("truncated-dodecahedron", "archimedean", {3: 20, 10: 12}, None, None, None),
    (
        "truncated-icosahedron",
        "archimedean",
        {5: 12, 6: 20},
        math.sqrt(58.0 + 18.0 * SQRT5) / 4.0,
        (125.0 + 43.0 * SQRT5) / 4.0,
        None,
    ),
    (
        "rhombicosidodecahedron",
        "archimedean",
        {3: 20, 4: 30, 5: 12},
        math.sqrt(11.0 + 4.0 * SQRT5) / 2.0,
        (60.0 + 29.0 * SQRT5) / 3.0,
        _ROUNDNESS_NOTE,
    ),
    ("truncated-icosidodecahedron", "archimedean", {4: 30, 6: 20, 10: 12}, None, None, None),
    ("snub-dodecahedron", "archimedean", {3: 80, 5: 12}, None, None, None),
]

_ALIASES = {
    "soccer-ball": "truncated-icosahedron",
    "football": "truncated-icosahedron",
    "buckyball": "truncated-icosahedron",
    "bucky-ball": "truncated-icosahedron",
    "c60": "truncated-icosahedron",
    "soccerene": "truncated-icosahedron",
    "fullerene": "truncated-icosahedron",
}


def _build_catalog() -> dict[str, SolidRecord]:
    records: dict[str, SolidRecord] = {}
    for name, family, faces, r_coeff, v_coeff, note in _CATALOG_SPECS:
        inventory = FaceInventory(faces)
        f, e, v = derive_counts(inventory)
        records[name] = SolidRecord(
            name=name,
            family=family,
            inventory=inventory,
            faces_F=f,
            edges_E=e,
            vertices_V=v,
            circumradius_coeff=r_coeff,
            volume_coeff=v_coeff,
            surface_coeff=inventory.unit_edge_surface(),
            note=note,
        )
    return records


_CATALOG = _build_catalog()


def _normalize_name(name: str) -> str:
    slug = name.strip().lower().replace("_", "-").replace(" ", "-")
    while "--" in slug:
        slug = slug.replace("--", "-")
    return slug


def catalog_names() -> list[str]:
    """Canonical names of all 18 solids, Platonic first."""
    return list(_CATALOG)


def catalog_records() -> list[SolidRecord]:
    return list(_CATALOG.values())


def catalog_lookup(name: str) -> SolidRecord:
    """Find a solid by name; case-insensitive, hyphen/space/alias tolerant."""
    slug = _normalize_name(name)
    slug = _ALIASES.get(slug, slug)
    try:
        return _CATALOG[slug]
    except KeyError:
        raise UnknownSolidError(
            f"unknown solid '{name}'; available: {', '.join(catalog_names())}"
        ) from None


def catalog_report() -> list[dict]:
    """JSON-ready listing of every record (see SolidRecord.to_dict)."""
    return [record.to_dict() for record in catalog_records()]


# --------------------------------------------------------------------------
# Vertex coordinates (unit edge, centered on the origin).
# --------------------------------------------------------------------------


def _cyclic(v: tuple[float, float, float]) -> list[tuple[float, float, float]]:
    return [(v[0], v[1], v[2]), (v[1], v[2], v[0]), (v[2], v[0], v[1])]


def _icosahedron_edge2() -> np.ndarray:
    """Regular icosahedron on cyclic permutations of (0, +-1, +-phi); edge 2."""
    points = set()
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            points.update(_cyclic((0.0, s1, s2 * PHI)))
    return np.array(sorted(points))


def _shortest_pairs(points: np.ndarray) -> list[tuple[int, int]]:
    """Index pairs at the minimal pairwise distance (the edges, for these solids)."""
    diffs = points[:, None, :] - points[None, :, :]
    dist = np.linalg.norm(diffs, axis=-1)
    i_upper, j_upper = np.triu_indices(len(points), 1)
    shortest = dist[i_upper, j_upper].min()
    keep = np.abs(dist[i_upper, j_upper] - shortest) < 1e-9 * shortest
    return [(int(i), int(j)) for i, j in zip(i_upper[keep], j_upper[keep])]


def truncated_icosahedron_vertices(edge: float) -> np.ndarray:
    """The 60 vertices (cm) of a truncated icosahedron with the given edge.

    Built by cutting every edge of the regular icosahedron at its two
    one-third points, which leaves all 90 resulting edges equal, then
    scaling to the requested edge length. Centered on the origin; these
    are also the carbon positions of the C60 molecule at that scale.
    """
    if edge <= 0:
        raise DomainError(f"edge length must be > 0, got {edge}")
    base = _icosahedron_edge2()
    points = []
    for i, j in _shortest_pairs(base):
        a, b = base[i], base[j]
        points.append(a + (b - a) / 3.0)
        points.append(a + (b - a) * (2.0 / 3.0))
    # Base edges have length 2, so the truncation points sit 2/3 apart.
    return np.array(points) * (edge / (2.0 / 3.0))


def _tetrahedron_unit() -> np.ndarray:
    corners = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float)
    return corners / (2.0 * math.sqrt(2.0))


def _cube_unit() -> np.ndarray:
    corners = [(x, y, z) for x in (-0.5, 0.5) for y in (-0.5, 0.5) for z in (-0.5, 0.5)]
    return np.array(sorted(corners))


def _rhombicosidodecahedron_unit() -> np.ndarray:
    """Standard orbit coordinates (edge 2), scaled to unit edge."""
    points: set[tuple[float, float, float]] = set()
    for sx in (1.0, -1.0):
        for sy in (1.0, -1.0):
            for sz in (1.0, -1.0):
                points.update(_cyclic((sx, sy, sz * PHI**3)))
                points.update(_cyclic((sx * PHI**2, sy * PHI, sz * 2.0 * PHI)))
    for sx in (1.0, -1.0):
        for sz in (1.0, -1.0):
            points.update(_cyclic((sx * (2.0 + PHI), 0.0, sz * PHI**2)))
    return np.array(sorted(points)) / 2.0


_COORDINATE_BUILDERS: dict[str, Callable[[], np.ndarray]] = {
    "tetrahedron": _tetrahedron_unit,
    "cube": _cube_unit,
    "truncated-icosahedron": lambda: truncated_icosahedron_vertices(1.0),
    "rhombicosidodecahedron": _rhombicosidodecahedron_unit,
}


def unit_edge_vertices(name: str) -> np.ndarray:
    """Vertex coordinates of a catalog solid at edge length 1, origin-centered.

    Only the solids the package actually constructs carry coordinates;
    anything else raises CapabilityError.
    """
    record = catalog_lookup(name)
    builder = _COORDINATE_BUILDERS.get(record.name)
    if builder is None:
        supported = ", ".join(sorted(_COORDINATE_BUILDERS))
        raise CapabilityError(
            f"no vertex coordinates for '{record.name}'; available: {supported}"
        )
    return builder()


# --------------------------------------------------------------------------
# Independent convex-hull oracle.
# --------------------------------------------------------------------------


def hull_metrics_oracle(points: Sequence | np.ndarray) -> tuple[float, float, float]:
    """(volume cm^3, surface cm^2, circumradius cm) of the convex hull.

    Independent of the catalog's closed forms: volume and surface come from
    a convex-hull triangulation, the circumradius is the largest distance
    from the hull vertices' centroid (which coincides with the circumcenter
    for the vertex-transitive solids this package cares about).
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) < 4:
        raise GeometryError("need at least 4 points in 3D")
    try:
        hull = ConvexHull(pts)
    except QhullError as exc:
        raise GeometryError(f"degenerate point set: {exc}") from exc
    corners = pts[hull.vertices]
    centroid = corners.mean(axis=0)
    circumradius = float(np.linalg.norm(corners - centroid, axis=1).max())
    return float(hull.volume), float(hull.area), circumradius
