"""Polygonal meshes of catalog solids and Wavefront OBJ export.

Faces are recovered from the vertex coordinates alone: every supporting
plane through a vertex and two of its nearest neighbors is tested, and
the vertices lying on it form one face. That keeps the mesh construction
self-checking against the catalog's combinatorics instead of relying on
hard-coded index tables. Faces stay n-gons; nothing is triangulated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .catalog import SolidRecord, unit_edge_vertices
from .errors import DomainError, GeometryError

__all__ = ["MeshModel", "build_solid_mesh", "export_obj", "group_name"]

# Grouping tolerance: a vertex belongs to a face plane if it is within
# this fraction of an edge length of it.
_PLANE_TOL = 1e-7


def group_name(sides_n: int) -> str:
    """OBJ group label for a face type."""
    names = {3: "triangles", 4: "squares", 5: "pentagons", 6: "hexagons"}
    return names.get(sides_n, f"{sides_n}-gons")


@dataclass(frozen=True)
class MeshModel:
    """Vertices (cm) plus faces as vertex-index cycles, one group label
    per face. Face cycles wind counterclockwise seen from outside."""

    vertices: np.ndarray
    faces: tuple[tuple[int, ...], ...]
    groups: tuple[str, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edge_set())

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.edge_count + len(self.faces)

    def edge_set(self) -> set[tuple[int, int]]:
        """Undirected edges as sorted index pairs."""
        edges = set()
        for face in self.faces:
            for a, b in zip(face, face[1:] + face[:1]):
                edges.add((min(a, b), max(a, b)))
        return edges

    def edge_lengths(self) -> np.ndarray:
        pairs = np.array(sorted(self.edge_set()))
        return np.linalg.norm(
            self.vertices[pairs[:, 0]] - self.vertices[pairs[:, 1]], axis=1
        )

    def validate(self) -> None:
        """Raise GeometryError if any mesh invariant is broken."""
        count = len(self.vertices)
        if len(self.faces) != len(self.groups):
            raise GeometryError("every face needs a group label")
        for face in self.faces:
            if len(face) < 3 or len(set(face)) != len(face):
                raise GeometryError(f"degenerate face cycle {face}")
            if any(i < 0 or i >= count for i in face):
                raise GeometryError(f"face {face} references a missing vertex")
        edge = float(self.edge_lengths().min())
        for face in self.faces:
            points = self.vertices[list(face)]
            centered = points - points.mean(axis=0)
            # Smallest singular direction is the face normal; the projection
            # onto it measures deviation from the best-fit plane.
            normal = np.linalg.svd(centered)[2][-1]
            if np.abs(centered @ normal).max() >= 1e-6 * edge:
                raise GeometryError(f"face {face} is not planar")
        if self.euler_characteristic != 2:
            raise GeometryError(
                f"Euler characteristic {self.euler_characteristic}, expected 2"
            )


def _adjacency(points: np.ndarray, edge: float) -> list[list[int]]:
    dist = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
    near = np.abs(dist - edge) < 1e-9 * edge
    return [sorted(np.nonzero(near[i])[0].tolist()) for i in range(len(points))]


def _order_cycle(points: np.ndarray, members: Sequence[int]) -> tuple[int, ...]:
    """Order coplanar face vertices into a cycle, counterclockwise from
    outside (outward normal test assumes an origin-centered solid)."""
    face_points = points[list(members)]
    centroid = face_points.mean(axis=0)
    normal = np.linalg.svd(face_points - centroid)[2][-1]
    if normal @ centroid < 0:
        normal = -normal
    # 2D angular sort in the face plane.
    u = face_points[0] - centroid
    u = u - (u @ normal) * normal
    u /= np.linalg.norm(u)
    v = np.cross(normal, u)
    angles = np.arctan2((face_points - centroid) @ v, (face_points - centroid) @ u)
    ordered = [m for _, m in sorted(zip(angles, members))]
    start = ordered.index(min(ordered))
    return tuple(ordered[start:] + ordered[:start])


def _recover_faces(points: np.ndarray, edge: float) -> list[tuple[int, ...]]:
    """Faces of a convex, origin-centered solid from coplanarity + adjacency."""
    adjacency = _adjacency(points, edge)
    tol = _PLANE_TOL * edge
    seen: set[frozenset[int]] = set()
    faces: list[tuple[int, ...]] = []
    for v in range(len(points)):
        for a, b in itertools.combinations(adjacency[v], 2):
            normal = np.cross(points[a] - points[v], points[b] - points[v])
            length = np.linalg.norm(normal)
            if length < tol:
                continue
            normal /= length
            offsets = points @ normal - points[v] @ normal
            if offsets.max() > tol and offsets.min() < -tol:
                continue  # not a supporting plane
            members = frozenset(np.nonzero(np.abs(offsets) < tol)[0].tolist())
            if members in seen:
                continue
            seen.add(members)
            faces.append(_order_cycle(points, sorted(members)))
    faces.sort(key=lambda face: (len(face), face))
    return faces


def build_solid_mesh(
    solid: SolidRecord,
    *,
    edge: float | None = None,
    circumradius: float | None = None,
) -> MeshModel:
    """Mesh of a catalog solid, scaled by edge length or by circumradius.

    Exactly one of ``edge`` and ``circumradius`` must be given (cm). Raises
    CapabilityError for solids without vertex coordinates.
    """
    if (edge is None) == (circumradius is None):
        raise DomainError("give exactly one of edge= or circumradius=")
    scale_by = edge if edge is not None else circumradius
    if scale_by is None or scale_by <= 0:
        raise DomainError(f"scale must be > 0, got {scale_by}")

    unit = unit_edge_vertices(solid.name)
    faces = _recover_faces(unit, 1.0)
    if circumradius is not None:
        factor = circumradius / float(np.linalg.norm(unit, axis=1).max())
    else:
        factor = edge
    mesh = MeshModel(
        vertices=unit * factor,
        faces=tuple(faces),
        groups=tuple(group_name(len(face)) for face in faces),
    )
    mesh.validate()
    return mesh


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def export_obj(mesh: MeshModel, comments: Iterable[str] = ()) -> str:
    """Wavefront OBJ text for the mesh; byte-deterministic.

    Vertices are written at fixed 6-decimal precision, faces as 1-based
    n-gon index cycles under one ``g`` line per face-type group.
    """
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"# vertices: {len(mesh.vertices)}  faces: {len(mesh.faces)}")
    for x, y, z in mesh.vertices:
        lines.append(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}")
    current_group = None
    for face, group in zip(mesh.faces, mesh.groups):
        if group != current_group:
            lines.append(f"g {group}")
            current_group = group
        lines.append("f " + " ".join(str(i + 1) for i in face))
    return "\n".join(lines) + "\n"
