"""Independent oracles and parsers used across the test suite.

Everything here is deliberately kept separate from the implementation
paths it checks: polygon areas come from fan triangulation / the shoelace
formula over the raw coordinates, OBJ and SVG content is re-parsed from
the emitted text.
"""

from __future__ import annotations

import re


def shoelace_area(points) -> float:
    """Signed-area shoelace formula; positive for counterclockwise rings."""
    total = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:] + points[:1]):
        total += x0 * y1 - x1 * y0
    return 0.5 * total


def fan_triangulation_area(points) -> float:
    """Sum of triangle areas fanned from the first vertex."""
    x0, y0 = points[0]
    total = 0.0
    for (x1, y1), (x2, y2) in zip(points[1:], points[2:]):
        total += 0.5 * abs((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0))
    return total


def parse_obj(text: str) -> tuple[list[tuple[float, float, float]], list[tuple[int, ...]], dict[str, int]]:
    """(vertices, 0-based face cycles, faces-per-group) from OBJ text."""
    vertices: list[tuple[float, float, float]] = []
    faces: list[tuple[int, ...]] = []
    group_faces: dict[str, int] = {}
    group = None
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "#":
            continue
        if parts[0] == "v":
            vertices.append(tuple(float(p) for p in parts[1:4]))
        elif parts[0] == "g":
            group = parts[1]
            group_faces.setdefault(group, 0)
        elif parts[0] == "f":
            faces.append(tuple(int(p) - 1 for p in parts[1:]))
            if group is not None:
                group_faces[group] += 1
    return vertices, faces, group_faces


def svg_paths(text: str) -> list[list[tuple[float, float]]]:
    """Coordinate lists of every <path> element in an SVG document."""
    paths = []
    for match in re.finditer(r'<path d="([^"]+)"', text):
        coords = re.findall(r"(-?\d+\.\d+) (-?\d+\.\d+)", match.group(1))
        paths.append([(float(x), float(y)) for x, y in coords])
    return paths


def bounding_box(points) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def boxes_disjoint(a, b) -> bool:
    """Strict separation of two (min_x, min_y, max_x, max_y) boxes."""
    return a[2] <= b[0] or b[2] <= a[0] or a[3] <= b[1] or b[3] <= a[1]
