"""Physical build artifacts: cut-template sheets and seam/pin budgets.

Sheets are packed with a deterministic shelf (row) packer on polygon
bounding boxes; identical inputs always produce identical sheets, and the
SVG renderer emits byte-identical documents for them. No attempt is made
at optimal nesting: the panel counts involved are tiny.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .catalog import FaceInventory, as_inventory, derive_counts
from .errors import DomainError, LayoutError
from .polygons import PolygonSpec, polygon_vertices

__all__ = [
    "MaterialBudget",
    "Placement",
    "TemplateSheet",
    "SeamReport",
    "default_color_map",
    "seam_budget",
    "layout_templates",
    "render_svg",
]

MM_PER_CM = 10.0


@dataclass(frozen=True)
class MaterialBudget:
    """Available materials; defaults sized for two 25 cm classroom balls
    with 50 m of thread and about 2000 pins."""

    balls: int = 2
    sphere_diameter: float = 25.0
    thread_available: float = 5000.0  # cm
    pins_available: int = 2000
    sheet_width: float = 100.0  # cm, per color
    sheet_height: float = 70.0  # cm, per color

    def __post_init__(self) -> None:
        if self.balls < 1:
            raise DomainError(f"need at least one ball, got {self.balls}")
        for field_name in (
            "sphere_diameter",
            "thread_available",
            "pins_available",
            "sheet_width",
            "sheet_height",
        ):
            if getattr(self, field_name) <= 0:
                raise DomainError(f"{field_name} must be > 0")


@dataclass(frozen=True)
class Placement:
    """One polygon cut-out: its center position on the sheet (cm) and
    rotation (radians, applied before translation)."""

    sides_n: int
    x: float
    y: float
    rotation: float = 0.0

    def vertices(self, side: float) -> list[tuple[float, float]]:
        """Sheet coordinates of the placed polygon's corners."""
        cos_r, sin_r = math.cos(self.rotation), math.sin(self.rotation)
        return [
            (self.x + vx * cos_r - vy * sin_r, self.y + vx * sin_r + vy * cos_r)
            for vx, vy in polygon_vertices(PolygonSpec(self.sides_n, side))
        ]


@dataclass(frozen=True)
class TemplateSheet:
    """A single sheet of one color with its placed cut-outs."""

    color: str
    width: float
    height: float
    side: float
    placements: tuple[Placement, ...]


@dataclass(frozen=True)
class SeamReport:
    """Thread and pin budget for sewing every edge of every ball."""

    balls: int
    edges_per_ball: int
    side: float
    stitch_multiplier: float
    seam_length: float
    thread_available: float
    thread_ok: bool
    pins_available: int
    pins_per_edge: int

    def to_dict(self) -> dict:
        return {
            "balls": self.balls,
            "edges_per_ball": self.edges_per_ball,
            "side": self.side,
            "stitch_multiplier": self.stitch_multiplier,
            "seam_length": self.seam_length,
            "thread_available": self.thread_available,
            "thread_ok": self.thread_ok,
            "pins_available": self.pins_available,
            "pins_per_edge": self.pins_per_edge,
        }


def default_color_map(inventory: FaceInventory | Mapping[int, int]) -> dict[int, str]:
    """The soccer-ball scheme: black pentagons, white everything else."""
    inv = as_inventory(inventory)
    return {n: ("black" if n == 5 else "white") for n, _ in inv.items()}


def seam_budget(
    inventory: FaceInventory | Mapping[int, int],
    side: float,
    budget: MaterialBudget,
    stitch_multiplier: float = 1.0,
) -> SeamReport:
    """Thread length and pins-per-edge for sewing all panel edges.

    One thread pass per edge by default; ``stitch_multiplier`` scales the
    seam length to model over-stitching.
    """
    if side < 0:
        raise DomainError(f"side must be >= 0, got {side}")
    if stitch_multiplier <= 0:
        raise DomainError(f"stitch multiplier must be > 0, got {stitch_multiplier}")
    _, edges, _ = derive_counts(inventory)
    total_edges = budget.balls * edges
    seam_length = total_edges * side * stitch_multiplier
    pins_per_edge = budget.pins_available // total_edges if total_edges else 0
    return SeamReport(
        balls=budget.balls,
        edges_per_ball=edges,
        side=side,
        stitch_multiplier=stitch_multiplier,
        seam_length=seam_length,
        thread_available=budget.thread_available,
        thread_ok=seam_length <= budget.thread_available,
        pins_available=budget.pins_available,
        pins_per_edge=pins_per_edge,
    )


def _bounding_box(sides_n: int, side: float) -> tuple[float, float, float, float]:
    """(min_x, min_y, width, height) of the canonical polygon."""
    xs, ys = zip(*polygon_vertices(PolygonSpec(sides_n, side)))
    return min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys)


def layout_templates(
    inventory: FaceInventory | Mapping[int, int],
    side: float,
    budget: MaterialBudget,
    color_map: Mapping[int, str] | None = None,
    gap: float = 0.5,
) -> list[TemplateSheet]:
    """Pack balls x count copies of every face polygon onto colored sheets.

    Deterministic shelf packing: polygons go left to right in rows, rows
    stack bottom-up, a fresh sheet starts when the current one is full.
    ``gap`` (cm) separates cut-outs from each other and from the sheet rim.
    """
    inv = as_inventory(inventory)
    if side <= 0 and inv.entries:
        raise DomainError(f"side must be > 0, got {side}")
    if gap < 0:
        raise DomainError(f"gap must be >= 0, got {gap}")
    colors = dict(color_map) if color_map is not None else default_color_map(inv)
    missing = [n for n, _ in inv.items() if n not in colors]
    if missing:
        raise DomainError(f"no color assigned to face types: {missing}")

    by_color: dict[str, list[int]] = {}
    for n, count in inv.items():
        by_color.setdefault(colors[n], []).extend([n] * (count * budget.balls))

    sheets: list[TemplateSheet] = []
    for color in sorted(by_color):
        queue = sorted(by_color[color])
        placements: list[Placement] = []
        cursor_x, cursor_y, row_height = gap, gap, 0.0
        for n in queue:
            min_x, min_y, w, h = _bounding_box(n, side)
            if w + 2 * gap > budget.sheet_width or h + 2 * gap > budget.sheet_height:
                raise LayoutError(
                    f"{n}-gon with side {side:g} cm does not fit a "
                    f"{budget.sheet_width:g}x{budget.sheet_height:g} cm sheet"
                )
            if cursor_x + w + gap > budget.sheet_width:
                cursor_x, cursor_y = gap, cursor_y + row_height + gap
                row_height = 0.0
            if cursor_y + h + gap > budget.sheet_height:
                sheets.append(
                    TemplateSheet(color, budget.sheet_width, budget.sheet_height,
                                  side, tuple(placements))
                )
                placements = []
                cursor_x, cursor_y, row_height = gap, gap, 0.0
            placements.append(Placement(n, cursor_x - min_x, cursor_y - min_y))
            cursor_x += w + gap
            row_height = max(row_height, h)
        if placements:
            sheets.append(
                TemplateSheet(color, budget.sheet_width, budget.sheet_height,
                              side, tuple(placements))
            )
    return sheets


def _fmt(value: float) -> str:
    # Fixed 3-decimal formatting keeps the output byte-deterministic.
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


def render_svg(sheet: TemplateSheet) -> str:
    """Render one sheet as an SVG document (mm units, 1 cm = 10 user units).

    Cut lines are 0.3 mm strokes with no fill; every cut-out gets a small
    "<n>-<index>" label at its center. Output is byte-deterministic.
    """
    width_mm = _fmt(sheet.width * MM_PER_CM)
    height_mm = _fmt(sheet.height * MM_PER_CM)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_mm}mm" '
        f'height="{height_mm}mm" viewBox="0 0 {width_mm} {height_mm}">',
        f'  <!-- {sheet.color} sheet | cut-outs: {len(sheet.placements)} | '
        f'side: {_fmt(sheet.side * MM_PER_CM)} mm -->',
    ]
    for index, placement in enumerate(sheet.placements, start=1):
        points = [
            (x * MM_PER_CM, y * MM_PER_CM)
            for x, y in placement.vertices(sheet.side)
        ]
        path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in points) + " Z"
        lines.append(
            f'  <path d="{path}" fill="none" stroke="black" stroke-width="0.3"/>'
        )
        lines.append(
            f'  <text x="{_fmt(placement.x * MM_PER_CM)}" '
            f'y="{_fmt(placement.y * MM_PER_CM)}" font-size="8" '
            f'text-anchor="middle">{placement.sides_n}-{index}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
