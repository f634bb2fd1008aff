"""Geometry of sphere-approximating polyhedra.

Regular-polygon metrics, a Platonic/Archimedean solid catalog with Euler
verification and roundness ratios, solvers for the common panel side when
covering a sphere, and fabrication outputs (SVG cut templates, seam
budgets, OBJ meshes).
"""

from .catalog import (
    FaceInventory,
    SolidRecord,
    as_inventory,
    catalog_lookup,
    catalog_names,
    catalog_records,
    catalog_report,
    circumsphere_volume_ratio,
    derive_counts,
    euler_check,
    hull_metrics_oracle,
    truncated_icosahedron_vertices,
    unit_edge_vertices,
)
from .errors import (
    CapabilityError,
    DomainError,
    GeometryError,
    InventoryError,
    LayoutError,
    PolysphereError,
    UnknownSolidError,
)
from .fabrication import (
    MaterialBudget,
    Placement,
    SeamReport,
    TemplateSheet,
    default_color_map,
    layout_templates,
    render_svg,
    seam_budget,
)
from .meshes import MeshModel, build_solid_mesh, export_obj, group_name
from .polygons import PolygonSpec, polygon_vertices, regular_polygon_area
from .solver import (
    INSCRIBED_FIT,
    SURFACE_MATCH,
    EdgeSolution,
    MethodComparison,
    SphereSpec,
    compare_methods,
    inscribed_fit_edge,
    surface_match_edge,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "DomainError",
    "EdgeSolution",
    "FaceInventory",
    "GeometryError",
    "INSCRIBED_FIT",
    "InventoryError",
    "LayoutError",
    "MaterialBudget",
    "MeshModel",
    "MethodComparison",
    "Placement",
    "PolygonSpec",
    "PolysphereError",
    "SURFACE_MATCH",
    "SeamReport",
    "SolidRecord",
    "SphereSpec",
    "TemplateSheet",
    "UnknownSolidError",
    "as_inventory",
    "build_solid_mesh",
    "catalog_lookup",
    "catalog_names",
    "catalog_records",
    "catalog_report",
    "circumsphere_volume_ratio",
    "compare_methods",
    "default_color_map",
    "derive_counts",
    "euler_check",
    "export_obj",
    "group_name",
    "hull_metrics_oracle",
    "inscribed_fit_edge",
    "layout_templates",
    "polygon_vertices",
    "regular_polygon_area",
    "render_svg",
    "seam_budget",
    "surface_match_edge",
    "truncated_icosahedron_vertices",
    "unit_edge_vertices",
]
