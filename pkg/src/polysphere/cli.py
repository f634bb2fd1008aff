"""Command-line front door: catalog, solve, template and mesh subcommands.

All data goes to stdout or to files under --out; errors go to stderr with
a nonzero exit code. Lengths are centimeters everywhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .catalog import SolidRecord, catalog_lookup, catalog_report
from .errors import PolysphereError
from .fabrication import (
    MaterialBudget,
    default_color_map,
    layout_templates,
    render_svg,
    seam_budget,
)
from .meshes import build_solid_mesh, export_obj, group_name
from .solver import (
    EdgeSolution,
    MethodComparison,
    SphereSpec,
    compare_methods,
    inscribed_fit_edge,
    surface_match_edge,
)

DEFAULT_DIAMETER = 25.0
DEFAULT_SOLID = "truncated-icosahedron"


def _add_sphere_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--radius", type=float, metavar="CM", help="sphere radius")
    group.add_argument(
        "--diameter", type=float, metavar="CM",
        help=f"sphere diameter (default {DEFAULT_DIAMETER:g})",
    )


def _add_solid_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--solid", default=DEFAULT_SOLID,
        help=f"catalog solid name or alias (default {DEFAULT_SOLID})",
    )


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysphere",
        description="Geometry of sphere-approximating polyhedra: solid catalog, "
        "panel-edge solvers, cut templates, seam budgets and 3D meshes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_catalog = sub.add_parser("catalog", help="list the solid catalog")
    p_catalog.add_argument("--solid", default=None, help="show a single solid")
    _add_format_flag(p_catalog)
    p_catalog.set_defaults(func=cmd_catalog)

    p_solve = sub.add_parser("solve", help="solve for the common panel side x")
    _add_solid_flag(p_solve)
    _add_sphere_flags(p_solve)
    p_solve.add_argument(
        "--method", choices=("surface-match", "inscribed", "compare"),
        default="surface-match",
    )
    _add_format_flag(p_solve)
    p_solve.add_argument("--out", metavar="FILE",
                         help="also write the JSON report to this file")
    p_solve.set_defaults(func=cmd_solve)

    p_template = sub.add_parser(
        "template", help="emit SVG cut templates and a seam report"
    )
    _add_solid_flag(p_template)
    _add_sphere_flags(p_template)
    p_template.add_argument(
        "--method", choices=("surface-match", "inscribed"), default="surface-match"
    )
    p_template.add_argument("--balls", type=int, default=2)
    p_template.add_argument("--sheet-w", type=float, default=100.0, metavar="CM")
    p_template.add_argument("--sheet-h", type=float, default=70.0, metavar="CM")
    p_template.add_argument("--gap", type=float, default=0.5, metavar="CM")
    p_template.add_argument("--thread", type=float, default=5000.0, metavar="CM")
    p_template.add_argument("--pins", type=int, default=2000)
    p_template.add_argument("--stitch", type=float, default=1.0,
                            help="seam length multiplier for over-stitching")
    p_template.add_argument("--out", default=".", metavar="DIR")
    p_template.set_defaults(func=cmd_template)

    p_mesh = sub.add_parser("mesh", help="export a solid as a Wavefront OBJ mesh")
    _add_solid_flag(p_mesh)
    scale = p_mesh.add_mutually_exclusive_group()
    scale.add_argument("--scale-edge", type=float, metavar="CM",
                       help="edge length of the mesh")
    scale.add_argument("--scale-radius", type=float, metavar="CM",
                       help=f"circumradius of the mesh (default {DEFAULT_DIAMETER / 2:g})")
    p_mesh.add_argument("--out", default=".", metavar="DIR")
    p_mesh.set_defaults(func=cmd_mesh)

    return parser


def _sphere_from(args: argparse.Namespace) -> SphereSpec:
    if args.radius is not None:
        return SphereSpec(args.radius)
    if args.diameter is not None:
        return SphereSpec(args.diameter / 2.0)
    return SphereSpec(DEFAULT_DIAMETER / 2.0)


def _face_phrase(solid: SolidRecord) -> str:
    return " + ".join(
        f"{count} {group_name(n)}" for n, count in solid.inventory.items()
    )


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.solid is not None:
        entry = catalog_lookup(args.solid).to_dict()
        if args.format == "json":
            print(json.dumps(entry, indent=2))
            return 0
        print(f"name         : {entry['name']}")
        print(f"family       : {entry['family']}")
        print(f"faces        : {_face_phrase(catalog_lookup(args.solid))}  (F={entry['faces']})")
        print(f"edges        : {entry['edges']}")
        print(f"vertices     : {entry['vertices']}")
        print(f"euler check  : {'ok' if entry['euler_ok'] else 'FAILED'} (E = F + V - 2)")
        if entry["circumradius_coeff"] is not None:
            print(f"circumradius : {entry['circumradius_coeff']:.6f} x edge")
            print(f"volume       : {entry['volume_coeff']:.6f} x edge^3")
        print(f"surface      : {entry['surface_coeff']:.6f} x edge^2")
        ratio = entry["circumsphere_volume_ratio"]
        if ratio is not None:
            print(f"roundness    : {ratio:.4f} of the circumscribed sphere ({ratio * 100:.0f}%)")
        if entry["note"]:
            print(f"note         : {entry['note']}")
        return 0

    report = catalog_report()
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return 0
    header = f"{'name':<28} {'family':<12} {'F':>4} {'E':>4} {'V':>4}  euler  roundness"
    print(header)
    print("-" * len(header))
    for entry in report:
        ratio = entry["circumsphere_volume_ratio"]
        print(
            f"{entry['name']:<28} {entry['family']:<12} "
            f"{entry['faces']:>4} {entry['edges']:>4} {entry['vertices']:>4}  "
            f"{'ok' if entry['euler_ok'] else 'FAIL':<5}  "
            f"{'' if ratio is None else format(ratio, '.4f')}"
        )
    return 0


def _print_solution(solid: SolidRecord, sphere: SphereSpec, sol: EdgeSolution) -> None:
    print(f"solid          : {solid.name}")
    print(f"sphere radius  : {sphere.radius:.4f} cm  (diameter {sphere.diameter:.4f} cm)")
    print(f"sphere surface : {sphere.surface_area:.4f} cm^2")
    print(f"method         : {sol.method}")
    print(f"side x         : {sol.side:.4f} cm   (~ {sol.side:.1f} cm)")
    print(f"side^2         : {sol.side_sq:.4f} cm^2 (~ {sol.side_sq:.0f} cm^2)")
    coverage = " + ".join(
        f"{solid.inventory.entries[n]} {group_name(n)} {area:.4f} cm^2"
        for n, area in sorted(sol.coverage.items())
    )
    print(f"coverage       : {coverage}")
    print(
        f"flat total     : {sol.flat_total:.4f} cm^2  "
        f"({sol.flat_to_sphere_ratio * 100:.2f}% of the sphere surface)"
    )


def _print_comparison(report: MethodComparison) -> None:
    oversize = (report.side_ratio - 1.0) * 100.0
    print(f"solid              : {report.solid_name}")
    print(f"sphere radius      : {report.sphere.radius:.4f} cm")
    print(f"surface-match side : {report.surface_match.side:.4f} cm")
    print(f"inscribed-fit side : {report.inscribed_fit.side:.4f} cm")
    print(f"side ratio         : {report.side_ratio:.4f}  "
          f"(surface matching oversizes panels by {oversize:.1f}%)")
    print(f"flat-area deficit  : {report.flat_deficit:.4f} cm^2  "
          f"(inscribed faces cover "
          f"{report.inscribed_fit.flat_to_sphere_ratio * 100:.2f}% of the sphere)")


def cmd_solve(args: argparse.Namespace) -> int:
    solid = catalog_lookup(args.solid)
    sphere = _sphere_from(args)
    if args.method == "compare":
        comparison = compare_methods(sphere, solid)
        payload = comparison.to_dict()
    else:
        if args.method == "inscribed":
            sol = inscribed_fit_edge(sphere, solid)
        else:
            sol = surface_match_edge(sphere, solid.inventory)
        payload = {
            "solid": solid.name,
            "sphere": {"radius": sphere.radius},
            "solution": sol.to_dict(),
        }

    if args.format == "json":
        text = json.dumps(payload, indent=2)
        print(text)
    else:
        if args.method == "compare":
            _print_comparison(comparison)
        else:
            _print_solution(solid, sphere, sol)
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {args.out}", file=sys.stderr)
    return 0


def cmd_template(args: argparse.Namespace) -> int:
    solid = catalog_lookup(args.solid)
    sphere = _sphere_from(args)
    if args.method == "inscribed":
        sol = inscribed_fit_edge(sphere, solid)
    else:
        sol = surface_match_edge(sphere, solid.inventory)
    budget = MaterialBudget(
        balls=args.balls,
        sphere_diameter=sphere.diameter,
        thread_available=args.thread,
        pins_available=args.pins,
        sheet_width=args.sheet_w,
        sheet_height=args.sheet_h,
    )
    sheets = layout_templates(
        solid.inventory, sol.side, budget,
        color_map=default_color_map(solid.inventory), gap=args.gap,
    )
    seam = seam_budget(solid.inventory, sol.side, budget, stitch_multiplier=args.stitch)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    index_by_color: dict[str, int] = {}
    for sheet in sheets:
        index_by_color[sheet.color] = index_by_color.get(sheet.color, 0) + 1
        path = out_dir / f"sheet-{sheet.color}-{index_by_color[sheet.color]:02d}.svg"
        path.write_text(render_svg(sheet))
        written.append(path)
    seam_path = out_dir / "seam_report.json"
    seam_path.write_text(json.dumps(seam.to_dict(), indent=2) + "\n")
    written.append(seam_path)
    for path in written:
        print(path)
    return 0


def cmd_mesh(args: argparse.Namespace) -> int:
    solid = catalog_lookup(args.solid)
    if args.scale_edge is not None:
        mesh = build_solid_mesh(solid, edge=args.scale_edge)
        scale_note = f"scale: edge {args.scale_edge:.6f} cm"
    else:
        radius = args.scale_radius if args.scale_radius is not None else DEFAULT_DIAMETER / 2.0
        mesh = build_solid_mesh(solid, circumradius=radius)
        scale_note = f"scale: circumradius {radius:.6f} cm"
    circumradius = float(np.linalg.norm(mesh.vertices, axis=1).max())
    text = export_obj(
        mesh,
        comments=(solid.name, scale_note, f"circumradius: {circumradius:.5f} cm"),
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{solid.name}.obj"
    path.write_text(text)
    print(path)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolysphereError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
