import json
import math

import numpy as np
import pytest

from polysphere import (
    CapabilityError,
    FaceInventory,
    GeometryError,
    InventoryError,
    PolygonSpec,
    SolidRecord,
    UnknownSolidError,
    catalog_lookup,
    catalog_names,
    catalog_records,
    catalog_report,
    circumsphere_volume_ratio,
    derive_counts,
    euler_check,
    hull_metrics_oracle,
    regular_polygon_area,
    truncated_icosahedron_vertices,
    unit_edge_vertices,
)

SQRT5 = math.sqrt(5)

# closed forms for the featured solid (unit edge)
TI_CIRCUMRADIUS = math.sqrt(58 + 18 * SQRT5) / 4  # 2.4780186...
TI_VOLUME = (125 + 43 * SQRT5) / 4  # 55.2877307...


class TestDeriveCounts:
    def test_soccer_ball_inventory(self):
        assert derive_counts({5: 12, 6: 20}) == (32, 90, 60)

    def test_rhombicosidodecahedron_inventory(self):
        assert derive_counts({5: 12, 4: 30, 3: 20}) == (62, 120, 60)

    def test_tetrahedron_inventory(self):
        assert derive_counts({3: 4}) == (4, 6, 4)

    def test_odd_incidences_rejected(self):
        with pytest.raises(InventoryError):
            derive_counts({3: 3})

    def test_bad_entries_rejected(self):
        with pytest.raises(InventoryError):
            FaceInventory({2: 4})
        with pytest.raises(InventoryError):
            FaceInventory({3: 0})

    def test_empty_inventory_is_legal(self):
        assert derive_counts({}) == (0, 0, 2)


class TestEulerCheck:
    @pytest.mark.parametrize("record", catalog_records(), ids=lambda r: r.name)
    def test_all_catalog_records(self, record):
        assert euler_check(record)

    def test_cube(self):
        cube = catalog_lookup("cube")
        assert (cube.faces_F, cube.edges_E, cube.vertices_V) == (6, 12, 8)
        assert euler_check(cube)

    def test_tampered_record_fails(self):
        good = catalog_lookup("truncated-icosahedron")
        bad = SolidRecord(
            name=good.name,
            family=good.family,
            inventory=good.inventory,
            faces_F=32,
            edges_E=91,
            vertices_V=60,
        )
        assert not euler_check(bad)

    @pytest.mark.parametrize("record", catalog_records(), ids=lambda r: r.name)
    def test_counts_derive_from_inventory(self, record):
        assert derive_counts(record.inventory) == (
            record.faces_F,
            record.edges_E,
            record.vertices_V,
        )


class TestCatalog:
    def test_eighteen_solids(self):
        records = catalog_records()
        assert len(records) == 18
        assert sum(r.family == "platonic" for r in records) == 5
        assert sum(r.family == "archimedean" for r in records) == 13

    @pytest.mark.parametrize(
        "alias",
        ["truncated-icosahedron", "Truncated Icosahedron", "truncated_icosahedron",
         "soccer-ball", "Buckyball", "C60"],
    )
    def test_lookup_aliases(self, alias):
        assert catalog_lookup(alias).name == "truncated-icosahedron"

    def test_lookup_unknown_lists_names(self):
        with pytest.raises(UnknownSolidError) as err:
            catalog_lookup("nosuch")
        assert "tetrahedron" in str(err.value)
        assert "snub-dodecahedron" in str(err.value)

    def test_icosahedron_counts(self):
        ico = catalog_lookup("icosahedron")
        assert (ico.faces_F, ico.edges_E, ico.vertices_V) == (20, 30, 12)

    def test_featured_records(self):
        ti = catalog_lookup("truncated-icosahedron")
        assert dict(ti.inventory.items()) == {5: 12, 6: 20}
        assert ti.circumradius_coeff == pytest.approx(TI_CIRCUMRADIUS, rel=1e-15)
        rh = catalog_lookup("rhombicosidodecahedron")
        assert dict(rh.inventory.items()) == {3: 20, 4: 30, 5: 12}
        assert rh.edges_E == 120

    def test_required_coefficients_present(self):
        required = [
            "tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron",
            "truncated-icosahedron", "rhombicosidodecahedron",
        ]
        for name in required:
            record = catalog_lookup(name)
            assert record.circumradius_coeff is not None, name
            assert record.volume_coeff is not None, name
            assert record.surface_coeff is not None, name

    @pytest.mark.parametrize("record", catalog_records(), ids=lambda r: r.name)
    def test_surface_coeff_is_polygon_sum(self, record):
        expected = sum(
            c * regular_polygon_area(PolygonSpec(n, 1.0))
            for n, c in record.inventory.items()
        )
        assert record.surface_coeff == pytest.approx(expected, rel=1e-12)

    def test_report_serializes(self):
        report = catalog_report()
        assert len(report) == 18
        payload = json.loads(json.dumps(report))
        assert all(entry["euler_ok"] for entry in payload)
        rh = next(e for e in payload if e["name"] == "rhombicosidodecahedron")
        assert rh["note"] is not None
        assert "0.8923" in rh["note"]

    def test_names_order_stable(self):
        names = catalog_names()
        assert names[0] == "tetrahedron"
        assert names[:5] == [
            "tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"
        ]


class TestRoundness:
    def test_truncated_icosahedron(self):
        ratio = circumsphere_volume_ratio(catalog_lookup("truncated-icosahedron"))
        assert ratio == pytest.approx(0.8674, abs=5e-5)
        assert round(ratio, 2) == 0.87

    def test_rhombicosidodecahedron(self):
        ratio = circumsphere_volume_ratio(catalog_lookup("rhombicosidodecahedron"))
        assert ratio == pytest.approx(0.8923, abs=5e-5)
        # deliberately far from the sometimes-quoted 94%
        assert abs(ratio - 0.94) > 0.04

    def test_cube(self):
        ratio = circumsphere_volume_ratio(catalog_lookup("cube"))
        expected = 1.0 / ((4 * math.pi / 3) * (math.sqrt(3) / 2) ** 3)
        assert ratio == pytest.approx(expected, rel=1e-12)
        assert ratio == pytest.approx(0.3676, abs=5e-5)

    def test_missing_coefficients(self):
        with pytest.raises(CapabilityError):
            circumsphere_volume_ratio(catalog_lookup("snub-cube"))

    def test_scale_invariance_against_hull(self):
        # ratio from per-unit-edge coefficients equals the hull-measured
        # ratio at any scale
        record = catalog_lookup("truncated-icosahedron")
        expected = circumsphere_volume_ratio(record)
        for edge in (1.0, 7.0):
            volume, _, circumradius = hull_metrics_oracle(
                truncated_icosahedron_vertices(edge)
            )
            measured = volume / ((4 * math.pi / 3) * circumradius**3)
            assert measured == pytest.approx(expected, rel=1e-9)


class TestTruncatedIcosahedronVertices:
    def test_sixty_points_on_circumsphere(self):
        points = truncated_icosahedron_vertices(1.0)
        assert points.shape == (60, 3)
        radii = np.linalg.norm(points, axis=1)
        assert np.allclose(radii, TI_CIRCUMRADIUS, rtol=1e-9)

    def test_ninety_unit_edges(self):
        points = truncated_icosahedron_vertices(1.0)
        dist = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
        i, j = np.triu_indices(60, 1)
        assert int(np.sum(np.abs(dist[i, j] - 1.0) < 1e-9)) == 90

    def test_vertex_degree_three(self):
        points = truncated_icosahedron_vertices(1.0)
        dist = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
        degrees = np.sum(np.abs(dist - 1.0) < 1e-9, axis=1)
        assert np.all(degrees == 3)

    def test_circumradius_12_5_at_fitted_edge(self):
        points = truncated_icosahedron_vertices(5.0443526541899715)
        radii = np.linalg.norm(points, axis=1)
        assert radii.max() == pytest.approx(12.5, abs=1e-3)

    def test_centered_on_origin(self):
        points = truncated_icosahedron_vertices(3.0)
        assert np.allclose(points.mean(axis=0), 0.0, atol=1e-12)

    @pytest.mark.parametrize("edge", [0.0, -1.0])
    def test_nonpositive_edge_rejected(self, edge):
        from polysphere import DomainError

        with pytest.raises(DomainError):
            truncated_icosahedron_vertices(edge)


class TestHullOracle:
    def test_unit_cube(self):
        corners = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
        volume, surface, circumradius = hull_metrics_oracle(corners)
        assert volume == pytest.approx(1.0, rel=1e-12)
        assert surface == pytest.approx(6.0, rel=1e-12)
        assert circumradius == pytest.approx(math.sqrt(3) / 2, rel=1e-12)

    def test_regular_tetrahedron(self):
        volume, _, _ = hull_metrics_oracle(unit_edge_vertices("tetrahedron"))
        assert volume == pytest.approx(1 / (6 * math.sqrt(2)), rel=1e-12)
        assert volume == pytest.approx(0.11785, abs=5e-6)

    def test_truncated_icosahedron_closed_forms(self):
        record = catalog_lookup("truncated-icosahedron")
        volume, surface, circumradius = hull_metrics_oracle(
            truncated_icosahedron_vertices(1.0)
        )
        assert volume == pytest.approx(TI_VOLUME, rel=1e-9)
        assert volume == pytest.approx(record.volume_coeff, rel=1e-9)
        assert surface == pytest.approx(record.surface_coeff, rel=1e-9)
        assert circumradius == pytest.approx(record.circumradius_coeff, rel=1e-9)
        # surface coefficient also equals the direct polygon sum
        polygon_sum = 12 * regular_polygon_area(PolygonSpec(5, 1.0)) + (
            20 * regular_polygon_area(PolygonSpec(6, 1.0))
        )
        assert record.surface_coeff == pytest.approx(polygon_sum, rel=1e-12)

    @pytest.mark.parametrize(
        "name", ["tetrahedron", "cube", "rhombicosidodecahedron"]
    )
    def test_catalog_coefficients_match_hull(self, name):
        record = catalog_lookup(name)
        volume, surface, circumradius = hull_metrics_oracle(unit_edge_vertices(name))
        assert volume == pytest.approx(record.volume_coeff, rel=1e-9)
        assert surface == pytest.approx(record.surface_coeff, rel=1e-9)
        assert circumradius == pytest.approx(record.circumradius_coeff, rel=1e-9)

    def test_too_few_points(self):
        with pytest.raises(GeometryError):
            hull_metrics_oracle([(0, 0, 0), (1, 0, 0), (0, 1, 0)])

    def test_coplanar_points(self):
        square = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
        with pytest.raises(GeometryError):
            hull_metrics_oracle(square)


class TestCoordinates:
    def test_unsupported_solid(self):
        with pytest.raises(CapabilityError):
            unit_edge_vertices("octahedron")

    @pytest.mark.parametrize(
        "name, count",
        [("tetrahedron", 4), ("cube", 8),
         ("truncated-icosahedron", 60), ("rhombicosidodecahedron", 60)],
    )
    def test_unit_edge_and_count(self, name, count):
        points = unit_edge_vertices(name)
        assert len(points) == count
        dist = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
        i, j = np.triu_indices(len(points), 1)
        shortest = dist[i, j].min()
        assert shortest == pytest.approx(1.0, rel=1e-12)
        # edge count matches the catalog record
        record = catalog_lookup(name)
        edges = int(np.sum(np.abs(dist[i, j] - shortest) < 1e-9))
        assert edges == record.edges_E
