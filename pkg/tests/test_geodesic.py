"""Shortest-path engine: goldens, oracle cross-checks, metric axioms."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import fixtures
from grid_oracle import grid_geodesic
from relmetric.domain import PlanarDomain, loop_from_points, polygon_domain
from relmetric.geodesic import (
    GeodesicPath,
    check_condition_i,
    check_h_structure,
    relative_boundary_distance,
    shortest_path,
    verify_metric_axioms,
)

# independent dense-grid value for the L-polygon bend query at spacing 1e-3
L_GRID_ORACLE = 1.4142135623731262


def test_square_interior_chord():
    sq = fixtures.square_domain()
    g = shortest_path(sq, (0.2, 0.2), (0.8, 0.8))
    assert abs(g.length - 0.6 * math.sqrt(2)) <= 1e-12
    assert g.vertices == ((0.2, 0.2), (0.8, 0.8))
    assert g.pieces[0][1] == "interior"


def test_identity_point():
    sq = fixtures.square_domain()
    g = shortest_path(sq, (0.3, 0.3), (0.3, 0.3))
    assert g.length == 0.0


def test_l_polygon_bend():
    L = fixtures.l_domain()
    g = shortest_path(L, (1.5, 0.5), (0.5, 1.5))
    assert abs(g.length - math.sqrt(2)) <= 1e-12
    assert (1.0, 1.0) in g.vertices
    assert abs(g.length - L_GRID_ORACLE) <= 2e-3
    assert check_h_structure(g, L)


def test_l_polygon_true_bend():
    L = fixtures.l_domain()
    g = shortest_path(L, (1.9, 0.5), (0.5, 1.9))
    want = math.hypot(0.9, 0.5) + math.hypot(0.5, 0.9)
    assert abs(g.length - want) <= 1e-12
    assert (1.0, 1.0) in g.vertices
    assert check_h_structure(g, L)


def test_point_outside_closure():
    sq = fixtures.square_domain()
    with pytest.raises(ValueError, match="outside closure"):
        shortest_path(sq, (2.0, 2.0), (0.5, 0.5))


def test_boundary_sliding_piece():
    U = polygon_domain(
        [(0, 0), (12, 0), (12, 10), (8, 10), (8, 4), (4, 4), (4, 10), (0, 10)]
    )
    g = shortest_path(U, (0.0, 8.0), (12.0, 8.0))
    want = 2 * 4 * math.sqrt(2) + 4
    assert abs(g.length - want) <= 1e-12
    locs = {tuple(sorted((a, b))): loc for (a, b), loc in g.pieces}
    assert locs[tuple(sorted(((4.0, 4.0), (8.0, 4.0))))] == "boundary"
    assert check_h_structure(g, U)


def test_grid_oracle_cross_checks():
    mini_l = [(0, 0), (0.1, 0), (0.1, 0.05), (0.05, 0.05), (0.05, 0.1),
              (0, 0.1)]
    mini_sq = [(0, 0), (0.1, 0), (0.1, 0.1), (0, 0.1)]
    channel = [(0, 0), (0.12, 0), (0.12, 0.1), (0.08, 0.1), (0.08, 0.04),
               (0.04, 0.04), (0.04, 0.1), (0, 0.1)]
    cases = [
        (mini_l, (0.075, 0.025), (0.025, 0.075)),
        (mini_sq, (0.03, 0.0), (0.1, 0.07)),
        (channel, (0.0, 0.08), (0.12, 0.08)),
    ]
    for poly, p, q in cases:
        dom = polygon_domain(poly)
        mine = shortest_path(dom, p, q).length
        ref = grid_geodesic(poly, p, q, 1e-3)
        assert abs(mine - ref) <= 2e-3


def test_metric_axioms_square():
    sq = fixtures.square_domain()
    rep = verify_metric_axioms(sq, 200, seed=3)
    assert rep.max_triangle_violation <= 1e-9
    assert rep.max_symmetry_violation <= 1e-9
    assert rep.max_identity_violation == 0.0


def test_metric_axioms_star_polygon():
    rng = random.Random(20)
    dom = polygon_domain(fixtures.random_star_polygon(rng, n=20))
    rep = verify_metric_axioms(dom, 120, seed=5)
    assert rep.max_triangle_violation <= 1e-9
    assert rep.max_identity_violation == 0.0


def test_h_structure_rejects_interior_kink():
    sq = fixtures.square_domain()
    bent = GeodesicPath(
        endpoints=((0.1, 0.1), (0.9, 0.1)),
        vertices=((0.1, 0.1), (0.5, 0.6), (0.9, 0.1)),
        length=2 * math.hypot(0.4, 0.5),
        pieces=(
            (((0.1, 0.1), (0.5, 0.6)), "interior"),
            (((0.5, 0.6), (0.9, 0.1)), "interior"),
        ),
    )
    assert not check_h_structure(bent, sq)


def test_h_structure_all_paths_random_polygons():
    rng = random.Random(77)
    for _ in range(12):
        dom = polygon_domain(fixtures.random_star_polygon(rng))
        for _ in range(6):
            from relmetric.geodesic import sample_boundary_point

            a = sample_boundary_point(dom, rng)
            b = sample_boundary_point(dom, rng)
            g = shortest_path(dom, a, b)
            assert check_h_structure(g, dom)


def test_domain_enlargement_monotone():
    big = fixtures.square_domain()
    small_pts = [(0, 0), (1, 0), (1, 0.5), (0.5, 0.5), (0.5, 1), (0, 1)]
    small = polygon_domain(small_pts)
    rng = random.Random(9)
    for _ in range(20):
        a = (rng.uniform(0, 0.45), rng.uniform(0, 0.45))
        b = (rng.uniform(0, 0.45), rng.uniform(0.05, 0.45))
        d_small = shortest_path(small, a, b).length
        d_big = shortest_path(big, a, b).length
        assert d_big <= d_small + 1e-12


def test_convex_polygon_chord_identity():
    rng = random.Random(15)
    for _ in range(15):
        dom = polygon_domain(fixtures.random_convex_polygon(rng))
        from relmetric.geodesic import sample_boundary_point

        for _ in range(12):
            a = sample_boundary_point(dom, rng)
            b = sample_boundary_point(dom, rng)
            d = shortest_path(dom, a, b).length
            assert abs(d - math.hypot(a[0] - b[0], a[1] - b[1])) <= 1e-9


def test_chordal_lower_bound_star():
    rng = random.Random(31)
    dom = polygon_domain(fixtures.random_star_polygon(rng, n=14))
    from relmetric.geodesic import sample_boundary_point

    for _ in range(40):
        a = sample_boundary_point(dom, rng)
        b = sample_boundary_point(dom, rng)
        d = shortest_path(dom, a, b).length
        assert d + 1e-12 >= math.hypot(a[0] - b[0], a[1] - b[1])


def test_halfplane_boundary_distance():
    hp = fixtures.halfplane_domain()
    assert abs(relative_boundary_distance(hp, (-2.0, 0.0), (2.0, 0.0)) - 4.0) \
        <= 1e-12


def test_complement_wraps_obstacle():
    obs = PlanarDomain(
        "complement",
        loops=[loop_from_points([(0, 0), (1, 0), (1, 1), (0, 1)])],
    )
    g = shortest_path(obs, (-1.0, 0.5), (2.0, 0.5))
    assert abs(g.length - (1 + math.sqrt(5))) <= 1e-12
    g2 = shortest_path(obs, (-1.0, 0.5), (2.0, 0.5))
    assert g2.vertices == g.vertices


def test_strip_slit_tip_wrap():
    st = fixtures.strip_complement_domain()
    g = shortest_path(st, (0.5, 2.0), (0.5, -2.0))
    want = math.sqrt(1.25) + math.sqrt(9.25)
    assert abs(g.length - want) <= 1e-12
    assert (0.0, 1.0) in g.vertices


def test_slit_blocks_straight_crossing():
    st = fixtures.strip_complement_domain()
    g = shortest_path(st, (0.5, 2.0), (0.5, -2.0))
    chord = 4.0
    assert g.length > chord + 0.1


def test_circle_convex_chord():
    c = fixtures.circle_domain()
    g = shortest_path(c, (1.0, 0.0), (-1.0, 0.0))
    assert abs(g.length - 2.0) <= 1e-12
    assert g.refinement_change == 0.0


def test_condition_i_square():
    sq = fixtures.square_domain()
    out = check_condition_i(sq, [(0.0, 0.0), (1.0, 1.0)], sample_count=16)
    assert all(row["finite"] for row in out)
    assert all(row["sup_distance"] <= math.sqrt(2) + 1e-9 for row in out)


def test_singular_vertex_truncation_protocol():
    sq = polygon_domain(
        [(0, 0), (1, 0), (1, 1), (0, 1)], singular_vertices=[(0, 0)]
    )
    d = relative_boundary_distance(sq, (0.0, 0.0), (1.0, 1.0))
    assert abs(d - math.sqrt(2)) <= 1e-6


def test_determinism_across_rebuilds():
    runs = []
    for _ in range(2):
        L = polygon_domain([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
        g = shortest_path(L, (1.5, 0.5), (0.5, 1.5))
        runs.append((g.length, g.vertices))
    assert runs[0] == runs[1]


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_convex_identity_property(seed):
    rng = random.Random(seed)
    dom = polygon_domain(fixtures.random_convex_polygon(rng, max_vertices=8))
    from relmetric.geodesic import sample_boundary_point

    a = sample_boundary_point(dom, rng)
    b = sample_boundary_point(dom, rng)
    d = shortest_path(dom, a, b).length
    assert abs(d - math.hypot(a[0] - b[0], a[1] - b[1])) <= 1e-9
