"""Boundary intervals, angles, gamma sets, and hull decomposition."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st
from shapely.geometry import Point as ShapelyPoint, Polygon

import fixtures
import raster_oracle
from relmetric.domain import INSIDE, polygon_domain
from relmetric.structures import (
    BoundaryInterval,
    boundary_candidate_points,
    decompose_Fu,
    detect_boundary_angle,
    enumerate_boundary_intervals,
    gamma_set,
    interval_equivalence_classes,
    is_boundary_interval,
)

HEX = [
    (2.0 * math.cos(i * math.pi / 3.0), 2.0 * math.sin(i * math.pi / 3.0))
    for i in range(6)
]


def regular_polygon(n, r=1.0):
    return [
        (r * math.cos(2.0 * math.pi * i / n), r * math.sin(2.0 * math.pi * i / n))
        for i in range(n)
    ]


# ------------------------------------------------------------- intervals


def test_l_polygon_chord_verdicts():
    L = fixtures.l_domain()
    # (2,1)-(1,2) passes through (1.5,1.5), outside the L
    assert not is_boundary_interval(L, (2.0, 1.0), (1.0, 2.0))
    assert not raster_oracle.open_chord_inside_polygon(
        fixtures.L_POLY, (2.0, 1.0), (1.0, 2.0)
    )
    # (2,0)-(0,2) exits through the notch corner
    assert not is_boundary_interval(L, (2.0, 0.0), (0.0, 2.0))
    assert not raster_oracle.open_chord_inside_polygon(
        fixtures.L_POLY, (2.0, 0.0), (0.0, 2.0)
    )


def test_square_diagonal_is_interval():
    sq = fixtures.square_domain()
    assert is_boundary_interval(sq, (0.0, 0.0), (1.0, 1.0))


def test_interval_endpoints_must_differ():
    sq = fixtures.square_domain()
    with pytest.raises(ValueError):
        is_boundary_interval(sq, (0.0, 0.0), (0.0, 0.0))


def test_off_boundary_endpoint_rejected():
    sq = fixtures.square_domain()
    assert not is_boundary_interval(sq, (0.5, 0.5), (1.0, 1.0))


def test_l_polygon_all_vertex_pairs_match_sampled_oracle():
    L = fixtures.l_domain()
    verts = fixtures.L_POLY
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            got = is_boundary_interval(L, verts[i], verts[j])
            want = raster_oracle.open_chord_inside_polygon(
                fixtures.L_POLY, verts[i], verts[j]
            )
            assert got == want, (verts[i], verts[j])


def test_square_enumeration_is_the_two_diagonals():
    sq = fixtures.square_domain()
    ivs = enumerate_boundary_intervals(sq, among="vertices")
    chords = {frozenset((iv.x, iv.y)) for iv in ivs}
    assert chords == {
        frozenset(((0.0, 0.0), (1.0, 1.0))),
        frozenset(((1.0, 0.0), (0.0, 1.0))),
    }
    assert all(iv.maximal for iv in ivs)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_convex_ngon_diagonal_count(n):
    dom = polygon_domain(regular_polygon(n))
    ivs = enumerate_boundary_intervals(dom, among="vertices")
    assert len(ivs) == n * (n - 3) // 2


def test_l_enumeration_matches_pairwise_check():
    L = fixtures.l_domain()
    ivs = enumerate_boundary_intervals(L, among="vertices")
    got = {frozenset((iv.x, iv.y)) for iv in ivs}
    verts = fixtures.L_POLY
    want = {
        frozenset((verts[i], verts[j]))
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if is_boundary_interval(L, verts[i], verts[j])
    }
    assert got == want
    assert all(is_boundary_interval(L, iv.x, iv.y) for iv in ivs)


def test_edge_samples_extend_candidate_set():
    sq = fixtures.square_domain()
    cand = boundary_candidate_points(sq, among="vertices+samples", k=3)
    assert len(cand) == 4 + 4 * 3
    ivs = enumerate_boundary_intervals(sq, among="vertices+samples", k=3)
    # sample-to-sample chords across the interior are intervals too
    assert len(ivs) > 2
    assert all(is_boundary_interval(sq, iv.x, iv.y) for iv in ivs)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_enumerated_intervals_self_consistent(seed):
    rng = random.Random(seed)
    poly = fixtures.random_star_polygon(rng, n=rng.randint(5, 9))
    dom = polygon_domain(poly)
    ivs = enumerate_boundary_intervals(dom, among="vertices")
    for iv in ivs:
        assert is_boundary_interval(dom, iv.x, iv.y)


# ---------------------------------------------------------------- angles


def test_angle_rejects_edge_legs():
    sq = fixtures.square_domain()
    assert detect_boundary_angle(sq, (1.0, 0.0), (0.0, 0.0), (0.0, 1.0)) is None


def test_angle_rejects_single_boundary_leg():
    sq = fixtures.square_domain()
    # ]y,x[ is an interior chord but ]y,z[ runs along the top edge
    assert detect_boundary_angle(sq, (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)) is None


def test_angle_rejects_collinear_triple():
    sq = fixtures.square_domain()
    assert detect_boundary_angle(sq, (0.0, 0.0), (0.5, 0.5), (1.0, 1.0)) is None


def test_dart_notch_angle():
    dart = fixtures.dart_domain()
    ang = detect_boundary_angle(dart, (0.0, 0.0), (2.0, 2.0), (4.0, 0.0))
    assert ang is not None
    assert ang.radius_witness > 0.0
    # clearance oracle: wedge ball samples must sit inside the pentagon
    rng = random.Random(7)
    for _ in range(500):
        a = rng.uniform(math.radians(226.0), math.radians(314.0))
        f = rng.uniform(1e-3, 1.0)
        p = (
            2.0 + f * ang.radius_witness * math.cos(a),
            2.0 + f * ang.radius_witness * math.sin(a),
        )
        assert raster_oracle.point_strictly_inside(fixtures.DART, p)


def test_dart_angle_radius_capped_by_clearance():
    dart = fixtures.dart_domain()
    ang = detect_boundary_angle(dart, (0.0, 0.0), (2.0, 2.0), (4.0, 0.0))
    # nearest non-incident boundary piece (the bottom edge) is 2 away
    assert ang.radius_witness <= 2.0


# ----------------------------------------------------------------- gamma


def test_gamma_dart_contains_both_legs():
    dart = fixtures.dart_domain()
    ang = detect_boundary_angle(dart, (0.0, 0.0), (2.0, 2.0), (4.0, 0.0))
    gs = gamma_set(dart, ang, fixtures.DART)
    assert (0.0, 0.0) in gs.members
    assert (4.0, 0.0) in gs.members


def test_gamma_empty_wedge_is_leg_pair():
    dart = fixtures.dart_domain()
    ang = detect_boundary_angle(dart, (0.0, 0.0), (2.0, 2.0), (4.0, 0.0))
    gs = gamma_set(dart, ang, [(0.0, 0.0), (2.0, 2.0), (4.0, 0.0)])
    assert set(gs.members) == {(0.0, 0.0), (4.0, 0.0)}


def test_gamma_hexagon_exactly_leg_endpoints():
    dom = polygon_domain(HEX)
    x, y, z = HEX[2], HEX[0], HEX[4]
    ang = detect_boundary_angle(dom, x, y, z)
    assert ang is not None
    gs = gamma_set(dom, ang, HEX)
    assert set(gs.members) == {x, z}
    # the opposite vertex sits in the wedge but its chord crosses the hull
    assert HEX[3] not in gs.members


def test_gamma_chords_avoid_hull_body():
    dom = polygon_domain(HEX)
    x, y, z = HEX[2], HEX[0], HEX[4]
    gs = gamma_set(dom, detect_boundary_angle(dom, x, y, z), HEX)
    body = Polygon(gs.hull) if len(gs.hull) >= 3 else None
    for w in gs.members:
        for i in range(1, 201):
            t = i / 201.0
            p = (y[0] + t * (w[0] - y[0]), y[1] + t * (w[1] - y[1]))
            assert dom.locate(p) == INSIDE
            if body is not None:
                assert not body.contains(ShapelyPoint(p))


def test_gamma_requires_angle():
    dart = fixtures.dart_domain()
    with pytest.raises(ValueError):
        gamma_set(dart, None, fixtures.DART)


# --------------------------------------------------------- decomposition


def test_bounded_domains_have_empty_hull_exterior():
    for dom in (
        fixtures.square_domain(),
        fixtures.l_domain(),
        fixtures.dart_domain(),
    ):
        fu = decompose_Fu(dom)
        assert fu.f_components == 0
        assert fu.boundary_f_components == 0
        assert not fu.f_unbounded
    fu = decompose_Fu(fixtures.square_domain())
    assert len(fu.u_components) == 1


def test_square_complement_decomposition():
    dom = fixtures.square_complement_domain()
    fu = decompose_Fu(dom)
    assert set(fu.hull) == set(fixtures.SQUARE)
    assert fu.f_components == 1
    assert fu.f_unbounded
    assert fu.boundary_f_components == 1
    assert fu.u_components == ()

    def inside(X, Y):
        return ~(
            (X >= 0.0) & (X <= 1.0) & (Y >= 0.0) & (Y <= 1.0)
        )

    counts = raster_oracle.fu_counts(
        inside, fixtures.SQUARE, (-2.0, 3.0, -2.0, 3.0)
    )
    assert counts["f_components"] == fu.f_components
    assert counts["f_unbounded"] == fu.f_unbounded
    assert counts["u_components"] == len(fu.u_components)


def test_h_complement_has_two_pockets():
    dom = fixtures.h_complement_domain()
    fu = decompose_Fu(dom)
    assert fu.f_components == 1
    assert fu.f_unbounded
    assert fu.boundary_f_components == 1
    assert len(fu.u_components) == 2
    areas = sorted(
        abs(
            sum(
                p[i][0] * p[(i + 1) % len(p)][1]
                - p[(i + 1) % len(p)][0] * p[i][1]
                for i in range(len(p))
            )
        )
        / 2.0
        for p in fu.u_components
    )
    assert areas == pytest.approx([1.0, 1.0])

    def inside(X, Y):
        return ~raster_oracle.poly_mask(X, Y, fixtures.H_POLY)

    counts = raster_oracle.fu_counts(
        inside, fixtures.H_POLY, (-1.0, 4.0, -1.0, 4.0)
    )
    assert counts["u_components"] == 2
    assert counts["f_components"] == 1
    assert counts["f_unbounded"]


def test_strip_complement_boundary_splits_in_two():
    dom = fixtures.strip_complement_domain()
    fu = decompose_Fu(dom)
    assert fu.f_components == 2
    assert fu.f_unbounded
    assert fu.boundary_f_components == 2
    assert fu.u_components == ()


def test_convex_obstacle_boundary_single_component():
    rng = random.Random(3)
    for _ in range(5):
        poly = fixtures.random_convex_polygon(rng, max_vertices=10)
        dom = polygon_domain(poly)
        fu_b = decompose_Fu(dom)
        assert fu_b.f_components == 0 and fu_b.boundary_f_components == 0
        from relmetric.domain import PlanarDomain, loop_from_points

        comp = PlanarDomain("complement", [loop_from_points(poly)])
        fu = decompose_Fu(comp)
        assert fu.f_components == 1
        assert fu.f_unbounded
        assert fu.boundary_f_components == 1
        assert fu.u_components == ()


# ------------------------------------------------------- interval chains


def test_h_pocket_intervals_group_by_pocket():
    dom = fixtures.h_complement_domain()
    ivs = [
        BoundaryInterval((1.0, 0.5), (2.0, 0.5)),
        BoundaryInterval((1.0, 0.25), (2.0, 0.75)),
        BoundaryInterval((1.0, 2.5), (2.0, 2.5)),
        BoundaryInterval((1.0, 2.75), (2.0, 2.25)),
    ]
    for iv in ivs:
        assert is_boundary_interval(dom, iv.x, iv.y)
    classes = interval_equivalence_classes(dom, ivs)
    assert classes == [{0, 1}, {2, 3}]
    # chain classes line up with pocket membership of the decomposition
    fu = decompose_Fu(dom)
    pockets = [Polygon(p) for p in fu.u_components]

    def pocket_of(iv):
        mid = ShapelyPoint(iv.point_at(0.5))
        for i, p in enumerate(pockets):
            if p.buffer(1e-9).contains(mid):
                return i
        return None

    for cls in classes:
        homes = {pocket_of(ivs[i]) for i in cls}
        assert len(homes) == 1 and None not in homes
    assert pocket_of(ivs[0]) != pocket_of(ivs[2])
