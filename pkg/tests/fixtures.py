"""Shared fixture builders used across the test modules."""

import json
import math
import random

from relmetric.domain import (
    HalfPlane,
    Loop,
    PlanarDomain,
    Slit,
    loop_from_points,
    polygon_domain,
)
from relmetric.geom import Arc2, Segment2

SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
L_POLY = [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
DART = [(0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (2.0, 2.0), (0.0, 4.0)]


def square_domain():
    return polygon_domain(SQUARE)


def l_domain():
    return polygon_domain(L_POLY)


def dart_domain():
    return polygon_domain(DART)


def square_doc():
    return {
        "kind": "bounded",
        "loops": [
            {
                "edges": [
                    {"type": "seg", "a": [0, 0], "b": [1, 0]},
                    {"type": "seg", "a": [1, 0], "b": [1, 1]},
                    {"type": "seg", "a": [1, 1], "b": [0, 1]},
                    {"type": "seg", "a": [0, 1], "b": [0, 0]},
                ]
            }
        ],
    }


def square_json():
    return json.dumps(square_doc())


def circle_domain(r=1.0, center=(0.0, 0.0)):
    loop = Loop((Arc2(center, r, 0.0, 2.0 * math.pi, ccw=True),))
    return PlanarDomain("bounded", [loop])


def halfplane_domain():
    # the open lower half-plane y < 0
    return PlanarDomain("clipped", halfplanes=[HalfPlane((0.0, 1.0), 0.0)])


def quadrant_domain():
    # x > 0, y > 0
    return PlanarDomain(
        "clipped",
        halfplanes=[HalfPlane((-1.0, 0.0), 0.0), HalfPlane((0.0, -1.0), 0.0)],
    )


def segment_complement_domain():
    return PlanarDomain("complement", slits=[Slit(((0.0, 0.0), (1.0, 0.0)))])


def point_complement_domain():
    return PlanarDomain("complement", slits=[Slit(((0.0, 0.0),))])


def strip_complement_domain():
    """Plane minus two antiparallel horizontal rays; conv(boundary) is the
    closed slab |y| <= 1, so the hull-exterior part of the domain is the two
    open half-planes beyond it."""
    top = Slit(((0.0, 1.0), (1.0, 1.0)), ray_end=(1.0, 0.0))
    bottom = Slit(((0.0, -1.0), (-1.0, -1.0)), ray_end=(-1.0, 0.0))
    return PlanarDomain("complement", slits=[top, bottom])


H_POLY = [
    (0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (2.0, 1.0), (2.0, 0.0), (3.0, 0.0),
    (3.0, 3.0), (2.0, 3.0), (2.0, 2.0), (1.0, 2.0), (1.0, 3.0), (0.0, 3.0),
]


def square_complement_domain():
    return PlanarDomain("complement", [loop_from_points(SQUARE)])


def h_complement_domain():
    """Plane minus an H-shaped obstacle; the hull of the boundary is the
    square [0,3]^2 and the two notches of the H are bounded pockets."""
    return PlanarDomain("complement", [loop_from_points(H_POLY)])


def tent_complement_domain(apex_x=1.8, base=(1.0, 3.0), h=1.5):
    """Lower half-plane joined to a triangular pocket through an opening
    on the x-axis; the obstacle is the closed upper half-plane minus the
    tent over ]base[.  The hull of the boundary is the slab 0 <= y <= h,
    so the hull exterior is the lower half-plane and the tent interior is
    the single bounded pocket."""
    a, b = base
    lp = loop_from_points(
        [(a, 0.0), (float(apex_x), float(h)), (b, 0.0)],
        ray_start=(-1.0, 0.0),
        ray_end=(1.0, 0.0),
    )
    return PlanarDomain("complement", [lp])


def random_convex_polygon(rng: random.Random, max_vertices=40, scale=1.0):
    """Convex polygon as the hull of random points, at least a triangle."""
    from relmetric.geom import convex_hull

    while True:
        n = rng.randint(6, max_vertices + 10)
        pts = [(rng.uniform(-scale, scale), rng.uniform(-scale, scale)) for _ in range(n)]
        hull = convex_hull(pts)
        if 3 <= len(hull) <= max_vertices:
            return hull


def random_star_polygon(rng: random.Random, n=None, scale=1.0):
    """Simple (star-shaped) polygon: sorted random angles, random radii."""
    if n is None:
        n = rng.randint(5, 20)
    # gaps bounded away from 0 and (after normalisation) below pi, so every
    # edge stays inside its own angular wedge and the polygon is simple
    gaps = [rng.uniform(0.5, 1.0) for _ in range(n)]
    total = sum(gaps)
    angles = []
    acc = rng.uniform(0, 2 * math.pi)
    for g in gaps:
        angles.append(acc)
        acc += 2 * math.pi * g / total
    pts = []
    for a in angles:
        r = rng.uniform(0.35, 1.0) * scale
        pts.append((r * math.cos(a), r * math.sin(a)))
    return pts
