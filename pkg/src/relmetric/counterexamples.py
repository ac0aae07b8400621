"""Explicit domains with prescribed boundary-metric behaviour.

Four constructions: a comb whose teeth accumulate at one boundary point
so that distances to that point grow without bound under truncation
refinement; a wedge packed with radial barrier segments that force every
through-path to be long; a half-plane bent along a quarter circle whose
boundary arclengths match the flat half-plane exactly piece by piece; and
a closed solid of revolution whose profile splices a cardioid into a
tangent circular cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .domain import (
    Loop,
    PlanarDomain,
    Slit,
    boundary_point_at,
    loop_from_points,
    polygon_domain,
)
from .geodesic import GeodesicPath, relative_boundary_distance, shortest_path
from .geom import Arc2, Segment2, Tolerance
from .rigidity import BoundaryCorrespondence, PiecePair

__all__ = [
    "CombDomain",
    "DivergenceProbe",
    "comb_tooth",
    "gen_comb",
    "comb_divergence_probe",
    "RadialBarrier",
    "ObstacleTriangle",
    "gen_obstacle_triangle",
    "shortest_avoiding_path",
    "BendPair",
    "gen_bend_pair",
    "CardioidSolid",
    "gen_cardioid_solid",
]


# -- comb -------------------------------------------------------------------

COMB_TARGET = (1.0, 2.0)

_F0 = Fraction(0)
_F1 = Fraction(1)
_F2 = Fraction(2)


def comb_tooth(family: int, n: int):
    """Exact endpoints of the n-th tooth segment of one of the four rows.

    Family 1 slants from (1/n, 1/n) down to (1/(n+1), 0); family 2 drops
    vertically from (1/n, 1/n) to the x-axis (n >= 2); families 3 and 4
    are the outer and inner flanks of the upper teeth, meeting at the
    shared tip (4/(4n+3), 2/(4n+3)).
    """
    if n < 1 or (family == 2 and n < 2):
        raise ValueError("tooth index out of range for family %d" % family)
    if family == 1:
        return (
            (Fraction(1, n), Fraction(1, n)),
            (Fraction(1, n + 1), _F0),
        )
    if family == 2:
        return (
            (Fraction(1, n), Fraction(1, n)),
            (Fraction(1, n), _F0),
        )
    tip = (Fraction(4, 4 * n + 3), Fraction(2, 4 * n + 3))
    if family == 3:
        return ((Fraction(1, n), Fraction(2, n)), tip)
    if family == 4:
        return ((Fraction(1, n + 1), Fraction(2, n + 1)), tip)
    raise ValueError("family must be 1, 2, 3 or 4")


@dataclass(frozen=True)
class CombDomain:
    """Bounded comb truncated at tooth index n.

    vertices holds the exact rational boundary cycle, counterclockwise
    starting at the tip (0, 0); domain is its floating realization with
    the tip declared singular.
    """

    n: int
    domain: PlanarDomain
    vertices: tuple


def gen_comb(n: int) -> CombDomain:
    """Comb with teeth accumulating at the tip (0, 0).

    The boundary runs from the tip along the x-axis, climbs the lower
    tooth rows out to (1, 1), rises to (1, 2), and returns through the
    upper tooth rows to close along the line y = 2x.  Walking in toward
    the tip crosses one tooth per index, so the relative metric from deep
    boundary points to the far side grows with n.
    """
    if n < 1:
        raise ValueError("comb depth must be at least 1")
    lower = [(_F1, _F1)]
    for m in range(1, n + 1):
        lower.append((Fraction(1, m + 1), _F0))
        if m < n:
            lower.append((Fraction(1, m + 1), Fraction(1, m + 1)))
    upper = [(_F1, _F2)]
    for m in range(1, n + 1):
        upper.append((Fraction(4, 4 * m + 3), Fraction(2, 4 * m + 3)))
        upper.append((Fraction(1, m + 1), Fraction(2, m + 1)))
    cycle = [(_F0, _F0)] + lower[::-1] + upper
    pts = [(float(x), float(y)) for x, y in cycle]
    dom = polygon_domain(pts, singular_vertices=((0.0, 0.0),))
    return CombDomain(n=n, domain=dom, vertices=tuple(cycle))


def convexified_comb() -> PlanarDomain:
    """Convex hull of the comb: the teeth collapse into the hull edges.

    Independent of the truncation depth; distances from deep boundary
    points to the far corner converge here instead of diverging.
    """
    return polygon_domain([(0.0, 0.0), (0.5, 0.0), (1.0, 1.0), (1.0, 2.0)])


@dataclass(frozen=True)
class DivergenceProbe:
    """Distances from near-tip boundary points to the far corner (1, 2)."""

    depths: tuple
    distances: tuple
    differences: tuple


def comb_divergence_probe(n_range, convexified: bool = False) -> DivergenceProbe:
    """Distance from the boundary point at arclength 2^-n past the tip
    to the corner (1, 2), per depth n.

    On the comb the sequence increases without bound; on the convexified
    domain the same probe converges to the straight chord length.
    """
    hull = convexified_comb() if convexified else None
    depths = []
    dists = []
    for n in n_range:
        n = int(n)
        dom = hull if convexified else gen_comb(n).domain
        start = boundary_point_at(dom, "loop0", 2.0 ** -n)
        depths.append(n)
        dists.append(relative_boundary_distance(dom, start.xy, COMB_TARGET))
    diffs = tuple(b - a for a, b in zip(dists, dists[1:]))
    return DivergenceProbe(tuple(depths), tuple(dists), diffs)


# -- barred wedge -----------------------------------------------------------

WEDGE_ANGLE = math.pi / 6.0


@dataclass(frozen=True)
class RadialBarrier:
    """Barrier segment on the ray at ``angle``, radial extent [r_in, r_out]."""

    level: int
    index: int
    angle: float
    r_in: float
    r_out: float

    @property
    def inner(self):
        return (self.r_in * math.cos(self.angle), self.r_in * math.sin(self.angle))

    @property
    def outer(self):
        return (self.r_out * math.cos(self.angle), self.r_out * math.sin(self.angle))


@dataclass(frozen=True)
class ObstacleTriangle:
    """Wedge probe points A, D at unit radius with radial barriers between.

    Level j contributes floor((2 pi)^j) barriers at angles k (2 pi)^-j
    times the wedge angle, radial extent [2^-j, 11 * 2^-j]; successive
    levels interleave densely toward the corner O.
    """

    A: tuple
    O: tuple
    D: tuple
    J: int
    segments: tuple

    def level_segments(self, j: int):
        return tuple(s for s in self.segments if s.level == j)


def barrier_count(j: int) -> int:
    return int((2.0 * math.pi) ** j)


def gen_obstacle_triangle(J: int) -> ObstacleTriangle:
    """Barrier scene of depth J inside the pi/6 wedge.

    All barriers lie on distinct rays from the corner, strictly inside the
    wedge scaled by 6, so they are pairwise disjoint by construction; both
    properties are re-verified here.  Scene generation is cheap for
    J <= 5; shortest-path queries stay practical for J <= 3.
    """
    if not 0 <= J <= 5:
        raise ValueError("barrier depth must lie in 0..5")
    segs = []
    for j in range(1, J + 1):
        step = WEDGE_ANGLE * (2.0 * math.pi) ** (-j)
        for k in range(1, barrier_count(j) + 1):
            segs.append(
                RadialBarrier(
                    level=j,
                    index=k,
                    angle=k * step,
                    r_in=2.0 ** -j,
                    r_out=11.0 * 2.0 ** -j,
                )
            )
    scene = ObstacleTriangle(
        A=(1.0, 0.0),
        O=(0.0, 0.0),
        D=(math.cos(WEDGE_ANGLE), math.sin(WEDGE_ANGLE)),
        J=J,
        segments=tuple(segs),
    )
    _verify_barriers(scene)
    return scene


def _verify_barriers(scene: ObstacleTriangle):
    """Pairwise disjointness and containment in the 6-scaled wedge.

    Radial segments with positive inner radius meet only if they share a
    ray, so sorting by angle makes the pairwise test exhaustive.
    """
    if not scene.segments:
        return
    order = sorted(scene.segments, key=lambda s: s.angle)
    for a, b in zip(order, order[1:]):
        if a.angle == b.angle and a.r_in <= b.r_out and b.r_in <= a.r_out:
            raise AssertionError(
                "barriers (%d,%d) and (%d,%d) overlap"
                % (a.level, a.index, b.level, b.index)
            )
    # the far side of the 6-scaled wedge is nearest at the bisector
    rim = 6.0 * math.cos(WEDGE_ANGLE / 2.0)
    for s in scene.segments:
        if not (0.0 < s.angle < WEDGE_ANGLE and s.r_out < rim):
            raise AssertionError(
                "barrier (%d,%d) leaves the 6-scaled wedge" % (s.level, s.index)
            )


def _wedge_rim_radius(angle: float) -> float:
    """Distance from the corner to the chord [4A, 4D] along ``angle``."""
    half = WEDGE_ANGLE / 2.0
    return 4.0 * math.cos(half) / math.cos(angle - half)


def avoiding_region(scene: ObstacleTriangle, r: float) -> PlanarDomain:
    """The wedge scaled by 4, minus an inscribed 256-gon disk of radius r
    about the corner, with the barrier segments as slits.

    A barrier reaching past a region boundary is kept slightly beyond it
    (overhang 1e-6 relative) rather than trimmed short: the domain is then
    exactly the region minus the full segments, walls touching the
    boundary seal against it, and the regions nest as r or the scene depth
    grows.  The overhanging endpoints lie in dead space, so the only
    validation findings are their out-of-region reports, which are checked
    for and discarded here.
    """
    if r <= 0.0:
        raise ValueError("exclusion radius must be positive")
    if r >= 1.0:
        raise ValueError("exclusion disk covers the probe points")
    u = (math.cos(WEDGE_ANGLE), math.sin(WEDGE_ANGLE))
    outer = [(r, 0.0), (4.0, 0.0), (4.0 * u[0], 4.0 * u[1])]
    step = 2.0 * math.pi / 256.0
    i_top = int(WEDGE_ANGLE / step)
    outer.append((r * u[0], r * u[1]))
    for i in range(i_top, 0, -1):
        a = i * step
        outer.append((r * math.cos(a), r * math.sin(a)))
    # chords of the inscribed gon dip to r cos(pi/256); ends placed below
    # that radius are inside the excluded sector for every angle
    seal_in = r * (math.cos(math.pi / 256.0) - 1e-6)
    slits = []
    overhanging = set()
    for seg in scene.segments:
        lo, hi = seg.r_in, seg.r_out
        rim = _wedge_rim_radius(seg.angle)
        if hi <= seal_in:
            continue
        if lo < r:
            lo = seal_in
            overhanging.add(len(slits))
        if hi > rim:
            hi = rim * (1.0 + 1e-6)
            overhanging.add(len(slits))
        c, s = math.cos(seg.angle), math.sin(seg.angle)
        slits.append(Slit(((lo * c, lo * s), (hi * c, hi * s))))
    dom = PlanarDomain(
        "bounded",
        [loop_from_points(outer)],
        slits,
        validate=False,
    )
    allowed = {"slit%d outside outer loop" % i for i in overhanging}
    stray = [p for p in dom.validate() if p not in allowed]
    if stray:
        raise AssertionError("avoiding region invalid: %s" % ", ".join(stray))
    return dom


def shortest_avoiding_path(scene: ObstacleTriangle, r: float) -> GeodesicPath:
    """Exact shortest path from A to D through the barred wedge region."""
    dom = avoiding_region(scene, r)
    return shortest_path(dom, scene.A, scene.D)


# -- bend pair --------------------------------------------------------------

@dataclass(frozen=True)
class BendPair:
    """Half-plane U against its bent copy V with matching boundary lengths.

    The correspondence is arclength-identity on the single boundary chain:
    piece [0, l] of U (left straight part) maps rigidly onto a vertical
    segment of V, piece [l, 2l] onto the quarter circle, and [2l, 4l] is
    fixed pointwise, so every boundary subarc keeps its exact length while
    the two domains are not related by any rigid motion.
    """

    l: float
    U: PlanarDomain
    V: PlanarDomain
    correspondence: BoundaryCorrespondence


def gen_bend_pair(l: float) -> BendPair:
    """Bend the lower half-plane along a quarter circle of arclength l.

    U is the half-plane below the x-axis with chain vertices A = (-2l, 0)
    and B = (2l, 0).  V replaces the middle boundary piece [-l, 0] x {0}
    by the quarter circle of radius 2l/pi about (0, 2l/pi), keeps the
    boundary right of (0, 0) fixed, and carries the part left of (-l, 0)
    rigidly onto the vertical ray above P = (-2l/pi, 2l/pi).  The quarter
    circle has length exactly l, so chain arclength is preserved.

    Arcs are flattened at sagitta 2e-6; a geodesic hugging the bend then
    loses at most eps_flat/(3R) per unit length, a few 1e-7 over any
    epsilon-local pair, while the visibility graph stays small enough for
    interactive queries.
    """
    if l <= 0.0:
        raise ValueError("bend scale must be positive")
    tol = Tolerance(eps_flat=2e-6)
    R = 2.0 * l / math.pi
    A = (-2.0 * l, 0.0)
    B = (2.0 * l, 0.0)
    U = PlanarDomain(
        "complement",
        [loop_from_points([A, B], ray_start=(-1.0, 0.0), ray_end=(1.0, 0.0))],
        tolerance=tol,
    )
    P = (-R, R)
    A_img = (-R, R + l)
    chain = Loop(
        (
            Segment2(A_img, P),
            Arc2(center=(0.0, R), r=R, a0=math.pi, a1=1.5 * math.pi),
            Segment2((0.0, 0.0), B),
        ),
        ray_start=(0.0, 1.0),
        ray_end=(1.0, 0.0),
    )
    V = PlanarDomain("complement", [chain], tolerance=tol)
    corr = BoundaryCorrespondence(pairs=(PiecePair("loop0", "loop0"),))
    return BendPair(l=float(l), U=U, V=V, correspondence=corr)


# -- cardioid solid ---------------------------------------------------------

SPLICE_X = math.sqrt(5.0) / 9.0
SPLICE_Z = 2.0 / 9.0
CAP_RADIUS_SQ = 2.0 / 3.0


def cardioid_point(t: float):
    """Profile point of the cardioid r = 1 - sin t about the origin."""
    r = 1.0 - math.sin(t)
    return (r * math.cos(t), r * math.sin(t))


def cap_height(x: float) -> float:
    """Height of the circular cap z = 1 - sqrt(2/3 - x^2)."""
    return 1.0 - math.sqrt(CAP_RADIUS_SQ - x * x)


@dataclass(frozen=True, eq=False)
class CardioidSolid:
    """Closed solid of revolution: cardioid wall, tangent spherical cap.

    profile lists (x, z) rows from the bottom pole (0, -2) to the top
    pole, x >= 0; vertices/faces triangulate the revolution about Oz at m
    angular slots with exact pole vertices.
    """

    m: int
    profile: tuple
    vertices: np.ndarray
    faces: np.ndarray


def _cardioid_profile(m: int):
    t_top = math.asin(2.0 / 3.0)
    n_card = 6 * m
    rows = [(0.0, -2.0)]
    for i in range(1, n_card):
        t = -0.5 * math.pi + (t_top + 0.5 * math.pi) * i / n_card
        rows.append(cardioid_point(t))
    rows.append((SPLICE_X, SPLICE_Z))
    n_cap = max(8, m)
    for i in range(1, n_cap):
        x = SPLICE_X * (1.0 - i / n_cap)
        rows.append((x, cap_height(x)))
    rows.append((0.0, cap_height(0.0)))
    return rows


def gen_cardioid_solid(m: int) -> CardioidSolid:
    """Triangulated surface of revolution of the spliced profile.

    The cardioid runs from the bottom pole up to the splice circle
    x^2 + z^2 = 1/9; there the profile continues along the circular cap
    about (0, 1), which meets the cardioid with matching tangent slope
    sqrt(5)/7, closing the cusp smoothly.
    """
    if m < 16:
        raise ValueError("angular resolution too small; need m >= 16")
    t_top = math.asin(2.0 / 3.0)
    cx, cz = cardioid_point(t_top)
    if abs(cx - SPLICE_X) > 1e-12 or abs(cz - SPLICE_Z) > 1e-12:
        raise AssertionError("cardioid end misses the splice point")
    if abs(cap_height(SPLICE_X) - SPLICE_Z) > 1e-12:
        raise AssertionError("cap start misses the splice point")
    slope = math.sqrt(5.0) / 7.0
    cap_slope = SPLICE_X / math.sqrt(CAP_RADIUS_SQ - SPLICE_X**2)
    if abs(cap_slope - slope) > 1e-12:
        raise AssertionError("cap is not tangent at the splice")

    prof = _cardioid_profile(m)
    interior = prof[1:-1]
    P = len(interior)
    verts = [(0.0, 0.0, prof[0][1])]
    for x, z in interior:
        for k in range(m):
            a = 2.0 * math.pi * k / m
            verts.append((x * math.cos(a), x * math.sin(a), z))
    verts.append((0.0, 0.0, prof[-1][1]))
    top = len(verts) - 1

    def vid(i, k):
        return 1 + i * m + (k % m)

    faces = []
    for k in range(m):
        faces.append((0, vid(0, k + 1), vid(0, k)))
    for i in range(P - 1):
        for k in range(m):
            a, b = vid(i, k), vid(i, k + 1)
            c, d = vid(i + 1, k + 1), vid(i + 1, k)
            faces.append((a, b, c))
            faces.append((a, c, d))
    for k in range(m):
        faces.append((top, vid(P - 1, k), vid(P - 1, k + 1)))
    return CardioidSolid(
        m=m,
        profile=tuple(prof),
        vertices=np.asarray(verts, dtype=float),
        faces=np.asarray(faces, dtype=np.int64),
    )
