"""Low-level planar primitives shared by every other module.

Points are plain ``(x, y)`` float tuples.  Orientation tests are exact:
a floating-point filter decides the generic case and a rational fallback
settles the near-degenerate one, so downstream classifiers never flip on
1-ulp noise.  Everything here is a pure function or an immutable value,
safe to use from any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "INSIDE",
    "BOUNDARY",
    "OUTSIDE",
    "Tolerance",
    "RigidMotion2",
    "Segment2",
    "Arc2",
    "orientation",
    "collinear_within",
    "point_line_distance",
    "convex_hull",
    "dist",
    "on_segment",
    "segments_cross",
    "segment_intersection_params",
    "point_in_polygon",
    "signed_area",
    "polygon_is_ccw",
    "polygon_is_convex",
]

INSIDE = 1
BOUNDARY = 0
OUTSIDE = -1

# Shewchuk's ccwerrboundA for the 2x2 determinant filter.
_ORIENT_ERR = 3.3306690738754716e-16

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Tolerance:
    """Tolerance ladder used across the package.

    eps_geom bounds predicate slack, eps_flat the arc-flattening sagitta,
    eps_metric the slack for distance comparisons.  Only eps_geom <= eps_flat
    is enforced: the default eps_flat (1e-6) deliberately exceeds the default
    eps_metric (1e-9); flattening error is an approximation knob, not a
    comparison slack, and the defaults are the contract.
    """

    eps_geom: float = 1e-12
    eps_flat: float = 1e-6
    eps_metric: float = 1e-9

    def __post_init__(self):
        if not (0.0 < self.eps_geom <= self.eps_flat):
            raise ValueError("tolerances must satisfy 0 < eps_geom <= eps_flat")
        if self.eps_metric <= 0.0:
            raise ValueError("eps_metric must be positive")

    def to_json(self) -> dict:
        return {
            "eps_geom": self.eps_geom,
            "eps_flat": self.eps_flat,
            "eps_metric": self.eps_metric,
        }

    @classmethod
    def from_json(cls, doc) -> "Tolerance":
        if doc is None:
            return cls()
        return cls(
            eps_geom=float(doc.get("eps_geom", 1e-12)),
            eps_flat=float(doc.get("eps_flat", 1e-6)),
            eps_metric=float(doc.get("eps_metric", 1e-9)),
        )


def _sign(x):
    if x > 0.0:
        return 1
    if x < 0.0:
        return -1
    return 0


def _orientation_exact(a, b, c):
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def orientation(a, b, c) -> int:
    """Sign of the signed area of triangle abc: +1 left turn, -1 right, 0 collinear.

    Exact for all float inputs (filtered evaluation with rational fallback).
    """
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        return _sign(det)
    errbound = _ORIENT_ERR * detsum
    if det >= errbound or -det >= errbound:
        return _sign(det)
    return _orientation_exact(a, b, c)


def dist(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def point_line_distance(p, a, b) -> float:
    """Euclidean distance from p to the infinite line through a, b (a != b)."""
    ux, uy = b[0] - a[0], b[1] - a[1]
    L = math.hypot(ux, uy)
    if L == 0.0:
        return dist(p, a)
    return abs((p[0] - a[0]) * uy - (p[1] - a[1]) * ux) / L


def collinear_within(a, b, c, eps: float) -> bool:
    """True iff c lies within distance eps of the line through a and b."""
    if orientation(a, b, c) == 0:
        return True
    return point_line_distance(c, a, b) <= eps


def on_segment(a, b, p) -> bool:
    """True iff p lies on the closed segment [a, b] (exact)."""
    if orientation(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_cross(p1, p2, q1, q2) -> bool:
    """True iff the open interiors of [p1,p2] and [q1,q2] cross transversally."""
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def segment_intersection_params(p1, p2, q1, q2):
    """Exact intersection of segments [p1,p2] and [q1,q2] in parameters of the first.

    Returns (kind, data) where kind is one of:
      "none"
      "point"   -> data = Fraction t in [0,1] along [p1,p2]
      "overlap" -> data = (Fraction t0, Fraction t1), the collinear overlap run
    """
    p1x, p1y = Fraction(p1[0]), Fraction(p1[1])
    p2x, p2y = Fraction(p2[0]), Fraction(p2[1])
    q1x, q1y = Fraction(q1[0]), Fraction(q1[1])
    q2x, q2y = Fraction(q2[0]), Fraction(q2[1])
    rx, ry = p2x - p1x, p2y - p1y
    sx, sy = q2x - q1x, q2y - q1y
    denom = rx * sy - ry * sx
    wx, wy = q1x - p1x, q1y - p1y
    if denom == 0:
        if wx * ry - wy * rx != 0:
            return "none", None
        # collinear: project q1, q2 on [p1,p2]
        rr = rx * rx + ry * ry
        if rr == 0:
            return "none", None
        t0 = (wx * rx + wy * ry) / rr
        t1 = ((q2x - p1x) * rx + (q2y - p1y) * ry) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        lo = max(lo, Fraction(0))
        hi = min(hi, Fraction(1))
        if lo > hi:
            return "none", None
        if lo == hi:
            return "point", lo
        return "overlap", (lo, hi)
    t = (wx * sy - wy * sx) / denom
    u = (wx * ry - wy * rx) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return "point", t
    return "none", None


def convex_hull(points):
    """Convex hull as a CCW vertex list, lexicographically smallest point first.

    Degenerate inputs yield a 1-point or 2-point hull; callers detect those
    by length.  Raises ValueError("empty point set") on empty input.
    """
    if not points:
        raise ValueError("empty point set")
    pts = sorted(set((float(p[0]), float(p[1])) for p in points))
    if len(pts) == 1:
        return [pts[0]]
    if len(pts) == 2:
        return list(pts)

    def build(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        # all points collinear
        return [pts[0], pts[-1]]
    return hull


def signed_area(poly) -> float:
    s = 0.0
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def polygon_is_ccw(poly) -> bool:
    return signed_area(poly) > 0.0


def polygon_is_convex(poly) -> bool:
    """True iff the closed polyline poly is convex (collinear triples allowed)."""
    n = len(poly)
    if n < 3:
        return False
    sense = 0
    for i in range(n):
        o = orientation(poly[i], poly[(i + 1) % n], poly[(i + 2) % n])
        if o == 0:
            continue
        if sense == 0:
            sense = o
        elif o != sense:
            return False
    return True


def point_in_polygon(p, poly) -> int:
    """Classify p against the simple closed polygon poly.

    Returns INSIDE, BOUNDARY, or OUTSIDE.  Exact even-odd test; vertices and
    edge points report BOUNDARY.
    """
    x, y = p
    inside = False
    n = len(poly)
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        if on_segment(a, b, p):
            return BOUNDARY
        ay, by = a[1], b[1]
        if (ay > y) != (by > y):
            o = orientation(a, b, p)
            if by > ay:
                if o > 0:
                    inside = not inside
            else:
                if o < 0:
                    inside = not inside
    return INSIDE if inside else OUTSIDE


@dataclass(frozen=True)
class RigidMotion2:
    """Plane isometry p -> R(angle) * S * p + t, with S the x-axis mirror iff reflect.

    Distance preserving by construction; composition and inverse stay in the
    class, so the isometries used by the uniqueness checks form a group.
    """

    angle: float = 0.0
    tx: float = 0.0
    ty: float = 0.0
    reflect: bool = False

    @classmethod
    def identity(cls) -> "RigidMotion2":
        return cls()

    def linear(self, p):
        x, y = p
        if self.reflect:
            y = -y
        c, s = math.cos(self.angle), math.sin(self.angle)
        return (c * x - s * y, s * x + c * y)

    def apply(self, p):
        x, y = self.linear(p)
        return (x + self.tx, y + self.ty)

    def apply_many(self, pts):
        return [self.apply(p) for p in pts]

    def compose(self, other: "RigidMotion2") -> "RigidMotion2":
        """Motion equal to applying ``other`` first, then self."""
        ang = self.angle + (-other.angle if self.reflect else other.angle)
        # composite translation = self.linear(other.t) + self.t
        tx, ty = self.apply((other.tx, other.ty))
        return RigidMotion2(
            angle=math.atan2(math.sin(ang), math.cos(ang)),
            tx=tx,
            ty=ty,
            reflect=self.reflect != other.reflect,
        )

    def inverse(self) -> "RigidMotion2":
        if self.reflect:
            inv = RigidMotion2(angle=self.angle, reflect=True)
        else:
            inv = RigidMotion2(angle=-self.angle, reflect=False)
        bx, by = inv.linear((self.tx, self.ty))
        return RigidMotion2(angle=inv.angle, tx=-bx, ty=-by, reflect=self.reflect)


@dataclass(frozen=True)
class Segment2:
    a: tuple
    b: tuple

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("degenerate segment: endpoints coincide")

    @property
    def length(self) -> float:
        return dist(self.a, self.b)

    def start(self):
        return self.a

    def end(self):
        return self.b

    def point_at(self, s: float):
        """Point at arclength s from a (s may lie outside [0, length])."""
        L = self.length
        t = s / L
        return (
            self.a[0] + t * (self.b[0] - self.a[0]),
            self.a[1] + t * (self.b[1] - self.a[1]),
        )

    def flatten(self, eps_flat: float):
        return [self.a, self.b]

    def to_json(self):
        return {"type": "seg", "a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True)
class Arc2:
    """Circular arc from angle a0 to a1 about center, radius r.

    The sweep runs from a0 to a1 in the direction given by ccw; a full circle
    is encoded by |a1 - a0| = 2*pi.
    """

    center: tuple
    r: float
    a0: float
    a1: float
    ccw: bool = True

    def __post_init__(self):
        if not self.r > 0.0:
            raise ValueError("arc radius must be positive")
        if self.sweep > TWO_PI + 1e-12:
            raise ValueError("arc sweep exceeds a full turn")

    @property
    def sweep(self) -> float:
        d = self.a1 - self.a0
        if self.ccw:
            while d < 0.0:
                d += TWO_PI
            if d == 0.0:
                d = TWO_PI
        else:
            while d > 0.0:
                d -= TWO_PI
            if d == 0.0:
                d = -TWO_PI
            d = -d
        return d

    @property
    def length(self) -> float:
        return self.r * self.sweep

    def angle_at(self, s: float) -> float:
        t = s / self.r
        return self.a0 + t if self.ccw else self.a0 - t

    def point_at(self, s: float):
        ang = self.angle_at(s)
        return (
            self.center[0] + self.r * math.cos(ang),
            self.center[1] + self.r * math.sin(ang),
        )

    def start(self):
        return self.point_at(0.0)

    def end(self):
        return self.point_at(self.length)

    def flatten(self, eps_flat: float):
        """Chord polyline with sagitta <= eps_flat, endpoints included."""
        if eps_flat >= self.r:
            max_step = math.pi
        else:
            max_step = 2.0 * math.acos(max(1.0 - eps_flat / self.r, -1.0))
        n = max(2, int(math.ceil(self.sweep / max_step)))
        return [self.point_at(self.length * i / n) for i in range(n + 1)]

    def to_json(self):
        return {
            "type": "arc",
            "center": list(self.center),
            "r": self.r,
            "a0": self.a0,
            "a1": self.a1,
            "ccw": self.ccw,
        }


def edge_from_json(doc):
    if doc.get("type") == "seg":
        return Segment2(tuple(map(float, doc["a"])), tuple(map(float, doc["b"])))
    if doc.get("type") == "arc":
        return Arc2(
            tuple(map(float, doc["center"])),
            float(doc["r"]),
            float(doc["a0"]),
            float(doc["a1"]),
            bool(doc.get("ccw", True)),
        )
    raise ValueError("unknown edge type %r" % (doc.get("type"),))
