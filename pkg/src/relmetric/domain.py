"""Planar domain model: bounded polygon-with-holes domains, complements of
compact obstacles, and half-plane-clipped regions, plus the JSON format.

A domain is immutable after construction.  Loops and slits may carry ray
extensions (``ray_start`` / ``ray_end``) so that unbounded boundary pieces,
such as a full line seen as a two-ray slit or a bent half-plane boundary,
are representable symbolically; geometry queries clip them on demand.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .geom import (
    BOUNDARY,
    INSIDE,
    OUTSIDE,
    Arc2,
    Segment2,
    Tolerance,
    collinear_within,
    convex_hull,
    dist,
    edge_from_json,
    on_segment,
    orientation,
    point_in_polygon,
    point_line_distance,
    polygon_is_convex,
    segment_intersection_params,
    segments_cross,
    signed_area,
)

__all__ = [
    "DomainError",
    "Loop",
    "Slit",
    "HalfPlane",
    "PlanarDomain",
    "BoundaryPoint",
    "DomainDiagnostics",
    "load_domain",
    "domain_from_dict",
    "serialize_domain",
    "domain_to_json",
    "diagnose",
    "boundary_point_at",
]


class DomainError(ValueError):
    """Validation failure; carries every violated invariant, not just the first."""

    def __init__(self, problems):
        self.problems = [str(p) for p in problems]
        super().__init__("; ".join(self.problems))


def _norm(v):
    L = math.hypot(v[0], v[1])
    if L == 0.0:
        raise DomainError(["zero direction vector"])
    return (v[0] / L, v[1] / L)


def _dedup(points, eps=0.0):
    out = []
    for p in points:
        if out and dist(out[-1], p) <= eps:
            continue
        out.append(p)
    return out


@dataclass(frozen=True)
class Loop:
    """Closed edge chain, or an open chain with ray ends (complement kind).

    For an open chain the removed obstacle region is the set lying to the
    LEFT of the traversal that comes in from infinity against ``ray_start``,
    runs through the edges in order, and leaves along ``ray_end``.
    """

    edges: tuple
    ray_start: tuple | None = None
    ray_end: tuple | None = None

    def __post_init__(self):
        if not self.edges:
            raise DomainError(["loop with no edges"])
        if (self.ray_start is None) != (self.ray_end is None):
            raise DomainError(["open chain needs both ray directions"])

    @property
    def closed(self) -> bool:
        return self.ray_start is None

    @property
    def length(self) -> float:
        return sum(e.length for e in self.edges)

    def point_at(self, s: float):
        """Point at arclength s; s wraps modulo length on closed loops and
        runs along the rays (s < 0 or s > length) on open chains."""
        L = self.length
        if self.closed:
            s = s % L
        else:
            if s < 0.0:
                d = _norm(self.ray_start)
                p0 = self.edges[0].start()
                return (p0[0] - s * d[0], p0[1] - s * d[1])
            if s > L:
                d = _norm(self.ray_end)
                p1 = self.edges[-1].end()
                return (p1[0] + (s - L) * d[0], p1[1] + (s - L) * d[1])
        acc = 0.0
        for e in self.edges:
            el = e.length
            if s <= acc + el or e is self.edges[-1]:
                return e.point_at(min(s - acc, el))
            acc += el
        return self.edges[-1].end()

    def polyline(self, eps_flat: float):
        """Flattened vertex chain.  Closed loops omit the repeated last point.

        Edge joints are welded at trig-roundoff scale so arc endpoints do
        not leave micro-segments next to their declared chain vertices.
        """
        pts = []
        for e in self.edges:
            pts.extend(e.flatten(eps_flat))
        scale = max((abs(c) for p in pts for c in p), default=0.0)
        weld = 1e-12 * (1.0 + scale)
        pts = _dedup(pts, weld)
        if self.closed and len(pts) > 1 and dist(pts[0], pts[-1]) <= weld:
            pts.pop()
        return pts

    def to_json(self):
        doc = {"edges": [e.to_json() for e in self.edges]}
        if not self.closed:
            doc["ray_start"] = list(self.ray_start)
            doc["ray_end"] = list(self.ray_end)
        return doc


@dataclass(frozen=True)
class Slit:
    """Degenerate boundary piece: a polyline removed from the domain.

    One-point slits are allowed (complement of a point).  Ray directions
    extend the first/last vertex to infinity.
    """

    points: tuple
    ray_start: tuple | None = None
    ray_end: tuple | None = None

    def __post_init__(self):
        if not self.points:
            raise DomainError(["empty slit"])
        if len(self.points) == 1 and (self.ray_start or self.ray_end):
            # a single anchor point with rays is fine (e.g. one full ray)
            pass

    @property
    def length(self) -> float:
        return sum(dist(a, b) for a, b in zip(self.points, self.points[1:]))

    def point_at(self, s: float):
        if s < 0.0 and self.ray_start is not None:
            d = _norm(self.ray_start)
            p0 = self.points[0]
            return (p0[0] - s * d[0], p0[1] - s * d[1])
        L = self.length
        if s > L and self.ray_end is not None:
            d = _norm(self.ray_end)
            p1 = self.points[-1]
            return (p1[0] + (s - L) * d[0], p1[1] + (s - L) * d[1])
        s = min(max(s, 0.0), L)
        acc = 0.0
        for a, b in zip(self.points, self.points[1:]):
            el = dist(a, b)
            if s <= acc + el and el > 0.0:
                t = (s - acc) / el
                return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            acc += el
        return self.points[-1]

    def polyline(self, eps_flat: float):
        return list(self.points)

    def to_json(self):
        if self.ray_start is None and self.ray_end is None:
            return [list(p) for p in self.points]
        doc = {"points": [list(p) for p in self.points]}
        if self.ray_start is not None:
            doc["ray_start"] = list(self.ray_start)
        if self.ray_end is not None:
            doc["ray_end"] = list(self.ray_end)
        return doc


@dataclass(frozen=True)
class HalfPlane:
    """Open constraint n . x < c with n a unit normal pointing outward."""

    n: tuple
    c: float

    def __post_init__(self):
        L = math.hypot(self.n[0], self.n[1])
        if abs(L - 1.0) > 1e-9:
            raise DomainError(["half-plane normal must be unit length"])

    def value(self, p) -> float:
        return self.n[0] * p[0] + self.n[1] * p[1] - self.c

    def to_json(self):
        return {"n": list(self.n), "c": self.c}


@dataclass(frozen=True)
class BoundaryPoint:
    """Point on the boundary addressed by component id and arclength."""

    loop_ref: str
    s: float
    xy: tuple


@dataclass(frozen=True)
class DomainDiagnostics:
    is_bounded: bool
    is_convex: bool
    is_strictly_convex_flag: bool
    boundary_collinear: bool
    singular_vertices: tuple

    def __post_init__(self):
        assert not (self.is_strictly_convex_flag and not self.is_convex)
        assert not (self.boundary_collinear and self.is_strictly_convex_flag)


class PlanarDomain:
    """Immutable planar domain of kind bounded / complement / clipped.

    bounded    : loops[0] is the outer CCW boundary, the rest are CW holes;
                 slits are additional degenerate obstacles inside.
    complement : the plane minus closed loop regions, chain regions and slits.
    clipped    : intersection of open half-planes, minus loop/slit obstacles.
    """

    def __init__(
        self,
        kind,
        loops=(),
        slits=(),
        halfplanes=(),
        singular_vertices=(),
        tolerance=None,
        validate=True,
    ):
        self.kind = kind
        self.loops = tuple(loops)
        self.slits = tuple(slits)
        self.halfplanes = tuple(halfplanes)
        self.singular_vertices = tuple(tuple(p) for p in singular_vertices)
        self.tolerance = tolerance or Tolerance()
        self._flat_loops = None
        self._flat_slits = None
        if validate:
            problems = self.validate()
            if problems:
                raise DomainError(problems)

    # -- derived geometry ---------------------------------------------------

    @property
    def flat_loops(self):
        if self._flat_loops is None:
            self._flat_loops = [
                lp.polyline(self.tolerance.eps_flat) for lp in self.loops
            ]
        return self._flat_loops

    @property
    def flat_slits(self):
        if self._flat_slits is None:
            self._flat_slits = [
                sl.polyline(self.tolerance.eps_flat) for sl in self.slits
            ]
        return self._flat_slits

    def component_ids(self):
        return ["loop%d" % i for i in range(len(self.loops))] + [
            "slit%d" % j for j in range(len(self.slits))
        ]

    def component(self, ref):
        if isinstance(ref, int):
            ref = "loop%d" % ref
        if ref.startswith("loop"):
            i = int(ref[4:])
            if i >= len(self.loops):
                raise KeyError("unknown loop_ref %r" % ref)
            return ref, self.loops[i]
        if ref.startswith("slit"):
            j = int(ref[4:])
            if j >= len(self.slits):
                raise KeyError("unknown loop_ref %r" % ref)
            return ref, self.slits[j]
        raise KeyError("unknown loop_ref %r" % ref)

    def max_abs_coord(self) -> float:
        m = 0.0
        for poly in self.flat_loops + self.flat_slits:
            for x, y in poly:
                m = max(m, abs(x), abs(y))
        for hp in self.halfplanes:
            m = max(m, abs(hp.c))
        return m

    def has_unbounded_boundary(self) -> bool:
        if self.kind == "clipped" and self.halfplanes:
            return True
        if any(not lp.closed for lp in self.loops):
            return True
        return any(
            sl.ray_start is not None or sl.ray_end is not None for sl in self.slits
        )

    def _chain_closure(self, loop, scale):
        """Close an open chain into a far polygon whose interior is the removed
        region (the left side of the traversal)."""
        eps_flat = self.tolerance.eps_flat
        pts = loop.polyline(eps_flat)
        d0 = _norm(loop.ray_start)
        d1 = _norm(loop.ray_end)
        L = scale
        e0 = (pts[0][0] + d0[0] * L, pts[0][1] + d0[1] * L)
        e1 = (pts[-1][0] + d1[0] * L, pts[-1][1] + d1[1] * L)
        base = [e0] + pts + [e1]
        rc = 3.0 * max(
            math.hypot(e0[0], e0[1]), math.hypot(e1[0], e1[1]), 1.0
        )
        a1 = math.atan2(e1[1], e1[0])
        a0 = math.atan2(e0[1], e0[0])
        # probe strictly on the left of the first chain edge
        ax, ay = pts[0]
        bx, by = pts[1] if len(pts) > 1 else e1
        mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
        ex, ey = bx - ax, by - ay
        el = math.hypot(ex, ey)
        nx, ny = -ey / el, ex / el
        probe = (mx + nx * el * 1e-3, my + ny * el * 1e-3)
        for sweep_ccw in (True, False):
            span = (a0 - a1) % (2.0 * math.pi)
            if not sweep_ccw:
                span = span - 2.0 * math.pi
            steps = 96
            arc = [
                (
                    rc * math.cos(a1 + span * i / steps),
                    rc * math.sin(a1 + span * i / steps),
                )
                for i in range(steps + 1)
            ]
            poly = base + arc
            if point_in_polygon(probe, poly) == INSIDE:
                return poly
        raise DomainError(["cannot orient open-chain obstacle closure"])

    def locate(self, p, scale=None) -> int:
        """Classify p as INSIDE (in the open domain), BOUNDARY, or OUTSIDE."""
        eps = self.tolerance.eps_geom
        if self.kind == "clipped":
            side = INSIDE
            for hp in self.halfplanes:
                v = hp.value(p)
                if v > eps:
                    return OUTSIDE
                if v >= -eps:
                    side = BOUNDARY
            obstacle_side = self._locate_obstacles(p, scale)
            if obstacle_side == OUTSIDE:
                return OUTSIDE
            if obstacle_side == BOUNDARY:
                return BOUNDARY
            return side
        if self.kind == "bounded":
            outer = self.flat_loops[0]
            side = point_in_polygon(p, outer)
            if side != INSIDE:
                return side
            for poly in self.flat_loops[1:]:
                s = point_in_polygon(p, poly)
                if s == INSIDE:
                    return OUTSIDE
                if s == BOUNDARY:
                    return BOUNDARY
            slit = self._slit_side(p)
            return INSIDE if slit is None else slit
        # complement
        obstacle_side = self._locate_obstacles(p, scale)
        if obstacle_side == OUTSIDE:
            return OUTSIDE
        if obstacle_side == BOUNDARY:
            return BOUNDARY
        slit = self._slit_side(p)
        return INSIDE if slit is None else slit

    def _slit_side(self, p):
        for sl, poly in zip(self.slits, self.flat_slits):
            if len(poly) == 1 and poly[0] == tuple(p):
                return BOUNDARY
            for a, b in zip(poly, poly[1:]):
                if on_segment(a, b, p):
                    return BOUNDARY
            for ray, anchor in (
                (sl.ray_start, poly[0]),
                (sl.ray_end, poly[-1]),
            ):
                if ray is None:
                    continue
                d = _norm(ray)
                w = (p[0] - anchor[0], p[1] - anchor[1])
                t = w[0] * d[0] + w[1] * d[1]
                if t >= 0.0 and abs(w[0] * d[1] - w[1] * d[0]) == 0.0:
                    return BOUNDARY
        return None

    def _locate_obstacles(self, p, scale=None):
        """Side of p relative to loop obstacles (holes are handled by caller)."""
        if self.kind == "bounded":
            return None
        if scale is None:
            scale = 16.0 * (max(self.max_abs_coord(), abs(p[0]), abs(p[1])) + 1.0)
        for lp, poly in zip(self.loops, self.flat_loops):
            if lp.closed:
                s = point_in_polygon(p, poly)
            else:
                s = point_in_polygon(p, self._chain_closure(lp, scale))
            if s == INSIDE:
                return OUTSIDE
            if s == BOUNDARY:
                return BOUNDARY
        return None

    # -- validation ---------------------------------------------------------

    def validate(self):
        problems = []
        eps = self.tolerance.eps_geom
        if self.kind not in ("bounded", "complement", "clipped"):
            return ["unknown kind %r" % (self.kind,)]
        if self.kind == "clipped" and not self.halfplanes:
            problems.append("clipped kind requires at least one half-plane")
        if self.kind != "clipped" and self.halfplanes:
            problems.append("half-planes are only allowed in clipped kind")
        if self.kind == "bounded" and not self.loops:
            problems.append("bounded kind requires an outer loop")
        for i, lp in enumerate(self.loops):
            if not lp.closed:
                if self.kind != "complement":
                    problems.append("open chain loops require complement kind")
                for k in range(len(lp.edges) - 1):
                    if dist(lp.edges[k].end(), lp.edges[k + 1].start()) > max(eps, 1e-9):
                        problems.append("loop%d edge chain has a gap" % i)
                        break
                continue
            for k in range(len(lp.edges)):
                e0 = lp.edges[k]
                e1 = lp.edges[(k + 1) % len(lp.edges)]
                if dist(e0.end(), e1.start()) > max(eps, 1e-9):
                    problems.append("loop%d edge chain is not closed" % i)
                    break
        for i, poly in enumerate(self.flat_loops):
            if self.loops[i].closed and len(poly) < 3:
                problems.append("loop%d degenerates to fewer than 3 vertices" % i)
        problems.extend(self._check_simple())
        if self.kind == "bounded" and not problems:
            problems.extend(self._check_bounded_structure())
        return problems

    def _loop_segments(self, i):
        poly = self.flat_loops[i]
        if self.loops[i].closed:
            return list(zip(poly, poly[1:] + poly[:1]))
        return list(zip(poly, poly[1:]))

    def _check_simple(self):
        problems = []
        all_segs = []
        for i in range(len(self.loops)):
            segs = self._loop_segments(i)
            n = len(segs)
            for a in range(n):
                for b in range(a + 1, n):
                    adjacent = b == a + 1 or (
                        self.loops[i].closed and a == 0 and b == n - 1
                    )
                    sa, sb = segs[a], segs[b]
                    if segments_cross(sa[0], sa[1], sb[0], sb[1]):
                        problems.append("self-intersecting loop%d" % i)
                        break
                    if not adjacent:
                        if (
                            on_segment(sa[0], sa[1], sb[0])
                            or on_segment(sa[0], sa[1], sb[1])
                            or on_segment(sb[0], sb[1], sa[0])
                            or on_segment(sb[0], sb[1], sa[1])
                        ):
                            problems.append("self-intersecting loop%d" % i)
                            break
                else:
                    continue
                break
            all_segs.append(segs)
        for i in range(len(all_segs)):
            for j in range(i + 1, len(all_segs)):
                hit = False
                for sa in all_segs[i]:
                    for sb in all_segs[j]:
                        if segments_cross(sa[0], sa[1], sb[0], sb[1]) or on_segment(
                            sa[0], sa[1], sb[0]
                        ):
                            problems.append("loop%d and loop%d intersect" % (i, j))
                            hit = True
                            break
                    if hit:
                        break
        return problems

    def _check_bounded_structure(self):
        problems = []
        outer = self.flat_loops[0]
        if signed_area(outer) <= 0.0:
            problems.append("outer loop orientation must be CCW")
        for i, poly in enumerate(self.flat_loops[1:], start=1):
            if signed_area(poly) >= 0.0:
                problems.append("hole orientation: loop%d must be CW" % i)
            for p in poly:
                if point_in_polygon(p, outer) != INSIDE:
                    problems.append("hole outside outer loop: loop%d" % i)
                    break
        for j, poly in enumerate(self.flat_slits):
            for p in poly:
                if point_in_polygon(p, outer) == OUTSIDE:
                    problems.append("slit%d outside outer loop" % j)
                    break
        return problems

    # -- serialization ------------------------------------------------------

    def to_dict(self):
        doc = {"kind": self.kind}
        if self.loops:
            doc["loops"] = [lp.to_json() for lp in self.loops]
        if self.slits:
            doc["slits"] = [sl.to_json() for sl in self.slits]
        if self.halfplanes:
            doc["halfplanes"] = [hp.to_json() for hp in self.halfplanes]
        if self.singular_vertices:
            doc["singular_vertices"] = [list(p) for p in self.singular_vertices]
        doc["tolerance"] = self.tolerance.to_json()
        return doc


def loop_from_points(points, ray_start=None, ray_end=None) -> Loop:
    """Loop of straight edges through ``points`` (closed iff no rays given)."""
    pts = [tuple(map(float, p)) for p in points]
    edges = [Segment2(a, b) for a, b in zip(pts, pts[1:])]
    if ray_start is None and ray_end is None:
        if pts[0] != pts[-1]:
            edges.append(Segment2(pts[-1], pts[0]))
        return Loop(tuple(edges))
    return Loop(tuple(edges), tuple(ray_start), tuple(ray_end))


def polygon_domain(points, holes=(), slits=(), singular_vertices=(),
                   tolerance=None) -> PlanarDomain:
    """Bounded domain from an outer CCW vertex list plus CW hole vertex lists."""
    loops = [loop_from_points(points)]
    loops.extend(loop_from_points(h) for h in holes)
    return PlanarDomain(
        "bounded",
        loops,
        [Slit(tuple(tuple(map(float, p)) for p in s)) for s in slits],
        (),
        singular_vertices,
        tolerance,
    )


def domain_from_dict(doc) -> PlanarDomain:
    problems = []
    if not isinstance(doc, dict):
        raise DomainError(["document must be a JSON object"])
    kind = doc.get("kind")
    tol = Tolerance.from_json(doc.get("tolerance"))
    loops = []
    for i, ldoc in enumerate(doc.get("loops", [])):
        try:
            edges = tuple(edge_from_json(e) for e in ldoc.get("edges", []))
            rs = ldoc.get("ray_start")
            re_ = ldoc.get("ray_end")
            loops.append(
                Loop(
                    edges,
                    tuple(map(float, rs)) if rs else None,
                    tuple(map(float, re_)) if re_ else None,
                )
            )
        except (DomainError, ValueError, KeyError, TypeError) as exc:
            problems.append("loop%d: %s" % (i, exc))
    slits = []
    for j, sdoc in enumerate(doc.get("slits", [])):
        try:
            if isinstance(sdoc, dict):
                pts = tuple(tuple(map(float, p)) for p in sdoc["points"])
                rs = sdoc.get("ray_start")
                re_ = sdoc.get("ray_end")
                slits.append(
                    Slit(
                        pts,
                        tuple(map(float, rs)) if rs else None,
                        tuple(map(float, re_)) if re_ else None,
                    )
                )
            else:
                slits.append(Slit(tuple(tuple(map(float, p)) for p in sdoc)))
        except (DomainError, ValueError, KeyError, TypeError) as exc:
            problems.append("slit%d: %s" % (j, exc))
    halfplanes = []
    for k, hdoc in enumerate(doc.get("halfplanes", [])):
        try:
            n = tuple(map(float, hdoc["n"]))
            halfplanes.append(HalfPlane(_norm(n), float(hdoc["c"])))
        except (DomainError, ValueError, KeyError, TypeError) as exc:
            problems.append("halfplane%d: %s" % (k, exc))
    if problems:
        raise DomainError(problems)
    return PlanarDomain(
        kind,
        loops,
        slits,
        halfplanes,
        [tuple(map(float, p)) for p in doc.get("singular_vertices", [])],
        tol,
    )


def load_domain(text: str) -> PlanarDomain:
    """Parse and validate a JSON domain document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(["schema error: %s" % exc]) from exc
    return domain_from_dict(doc)


def serialize_domain(domain: PlanarDomain) -> dict:
    return domain.to_dict()


def domain_to_json(domain: PlanarDomain) -> str:
    return json.dumps(domain.to_dict(), indent=2, sort_keys=True)


def boundary_point_at(domain: PlanarDomain, loop_ref, s: float) -> BoundaryPoint:
    """Boundary point at arclength s along the referenced loop or slit."""
    ref, comp = domain.component(loop_ref)
    if isinstance(comp, Loop) and comp.closed:
        s = s % comp.length
    return BoundaryPoint(ref, s, comp.point_at(s))


def _boundary_component_count(domain: PlanarDomain):
    """(component count, has more than one point) on the symbolic description."""
    n = len(domain.loops) + len(domain.slits)
    multi = any(True for _ in domain.loops) or any(
        len(sl.points) > 1 or sl.ray_start or sl.ray_end for sl in domain.slits
    )
    if domain.kind == "clipped":
        # boundary of a half-plane intersection is one connected polyline
        n += 1
        multi = True
    return n, multi


def boundary_is_connected_multipoint(domain: PlanarDomain):
    n, multi = _boundary_component_count(domain)
    return n == 1, multi


def _collinear_boundary(domain: PlanarDomain) -> bool:
    eps = domain.tolerance.eps_geom
    if domain.kind == "clipped":
        if domain.loops or domain.slits:
            return False
        lines = {(round(hp.n[0], 12), round(hp.n[1], 12), round(hp.c, 12))
                 for hp in domain.halfplanes}
        if len(lines) != 1:
            return False
        return True
    pts = []
    dirs = []
    for lp in domain.loops:
        for e in lp.edges:
            if isinstance(e, Arc2):
                return False
        pts.extend([e.start() for e in lp.edges] + [lp.edges[-1].end()])
        if not lp.closed:
            dirs.extend([lp.ray_start, lp.ray_end])
    for sl in domain.slits:
        pts.extend(sl.points)
        if sl.ray_start is not None:
            dirs.append(sl.ray_start)
        if sl.ray_end is not None:
            dirs.append(sl.ray_end)
    if not pts:
        return False
    base = pts[0]
    other = None
    for p in pts[1:]:
        if dist(base, p) > eps:
            other = p
            break
    if other is None:
        if dirs:
            other = (base[0] + dirs[0][0], base[1] + dirs[0][1])
        else:
            return True  # boundary is a single point
    for p in pts:
        if not collinear_within(base, other, p, eps):
            return False
    ux, uy = other[0] - base[0], other[1] - base[1]
    for d in dirs:
        if abs(d[0] * uy - d[1] * ux) > eps * math.hypot(*d) * math.hypot(ux, uy):
            return False
    return True


def _clipped_is_bounded(domain: PlanarDomain) -> bool:
    normals = [hp.n for hp in domain.halfplanes]
    if len(normals) < 3:
        return False
    try:
        hull = convex_hull(normals)
    except ValueError:
        return False
    if len(hull) < 3:
        return False
    return point_in_polygon((0.0, 0.0), hull) == INSIDE


def diagnose(domain: PlanarDomain) -> DomainDiagnostics:
    """Convexity, strict convexity, boundedness and boundary collinearity.

    Strict convexity is decided on the symbolic edge list (a flattened arc
    must still count as strictly convex), convexity on the exact flattened
    polygon.
    """
    if domain.kind == "bounded":
        bounded = True
    elif domain.kind == "clipped":
        bounded = _clipped_is_bounded(domain)
    else:
        bounded = False

    convex = False
    if domain.kind == "bounded":
        convex = (
            len(domain.loops) == 1
            and not domain.slits
            and polygon_is_convex(domain.flat_loops[0])
        )
    elif domain.kind == "clipped":
        convex = not domain.loops and not domain.slits
    else:
        convex = not domain.loops and not domain.slits  # whole plane only

    strict = (
        convex
        and domain.kind == "bounded"
        and all(isinstance(e, Arc2) for e in domain.loops[0].edges)
    )
    collinear = _collinear_boundary(domain)
    if collinear:
        strict = False
    return DomainDiagnostics(
        is_bounded=bounded,
        is_convex=convex,
        is_strictly_convex_flag=strict,
        boundary_collinear=collinear,
        singular_vertices=domain.singular_vertices,
    )
