"""Structural objects on domain boundaries.

Boundary intervals (open chords of the domain between boundary points),
boundary angles with certified clearance radii, gamma sets over a finite
candidate family, and the hull-exterior decomposition of the domain into
the outside part F and the bounded pockets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from shapely.geometry import (
    GeometryCollection,
    LineString,
    MultiLineString,
    Point as ShapelyPoint,
    Polygon,
    box,
)
from shapely.ops import linemerge, polygonize, unary_union

from .domain import BOUNDARY, INSIDE, PlanarDomain
from .geodesic import _boundary_distance, _seg_dist
from .geom import (
    convex_hull,
    dist,
    on_segment,
    orientation,
    segment_intersection_params,
)


@dataclass
class BoundaryInterval:
    x: tuple
    y: tuple
    maximal: bool = True

    @property
    def length(self) -> float:
        return dist(self.x, self.y)

    def point_at(self, t: float):
        return (
            self.x[0] + t * (self.y[0] - self.x[0]),
            self.x[1] + t * (self.y[1] - self.x[1]),
        )


@dataclass
class BoundaryAngle:
    x: tuple
    y: tuple
    z: tuple
    radius_witness: float


@dataclass
class GammaSet:
    angle: BoundaryAngle
    hull: tuple
    members: tuple


@dataclass
class FuDecomposition:
    hull: tuple
    f_components: int
    f_unbounded: bool
    boundary_f_components: int
    u_components: tuple
    f_parts: tuple = field(default=(), repr=False)


def _contact_eps(domain: PlanarDomain) -> float:
    return domain.tolerance.eps_geom * (1.0 + domain.max_abs_coord())


def _full_boundary_distance(domain: PlanarDomain, p) -> float:
    """Distance to the whole boundary, ray extensions and clip lines
    included (the flat-piece helper skips both)."""
    best = _boundary_distance(domain, p)

    def ray_dist(anchor, d):
        n = math.hypot(d[0], d[1])
        if n == 0.0:
            return math.inf
        ux, uy = d[0] / n, d[1] / n
        wx, wy = p[0] - anchor[0], p[1] - anchor[1]
        if wx * ux + wy * uy <= 0.0:
            return dist(p, anchor)
        return abs(wx * uy - wy * ux)

    eps = domain.tolerance.eps_flat
    for lp in domain.loops:
        if lp.closed:
            continue
        pts = lp.polyline(eps)
        best = min(best, ray_dist(pts[0], lp.ray_start))
        best = min(best, ray_dist(pts[-1], lp.ray_end))
    for sl in domain.slits:
        if sl.ray_start is not None:
            best = min(best, ray_dist(sl.points[0], sl.ray_start))
        if sl.ray_end is not None:
            best = min(best, ray_dist(sl.points[-1], sl.ray_end))
    for hp in domain.halfplanes:
        best = min(best, abs(hp.value(p)))
    return best


def _on_boundary(domain: PlanarDomain, p, ceps: float) -> bool:
    if domain.locate(p) == BOUNDARY:
        return True
    return _full_boundary_distance(domain, p) <= ceps


def _reach_for(domain: PlanarDomain, *pts) -> float:
    m = domain.max_abs_coord()
    for p in pts:
        m = max(m, abs(float(p[0])), abs(float(p[1])))
    return 2.0 * (m + 1.0)


def _edge_soup(domain: PlanarDomain, reach: float):
    """Finite boundary edges covering a disc of the given radius.

    Ray extensions get exact far endpoints (Fraction arithmetic) so the
    event parameters downstream stay exact.  Clip lines are not edges and
    are handled separately through their affine values.
    """
    eps = domain.tolerance.eps_flat
    segs = []

    def add_chain(pts, closed):
        n = len(pts)
        rng = range(n) if closed else range(n - 1)
        for i in rng:
            a, b = pts[i], pts[(i + 1) % n]
            if a != b:
                segs.append((a, b))

    def add_ray(p0, d):
        n = math.hypot(d[0], d[1])
        if n == 0.0:
            return
        s = 1
        while s * n < 4.0 * reach:
            s *= 2
        far = (
            Fraction(p0[0]) + s * Fraction(d[0]),
            Fraction(p0[1]) + s * Fraction(d[1]),
        )
        segs.append((p0, far))

    for lp in domain.loops:
        pts = lp.polyline(eps)
        add_chain(pts, lp.closed)
        if not lp.closed:
            add_ray(pts[0], lp.ray_start)
            add_ray(pts[-1], lp.ray_end)
    for sl in domain.slits:
        pts = sl.polyline(eps)
        add_chain(pts, False)
        if sl.ray_start is not None:
            add_ray(pts[0], sl.ray_start)
        if sl.ray_end is not None:
            add_ray(pts[-1], sl.ray_end)
    return segs


def _halfplane_blocks(domain: PlanarDomain, a, b, ceps: float) -> bool:
    """True when the open segment a-b leaves a clipped domain or rides one
    of its boundary lines.  Halfplane values are affine along the segment,
    so the endpoint values decide everything."""
    for hp in domain.halfplanes:
        va = hp.value(a)
        vb = hp.value(b)
        tol = ceps * (1.0 + abs(hp.c))
        if va > tol or vb > tol:
            return True
        if abs(va) <= tol and abs(vb) <= tol:
            return True
    return False


def _segment_events(domain: PlanarDomain, a, b, soup=None):
    """Exact boundary contacts along segment a-b as parameters in [0, 1].

    Returns (point_events, overlap_runs); overlap runs are (t0, t1)
    Fraction pairs where the segment rides inside a boundary edge.
    """
    if soup is None:
        soup = _edge_soup(domain, _reach_for(domain, a, b))
    points = []
    runs = []
    for e0, e1 in soup:
        kind, val = segment_intersection_params(a, b, e0, e1)
        if kind == "point":
            points.append(val)
        elif kind == "overlap":
            runs.append(val)
    return points, runs


def _open_segment_in_domain(domain: PlanarDomain, a, b, soup=None) -> bool:
    """Whether the open segment ]a,b[ stays inside the open domain.

    Contacts within contact range of an endpoint count as endpoint
    contacts (boundary points handed in as floats ride a few ulp off the
    exact edges); any other boundary contact disqualifies.
    """
    ceps = _contact_eps(domain)
    if _halfplane_blocks(domain, a, b, ceps):
        return False
    L = dist(a, b)
    if L == 0.0:
        return False
    tcut = ceps / L
    points, runs = _segment_events(domain, a, b, soup)
    for t0, t1 in runs:
        if t1 > tcut and t0 < 1 - tcut:
            return False
    for t in points:
        if tcut < t < 1 - tcut:
            return False
    mid = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
    if domain.locate(mid) != INSIDE:
        return False
    return _full_boundary_distance(domain, mid) > ceps


def is_boundary_interval(domain: PlanarDomain, a, b) -> bool:
    """True iff a and b lie on the boundary and the open segment between
    them runs through the open domain without touching the boundary."""
    a = (float(a[0]), float(a[1]))
    b = (float(b[0]), float(b[1]))
    if a == b:
        raise ValueError("interval endpoints coincide")
    ceps = _contact_eps(domain)
    if not (_on_boundary(domain, a, ceps) and _on_boundary(domain, b, ceps)):
        return False
    return _open_segment_in_domain(domain, a, b)


def boundary_candidate_points(domain: PlanarDomain, among="vertices", k=16):
    """Vertices of the flattened boundary chains, optionally with k evenly
    spaced samples per edge.  Clip lines contribute no candidates."""
    if among not in ("vertices", "vertices+samples"):
        raise ValueError("among must be vertices or vertices+samples")
    eps = domain.tolerance.eps_flat
    pts = []
    seen = set()

    def push(p):
        if p not in seen:
            seen.add(p)
            pts.append(p)

    chains = [(lp.polyline(eps), lp.closed) for lp in domain.loops]
    chains += [(sl.polyline(eps), False) for sl in domain.slits]
    for chain, closed in chains:
        for p in chain:
            push(p)
        if among == "vertices+samples":
            n = len(chain)
            rng = range(n) if closed else range(n - 1)
            for i in rng:
                a, b = chain[i], chain[(i + 1) % n]
                for j in range(1, k + 1):
                    t = j / (k + 1)
                    push((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    return pts


def _maximal_flag(domain, a, b, soup) -> bool:
    """Check for a strictly larger collinear boundary interval.

    Walk the supporting line past each endpoint to the nearest boundary
    contact and test whether the widened chord is itself a valid interval.
    The old endpoint sits on the boundary inside the widened chord, which
    a valid interval forbids, so genuine intervals come back maximal.
    """
    ax, ay = Fraction(a[0]), Fraction(a[1])
    dx = Fraction(b[0]) - ax
    dy = Fraction(b[1]) - ay
    L = dist(a, b)
    reach = _reach_for(domain, a, b)
    m = 1
    while m * L < 4.0 * reach:
        m *= 2
    far0 = (ax - m * dx, ay - m * dy)
    far1 = (ax + (m + 1) * dx, ay + (m + 1) * dy)
    span = 2 * m + 1
    events = set()
    for e0, e1 in soup:
        kind, val = segment_intersection_params(far0, far1, e0, e1)
        if kind == "point":
            events.add(val * span - m)
        elif kind == "overlap":
            events.add(val[0] * span - m)
            events.add(val[1] * span - m)
    tcut = Fraction(_contact_eps(domain)) / Fraction(L)
    after = sorted(t for t in events if t > 1 + tcut)
    before = sorted((t for t in events if t < -tcut), reverse=True)
    for t in (after[0] if after else None, before[0] if before else None):
        if t is None:
            continue
        w = (float(ax + t * dx), float(ay + t * dy))
        anchor = a if t > 1 else b
        if is_boundary_interval(domain, anchor, w):
            return False
    return True


def enumerate_boundary_intervals(domain: PlanarDomain, among="vertices", k=16):
    """All boundary intervals with endpoints in the candidate set, with
    maximality flags from collinear extension."""
    cand = boundary_candidate_points(domain, among, k)
    ceps = _contact_eps(domain)
    soup = _edge_soup(domain, _reach_for(domain, *cand) if cand else 1.0)
    out = []
    for i in range(len(cand)):
        if not _on_boundary(domain, cand[i], ceps):
            continue
        for j in range(i + 1, len(cand)):
            a, b = cand[i], cand[j]
            if not _on_boundary(domain, b, ceps):
                continue
            if _open_segment_in_domain(domain, a, b, soup):
                out.append(
                    BoundaryInterval(
                        a, b, maximal=_maximal_flag(domain, a, b, soup)
                    )
                )
    return out


# ------------------------------------------------------------------ angles


def _wedge_contains_strict(y, x, z, d) -> bool:
    """Direction d (an offset from y) strictly inside the angle x-y-z."""
    p = (y[0] + d[0], y[1] + d[1])
    if orientation(x, y, z) == 0:
        return False
    if orientation(y, x, z) > 0:
        return orientation(y, x, p) > 0 and orientation(y, p, z) > 0
    return orientation(y, z, p) > 0 and orientation(y, p, x) > 0


def _incident_directions(domain: PlanarDomain, y, soup, ceps):
    """Boundary directions leaving the point y."""
    dirs = []
    for e0, e1 in soup:
        a = (float(e0[0]), float(e0[1]))
        b = (float(e1[0]), float(e1[1]))
        if dist(a, y) <= ceps:
            dirs.append((b[0] - y[0], b[1] - y[1]))
        elif dist(b, y) <= ceps:
            dirs.append((a[0] - y[0], a[1] - y[1]))
        elif on_segment(a, b, y):
            dirs.append((b[0] - y[0], b[1] - y[1]))
            dirs.append((a[0] - y[0], a[1] - y[1]))
    for hp in domain.halfplanes:
        if abs(hp.value(y)) <= ceps * (1.0 + abs(hp.c)):
            dirs.append((-hp.n[1], hp.n[0]))
            dirs.append((hp.n[1], -hp.n[0]))
    return dirs


def _clearance(domain: PlanarDomain, y, soup, ceps) -> float:
    """Distance from y to the boundary pieces not passing through y."""
    best = math.inf
    for e0, e1 in soup:
        a = (float(e0[0]), float(e0[1]))
        b = (float(e1[0]), float(e1[1]))
        if dist(a, y) <= ceps or dist(b, y) <= ceps or on_segment(a, b, y):
            continue
        best = min(best, _seg_dist(y, a, b))
    for hp in domain.halfplanes:
        v = hp.value(y)
        if abs(v) > ceps * (1.0 + abs(hp.c)):
            best = min(best, abs(v))
    return best


def detect_boundary_angle(domain: PlanarDomain, x, y, z):
    """Certified angle at y with legs toward x and z, or None.

    Both legs must be boundary intervals and a punctured wedge
    neighborhood of y must sit inside the domain; the returned radius
    combines exact edge clearances with a dyadic sampling probe.
    """
    x = (float(x[0]), float(x[1]))
    y = (float(y[0]), float(y[1]))
    z = (float(z[0]), float(z[1]))
    if orientation(x, y, z) == 0:
        return None
    if not is_boundary_interval(domain, y, x):
        return None
    if not is_boundary_interval(domain, y, z):
        return None
    ceps = _contact_eps(domain)
    soup = _edge_soup(domain, _reach_for(domain, x, y, z))
    for d in _incident_directions(domain, y, soup, ceps):
        if _wedge_contains_strict(y, x, z, d):
            return None
    r = min(dist(y, x), dist(y, z), _clearance(domain, y, soup, ceps)) / 2.0
    if not math.isfinite(r) or r <= 0.0:
        return None

    def sector_clean(rad: float) -> bool:
        ta = math.atan2(x[1] - y[1], x[0] - y[0])
        tb = math.atan2(z[1] - y[1], z[0] - y[0])
        if orientation(y, x, z) < 0:
            ta, tb = tb, ta
        if tb <= ta:
            tb += 2.0 * math.pi
        for i in range(1, 11):
            ang = ta + (tb - ta) * i / 11.0
            for f in (0.25, 0.5, 0.75, 1.0):
                p = (
                    y[0] + f * rad * math.cos(ang),
                    y[1] + f * rad * math.sin(ang),
                )
                if domain.locate(p) != INSIDE:
                    return False
        return True

    for _ in range(60):
        if sector_clean(r):
            return BoundaryAngle(x=x, y=y, z=z, radius_witness=r)
        r /= 2.0
    return None


# ------------------------------------------------------------------- gamma


def _in_closed_wedge(y, x, z, w) -> bool:
    if orientation(y, x, z) > 0:
        return orientation(y, x, w) >= 0 and orientation(y, w, z) >= 0
    return orientation(y, z, w) >= 0 and orientation(y, w, x) >= 0


def gamma_set(domain: PlanarDomain, angle: BoundaryAngle, candidates):
    """Members w of the candidate family on the rim of the wedge hull whose
    chord ]y,w[ runs through the domain and misses the hull body.

    The hull E is taken over the candidates inside the closed wedge of the
    angle; the apex itself never lands in E, so chords from it are well
    defined.
    """
    if angle is None:
        raise ValueError("gamma_set needs a valid angle")
    y = angle.y
    wedge = []
    for p in candidates:
        q = (float(p[0]), float(p[1]))
        if q != y and q not in wedge and _in_closed_wedge(
            y, angle.x, angle.z, q
        ):
            wedge.append(q)
    if not wedge:
        wedge = [angle.x, angle.z]
    hull = convex_hull(wedge)
    if len(hull) >= 3:
        body = Polygon(hull)
        rim = body.boundary
    elif len(hull) == 2:
        body = LineString(hull)
        rim = body
    else:
        body = ShapelyPoint(hull[0])
        rim = body
    ceps = _contact_eps(domain)
    members = []
    for w in wedge:
        if rim.distance(ShapelyPoint(w)) > ceps:
            continue
        cut = LineString([y, w]).intersection(body)
        if cut.length > 2.0 * ceps + 1e-9 * dist(y, w):
            continue
        if not is_boundary_interval(domain, y, w):
            continue
        members.append(w)
    gx = (float(angle.x[0]), float(angle.x[1]))
    gz = (float(angle.z[0]), float(angle.z[1]))
    assert gx in members, "gamma set must keep the first leg endpoint"
    assert gz in members, "gamma set must keep the second leg endpoint"
    return GammaSet(angle=angle, hull=tuple(hull), members=tuple(members))


# --------------------------------------------------- interval joinability


def _segment_in_open(domain: PlanarDomain, a, b) -> bool:
    """Closed segment between two interior points staying in the open
    domain (no boundary contact at all)."""
    points, runs = _segment_events(domain, a, b)
    if runs:
        return False
    if any(0 <= t <= 1 for t in points):
        return False
    mid = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
    return domain.locate(mid) == INSIDE


def intervals_joined(
    domain: PlanarDomain,
    i1: BoundaryInterval,
    i2: BoundaryInterval,
    samples: int = 7,
) -> bool:
    """Direct join: some chord between interior points of the two
    intervals lies in the open domain."""
    ts = [(k + 1) / (samples + 1) for k in range(samples)]
    for t1 in ts:
        z1 = i1.point_at(t1)
        for t2 in ts:
            z2 = i2.point_at(t2)
            if _segment_in_open(domain, z1, z2):
                return True
    return False


def interval_equivalence_classes(domain: PlanarDomain, intervals, samples=7):
    """Transitive closure of direct joins; returns sorted index sets."""
    n = len(intervals)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if find(i) == find(j):
                continue
            if intervals_joined(domain, intervals[i], intervals[j], samples):
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), set()).add(i)
    return sorted(groups.values(), key=min)


# ------------------------------------------------------------ decomposition


def _analysis_radius(domain: PlanarDomain) -> float:
    return 64.0 * (domain.max_abs_coord() + 1.0)


def _universe_polygon(domain: PlanarDomain, R: float):
    """Closure of the domain clipped to the analysis box as a shapely
    polygon.  Slits carry no area and enter later as cut lines."""
    eps = domain.tolerance.eps_flat
    B = box(-R, -R, R, R)
    if domain.kind == "bounded":
        poly = Polygon(domain.loops[0].polyline(eps))
        for lp in domain.loops[1:]:
            poly = poly.difference(Polygon(lp.polyline(eps)))
        return poly
    if domain.kind == "clipped":
        poly = B
        for hp in domain.halfplanes:
            poly = poly.intersection(_halfplane_patch(hp, R))
        return poly
    poly = B
    for lp in domain.loops:
        ring = (
            lp.polyline(eps)
            if lp.closed
            else domain._chain_closure(lp, 4.0 * R)
        )
        poly = poly.difference(Polygon(ring))
    return poly


def _support_patch(n, c: float, R: float) -> Polygon:
    """The halfplane n . x <= c as a rectangle covering the analysis box."""
    t = (-n[1], n[0])
    nn = n[0] * n[0] + n[1] * n[1]
    base = (n[0] * c / nn, n[1] * c / nn)
    L = 8.0 * R
    return Polygon(
        [
            (base[0] - L * t[0], base[1] - L * t[1]),
            (base[0] + L * t[0], base[1] + L * t[1]),
            (base[0] + L * t[0] - L * n[0], base[1] + L * t[1] - L * n[1]),
            (base[0] - L * t[0] - L * n[0], base[1] - L * t[1] - L * n[1]),
        ]
    )


def _halfplane_patch(hp, R: float) -> Polygon:
    return _support_patch(hp.n, hp.c, R)


def _cut_lines(domain: PlanarDomain, R: float):
    """Slit polylines and ray extensions as shapely lines; they separate
    open regions without carrying area."""
    eps = domain.tolerance.eps_flat
    out = []
    L = 8.0 * R

    def ray_piece(p0, d):
        n = math.hypot(d[0], d[1])
        if n > 0.0:
            out.append(
                LineString([p0, (p0[0] + d[0] / n * L, p0[1] + d[1] / n * L)])
            )

    for sl in domain.slits:
        pts = sl.polyline(eps)
        if len(pts) >= 2:
            out.append(LineString(pts))
        if sl.ray_start is not None:
            ray_piece(pts[0], sl.ray_start)
        if sl.ray_end is not None:
            ray_piece(pts[-1], sl.ray_end)
    return out


def _finite_boundary_points(domain: PlanarDomain):
    """Vertices of the boundary: chain points of loops and slits, and for
    clipped domains the feasible corners and anchors of the clip lines."""
    eps = domain.tolerance.eps_flat
    pts = []
    for lp in domain.loops:
        pts.extend(lp.polyline(eps))
    for sl in domain.slits:
        pts.extend(sl.polyline(eps))
    hps = domain.halfplanes
    ctol = _contact_eps(domain)

    def feasible(p):
        return all(hp.value(p) <= ctol * (1.0 + abs(hp.c)) for hp in hps)

    for i, hp in enumerate(hps):
        nn = hp.n[0] * hp.n[0] + hp.n[1] * hp.n[1]
        base = (hp.n[0] * hp.c / nn, hp.n[1] * hp.c / nn)
        if feasible(base):
            pts.append(base)
        for other in hps[i + 1 :]:
            det = hp.n[0] * other.n[1] - hp.n[1] * other.n[0]
            if abs(det) <= 1e-12:
                continue
            corner = (
                (hp.c * other.n[1] - other.c * hp.n[1]) / det,
                (hp.n[0] * other.c - other.n[0] * hp.c) / det,
            )
            if feasible(corner):
                pts.append(corner)
    return pts


def _recession_dirs(domain: PlanarDomain):
    """Unit directions in which the boundary runs off to infinity."""
    dirs = []

    def push(d):
        n = math.hypot(d[0], d[1])
        if n <= 0.0:
            return
        u = (d[0] / n, d[1] / n)
        for v in dirs:
            if abs(u[0] - v[0]) <= 1e-12 and abs(u[1] - v[1]) <= 1e-12:
                return
        dirs.append(u)

    for lp in domain.loops:
        if not lp.closed:
            push(lp.ray_start)
            push(lp.ray_end)
    for sl in domain.slits:
        if sl.ray_start is not None:
            push(sl.ray_start)
        if sl.ray_end is not None:
            push(sl.ray_end)
    hps = domain.halfplanes
    for i, hp in enumerate(hps):
        nn = hp.n[0] * hp.n[0] + hp.n[1] * hp.n[1]
        base = (hp.n[0] * hp.c / nn, hp.n[1] * hp.c / nn)
        for t in ((-hp.n[1], hp.n[0]), (hp.n[1], -hp.n[0])):
            # the clip line escapes along t iff every other constraint
            # either strictly opens up along t or is parallel and satisfied
            ok = True
            for j, other in enumerate(hps):
                if j == i:
                    continue
                s = other.n[0] * t[0] + other.n[1] * t[1]
                if s > 1e-12:
                    ok = False
                    break
                if abs(s) <= 1e-12 and other.value(base) > 1e-9 * (
                    1.0 + abs(other.c)
                ):
                    ok = False
                    break
            if ok:
                push(t)
    return dirs


def _hull_with_recession(pts, dirs, R: float):
    """Closed convex hull of the points swept along the recession
    directions, clipped to the analysis box.

    Every halfplane n . x <= max(n . p) with n nonpositive against all
    recession directions supports the hull, and the facet normals are
    among the finite-hull edge normals and the directions orthogonal or
    opposite to the recession set, so intersecting those reproduces the
    hull exactly inside the box.
    """
    cands = []

    def admissible(u):
        return all(u[0] * d[0] + u[1] * d[1] <= 1e-12 for d in dirs)

    def push(n):
        ln = math.hypot(n[0], n[1])
        if ln <= 0.0:
            return
        u = (n[0] / ln, n[1] / ln)
        if not admissible(u):
            return
        for v in cands:
            if abs(u[0] - v[0]) <= 1e-12 and abs(u[1] - v[1]) <= 1e-12:
                return
        cands.append(u)

    for d in dirs:
        push((-d[1], d[0]))
        push((d[1], -d[0]))
        push((-d[0], -d[1]))
    hull = convex_hull(pts) if len(pts) >= 2 else []
    if len(hull) >= 3:
        for i, p in enumerate(hull):
            q = hull[(i + 1) % len(hull)]
            push((q[1] - p[1], -(q[0] - p[0])))
    elif len(hull) == 2:
        p, q = hull
        push((q[1] - p[1], -(q[0] - p[0])))
        push((p[1] - q[1], q[0] - p[0]))
    geom = box(-R, -R, R, R)
    if not pts:
        return geom
    for n in cands:
        c = max(n[0] * p[0] + n[1] * p[1] for p in pts)
        geom = geom.intersection(_support_patch(n, c, R))
    return geom


def _component_split(region, cuts, R: float):
    """Components of the region after slicing along the cut lines.

    Cuts that dangle into a part without crossing it leave the part whole,
    matching the topology of an open set minus a line piece.
    """
    tiny = (1e-9 * R) ** 2
    parts = [
        g
        for g in getattr(region, "geoms", [region])
        if isinstance(g, Polygon) and g.area > tiny
    ]
    if not cuts:
        return parts
    cut_u = unary_union(cuts)
    out = []
    for p in parts:
        if not p.intersects(cut_u):
            out.append(p)
            continue
        faces = [
            f
            for f in polygonize(unary_union([p.boundary, cut_u]))
            if f.area > tiny and p.contains(f.representative_point())
        ]
        out.extend(faces if faces else [p])
    return out


def _touches_rim(poly: Polygon, R: float) -> bool:
    minx, miny, maxx, maxy = poly.bounds
    pad = 1e-9 * R
    return (
        minx <= -R + pad
        or miny <= -R + pad
        or maxx >= R - pad
        or maxy >= R - pad
    )


def _line_components(geom, R: float) -> int:
    """Connected components of a one dimensional boundary collection."""
    lines = []
    for g in getattr(geom, "geoms", [geom]):
        if isinstance(g, LineString) and g.length > 1e-9 * R:
            lines.append(g)
        elif isinstance(g, (MultiLineString, GeometryCollection)):
            for h in g.geoms:
                if isinstance(h, LineString) and h.length > 1e-9 * R:
                    lines.append(h)
    if not lines:
        return 0
    fused = unary_union(lines)
    if isinstance(fused, LineString):
        return 1
    merged = linemerge(fused)
    if isinstance(merged, LineString):
        return 1
    comps = [g for g in merged.geoms if g.length > 1e-9 * R]
    # linemerge keeps junction pieces apart; reunite touching ones
    n = len(comps)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    tol = 1e-9 * R
    for i in range(n):
        for j in range(i + 1, n):
            if find(i) != find(j) and comps[i].distance(comps[j]) <= tol:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})


def decompose_Fu(domain: PlanarDomain) -> FuDecomposition:
    """Split the domain along the convex hull of its boundary.

    Returns the hull, the component count and unboundedness of the part
    outside the hull, that part's boundary component count (always at most
    two), and the bounded pockets inside the hull.  When the boundary runs
    to infinity the hull is unbounded and is reported clipped to the
    analysis box.
    """
    R = _analysis_radius(domain)
    U = _universe_polygon(domain, R)
    pts = _finite_boundary_points(domain)
    dirs = _recession_dirs(domain)
    cuts = _cut_lines(domain, R)

    if dirs:
        hull_geom = _hull_with_recession(pts, dirs, R)
        hull = tuple(hull_geom.exterior.coords)[:-1] if hull_geom.area > 0 else ()
    else:
        finite = convex_hull(pts) if pts else []
        hull = tuple(finite)
        hull_geom = Polygon(finite) if len(finite) >= 3 else Polygon()

    F = U.difference(hull_geom) if hull_geom.area > 0 else U
    f_parts = _component_split(F, cuts, R)
    f_unbounded = any(_touches_rim(p, R) for p in f_parts)

    if f_parts:
        rim = box(-R, -R, R, R).boundary
        pieces = [p.boundary for p in f_parts]
        for cut in cuts:
            for p in f_parts:
                seg = cut.intersection(p)
                if seg.length > 0.0:
                    pieces.append(seg)
        fb = unary_union(pieces).difference(rim.buffer(1e-9 * R))
        boundary_f = _line_components(fb, R)
    else:
        boundary_f = 0
    assert boundary_f <= 2, "hull-exterior boundary splits into > 2 pieces"

    if hull_geom.area > 0:
        inner = U.intersection(hull_geom)
        u_parts = [
            p
            for p in _component_split(inner, cuts, R)
            if not _touches_rim(p, R)
        ]
    else:
        u_parts = []

    return FuDecomposition(
        hull=hull,
        f_components=len(f_parts),
        f_unbounded=f_unbounded,
        boundary_f_components=boundary_f,
        u_components=tuple(tuple(p.exterior.coords)[:-1] for p in u_parts),
        f_parts=tuple(tuple(p.exterior.coords)[:-1] for p in f_parts),
    )
