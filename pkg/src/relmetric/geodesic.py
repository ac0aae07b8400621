"""Shortest paths in the closure of a planar domain; the relative boundary
metric.

The engine builds a visibility graph over every boundary vertex plus the two
query points.  Candidate segments are screened against the whole boundary
edge soup by a filtered numeric kernel; only the uncertain ones fall back to
an exact rational slow path.  Where the domain is locally disconnected
around a vertex (slit interiors, ray kinks, clip-window junctions) the
vertex carries one graph node per angular sector, so a path can never
teleport across a slit; passing straight through a vertex is allowed exactly
when both directions lie in one in-domain sector.

Unbounded domains are clipped to a square window sized from the query; the
window rim takes part in the graph as ordinary edges, and any optimal path
that touches the rim triggers a retry with a doubled window.
"""

import heapq
import math
import os
import random
import weakref
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import kernels
from ._kernels_py import _filtered_sign
from .domain import (
    BOUNDARY,
    INSIDE,
    OUTSIDE,
    BoundaryPoint,
    PlanarDomain,
    diagnose,
)
from .geom import (
    Arc2,
    dist,
    on_segment,
    orientation,
    point_line_distance,
    segment_intersection_params,
)

_MAX_WINDOW_RETRIES = 7


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("BOUNDARY_RIGIDITY_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class GeodesicPath:
    """A shortest path in the closure of a domain.

    pieces: per-segment classification; a piece is "boundary" when it runs
    along the boundary and "interior" when only its endpoints may touch it.
    refinement_change reports the length change under a 4x finer flattening
    for domains with circular arcs (None for purely polygonal boundaries).
    """

    endpoints: tuple
    vertices: tuple
    length: float
    pieces: tuple
    refinement_change: float = None

    @property
    def finite(self) -> bool:
        return math.isfinite(self.length)

    def to_json(self):
        doc = {
            "endpoints": [list(p) for p in self.endpoints],
            "vertices": [list(p) for p in self.vertices],
            "length": self.length,
            "pieces": [
                {"a": list(a), "b": list(b), "location": loc}
                for (a, b), loc in self.pieces
            ],
        }
        if self.refinement_change is not None:
            doc["refinement_change"] = self.refinement_change
        return doc


@dataclass
class MetricReport:
    triples: int
    max_triangle_violation: float
    max_symmetry_violation: float
    max_identity_violation: float

    def to_json(self):
        return {
            "triples": self.triples,
            "max_triangle_violation": self.max_triangle_violation,
            "max_symmetry_violation": self.max_symmetry_violation,
            "max_identity_violation": self.max_identity_violation,
        }


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _dot_sign(o, a, b) -> int:
    """Exact sign of (a - o) . (b - o)."""
    ox, oy = Fraction(o[0]), Fraction(o[1])
    v = (Fraction(a[0]) - ox) * (Fraction(b[0]) - ox) + (
        Fraction(a[1]) - oy
    ) * (Fraction(b[1]) - oy)
    return _sign(v)


class _Fan:
    """Angular structure around one vertex.

    rays: incident edge endpoints, CCW by angle.  Sector i spans CCW from
    ray i to ray i+1 (a single ray spans the full turn minus itself; no rays
    means an isolated point whose sector is the whole plane).  nodes[i] is
    the graph node for sector i, or None when the sector leaves the domain.
    """

    __slots__ = ("xy", "rays", "nodes", "on_rim", "ceps")

    def __init__(self, xy, rays, nodes, on_rim, ceps=0.0):
        self.xy = xy
        self.rays = rays
        self.nodes = nodes
        self.on_rim = on_rim
        self.ceps = ceps

    def sectors_toward(self, target):
        """Sector ids whose closed cone contains the direction xy -> target.

        Targets within contact range of a ray count as on-ray, so float
        query points riding a few ulp off a boundary edge still see the
        sectors on both of its sides.
        """
        v = self.xy
        k = len(self.rays)
        if k <= 1:
            return [0]
        hits = [
            i
            for i, z in enumerate(self.rays)
            if _dot_sign(v, z, target) > 0
            and (
                orientation(v, z, target) == 0
                or point_line_distance(target, v, z) <= self.ceps
            )
        ]
        if hits:
            out = set()
            for i in hits:
                out.add((i - 1) % k)
                out.add(i)
            return sorted(out)
        out = []
        for i in range(k):
            a = self.rays[i]
            b = self.rays[(i + 1) % k]
            oab = orientation(v, a, b)
            oat = orientation(v, a, target)
            otb = orientation(v, target, b)
            if oab > 0:
                inside = oat > 0 and otb > 0
            elif oab < 0:
                inside = oat > 0 or otb > 0
            else:
                inside = oat > 0 if _dot_sign(v, a, b) < 0 else oat != 0
            if inside:
                out.append(i)
        return out

    def node_ids_toward(self, target):
        return [
            self.nodes[s]
            for s in self.sectors_toward(target)
            if self.nodes[s] is not None
        ]


class GeodesicEngine:
    """Visibility graph engine for one domain (and one clip window size)."""

    def __init__(self, domain: PlanarDomain, window=None, flatten_eps=None,
                 threads=None):
        self.domain = domain
        self.window = window
        self.flatten_eps = (
            flatten_eps if flatten_eps is not None else domain.tolerance.eps_flat
        )
        self.threads = threads if threads is not None else _default_threads()
        if domain.kind != "bounded" and window is None:
            raise ValueError("unbounded domain needs a clip window")
        # query points arrive as floats and may sit a few ulp off the exact
        # boundary; contacts within this range count as on-boundary
        self.contact_eps = domain.tolerance.eps_geom * (
            1.0 + domain.max_abs_coord() + (window or 0.0)
        )
        self._build_soup()
        self._build_fans()
        self._adj = None

    # ------------------------------------------------------------------ soup

    def _build_soup(self):
        eps = self.flatten_eps
        R = self.window
        segs = []
        is_window = []

        def add(a, b, win=False):
            if a != b:
                segs.append((a, b))
                is_window.append(win)

        chains = []
        for lp in self.domain.loops:
            pts = [tuple(p) for p in lp.polyline(eps)]
            if lp.closed:
                for i in range(len(pts)):
                    add(pts[i], pts[(i + 1) % len(pts)])
            else:
                chains.append((pts, lp.ray_start, lp.ray_end))
        for sl in self.domain.slits:
            chains.append(([tuple(p) for p in sl.points], sl.ray_start,
                           sl.ray_end))

        ray_segs = []
        for pts, rs, re_ in chains:
            pts = list(pts)
            if rs is not None:
                d = _unit(rs)
                far = (pts[0][0] + 8 * R * d[0], pts[0][1] + 8 * R * d[1])
                ray_segs.append((pts[0], far))
            if re_ is not None:
                d = _unit(re_)
                far = (pts[-1][0] + 8 * R * d[0], pts[-1][1] + 8 * R * d[1])
                ray_segs.append((pts[-1], far))
            for a, b in zip(pts, pts[1:]):
                add(a, b)

        line_segs = []
        if self.domain.kind == "clipped":
            for hp in self.domain.halfplanes:
                seg = _clip_line_to_box(hp.n, hp.c, R)
                if seg is not None:
                    line_segs.append(seg)
            line_segs = _split_mutual(line_segs)

        if R is not None:
            rim_cuts = {0: [], 1: [], 2: [], 3: []}
            sides = _box_sides(R)
            for a, b in line_segs:
                for p in (a, b):
                    si = _rim_side(p, R)
                    if si is not None:
                        rim_cuts[si].append(p)
            split_rays = []
            for a, b in ray_segs:
                cut = None
                for si, (sa, sb) in enumerate(sides):
                    kind, t = segment_intersection_params(a, b, sa, sb)
                    if kind == "point" and 0 < t < 1:
                        p = _exact_rim_point(a, b, t, si, R)
                        rim_cuts[si].append(p)
                        cut = p
                        break
                if cut is None:
                    split_rays.append((a, b))
                else:
                    split_rays.append((a, cut))
                    split_rays.append((cut, b))
            for a, b in split_rays + line_segs:
                add(a, b)
            for si, (sa, sb) in enumerate(sides):
                cuts = sorted(set(rim_cuts[si]) - {sa, sb},
                              key=lambda p: dist(sa, p))
                run = [sa] + cuts + [sb]
                for a, b in zip(run, run[1:]):
                    add(a, b, win=True)
        else:
            for a, b in ray_segs + line_segs:
                add(a, b)

        segs, is_window = _split_mutual(segs, is_window)
        self.segs = segs
        self.seg_window = is_window
        self.ea = np.array([s[0] for s in segs], dtype=float)
        self.eb = np.array([s[1] for s in segs], dtype=float)
        self.direct = {}
        for eid, (a, b) in enumerate(segs):
            self.direct[frozenset((a, b))] = eid

        verts = sorted({p for s in segs for p in s})
        self.verts = verts
        self._verts_np = np.array(verts, dtype=float).reshape(len(verts), 2)
        self.vindex = {p: i for i, p in enumerate(verts)}
        self.incident = [[] for _ in verts]
        for eid, (a, b) in enumerate(segs):
            self.incident[self.vindex[a]].append((b, eid))
            self.incident[self.vindex[b]].append((a, eid))

    # ------------------------------------------------------------------ fans

    def _build_fans(self):
        verts = self.verts
        n = len(verts)
        if n == 0:
            self.fans, self.node_pos, self.node_rim = [], [], []
            return
        vx = np.array([p[0] for p in verts])
        vy = np.array([p[1] for p in verts])
        ax, ay = self.ea[:, 0], self.ea[:, 1]
        bx, by = self.eb[:, 0], self.eb[:, 1]
        dx, dy = bx - ax, by - ay
        den = dx * dx + dy * dy
        t = ((vx[:, None] - ax) * dx + (vy[:, None] - ay) * dy) / den
        t = np.clip(t, 0.0, 1.0)
        ex = ax + t * dx - vx[:, None]
        ey = ay + t * dy - vy[:, None]
        d2 = ex * ex + ey * ey
        for vi, inc in enumerate(self.incident):
            for _, eid in inc:
                d2[vi, eid] = np.inf
        lfs = np.sqrt(d2.min(axis=1)) if len(self.segs) else np.full(n, np.inf)

        R = self.window
        self.fans = []
        self.node_pos = []
        self.node_rim = []
        nid = 0
        for vi, v in enumerate(verts):
            inc = self.incident[vi]
            rays = sorted(
                {z for z, _ in inc},
                key=lambda z: math.atan2(z[1] - v[1], z[0] - v[0]),
            )
            on_rim = R is not None and (
                abs(v[0]) == R or abs(v[1]) == R
            )
            angs = [math.atan2(z[1] - v[1], z[0] - v[0]) for z in rays]
            min_len = min(
                (dist(v, z) for z, _ in inc), default=1.0
            )
            r = 0.25 * min(min_len, lfs[vi] if math.isfinite(lfs[vi]) else min_len)
            if r <= 0.0:
                r = 1e-9 * max(1.0, abs(v[0]), abs(v[1]))
            k = len(rays)
            nodes = []
            if k == 0:
                mids = [0.0]
            elif k == 1:
                mids = [angs[0] + math.pi]
            else:
                mids = []
                for i in range(k):
                    a0 = angs[i]
                    a1 = angs[(i + 1) % k]
                    if a1 <= a0:
                        a1 += 2 * math.pi
                    mids.append((a0 + a1) / 2)
            for mid in mids:
                probe = (v[0] + r * math.cos(mid), v[1] + r * math.sin(mid))
                if self._in_closure(probe):
                    nodes.append(nid)
                    self.node_pos.append(v)
                    self.node_rim.append(on_rim)
                    nid += 1
                else:
                    nodes.append(None)
            self.fans.append(_Fan(v, rays, nodes, on_rim, self.contact_eps))

    # ------------------------------------------------------ membership tests

    def _in_closure(self, p) -> bool:
        R = self.window
        if R is not None and (abs(p[0]) > R or abs(p[1]) > R):
            return False
        return self.domain.locate(p) != OUTSIDE

    def _soup_distance_batch(self, pts):
        """Min distance from each point to the edge soup; pts (n, 2)."""
        n = len(pts)
        if n == 0 or len(self.ea) == 0:
            return np.full(n, np.inf)
        d = self.eb - self.ea
        ln2 = (d * d).sum(1)
        ln2[ln2 == 0.0] = 1.0
        out = np.empty(n)
        step = max(1, 2_000_000 // max(len(self.ea), 1))
        for lo in range(0, n, step):
            blk = pts[lo:lo + step]
            w = blk[:, None, :] - self.ea[None, :, :]
            t = np.clip((w * d[None]).sum(2) / ln2[None], 0.0, 1.0)
            proj = self.ea[None] + t[..., None] * d[None]
            out[lo:lo + len(blk)] = np.sqrt(
                ((blk[:, None, :] - proj) ** 2).sum(2)
            ).min(1)
        return out

    def _soup_distance(self, p) -> float:
        return float(
            self._soup_distance_batch(np.asarray([p], dtype=float))[0]
        )

    def _in_closure_tol(self, p) -> bool:
        """Closure membership with contact slack for float query points."""
        if self._in_closure(p):
            return True
        R = self.window
        if R is not None and (abs(p[0]) > R or abs(p[1]) > R):
            return False
        return self._soup_distance(p) <= self.contact_eps

    def _batch_in_closure(self, pts):
        """Vectorized closure membership; near-boundary points are re-checked
        exactly.  pts: (n, 2) float array."""
        n = len(pts)
        if n == 0:
            return np.zeros(0, dtype=bool)
        px, py = pts[:, 0], pts[:, 1]
        ok = np.ones(n, dtype=bool)
        unsure = np.zeros(n, dtype=bool)
        R = self.window
        if R is not None:
            ok &= (np.abs(px) <= R) & (np.abs(py) <= R)
        dom = self.domain
        if dom.kind == "clipped":
            for hp in dom.halfplanes:
                val = hp.n[0] * px + hp.n[1] * py - hp.c
                scale = abs(hp.c) + np.abs(px) + np.abs(py)
                ok &= val <= 0
                unsure |= np.abs(val) <= 1e-12 * (1.0 + scale)
        eps = self.flatten_eps
        if dom.kind == "bounded":
            outer = dom.loops[0].polyline(eps)
            par, uns = _parity(px, py, outer)
            ok &= par
            unsure |= uns
            for lp in dom.loops[1:]:
                par, uns = _parity(px, py, lp.polyline(eps))
                ok &= ~par
                unsure |= uns
        else:
            scale = 64.0 * (dom.max_abs_coord() + (R or 0.0) + 1.0)
            for lp in dom.loops:
                poly = (
                    lp.polyline(eps)
                    if lp.closed
                    else dom._chain_closure(lp, scale)
                )
                par, uns = _parity(px, py, poly)
                ok &= ~par
                unsure |= uns
        bad = unsure & ok
        for i in np.nonzero(bad)[0]:
            ok[i] = self._in_closure_tol((float(px[i]), float(py[i])))
        # parity misses points riding a few ulp off an edge (and never flags
        # exactly-horizontal contacts): contact range counts as closure
        miss = np.nonzero(~ok)[0]
        if len(miss):
            near = self._soup_distance_batch(pts[miss]) <= self.contact_eps
            if R is not None:
                inwin = (np.abs(px[miss]) <= R) & (np.abs(py[miss]) <= R)
                near &= inwin
            ok[miss] |= near
        return ok

    # ------------------------------------------------------------ admission

    def _classify(self, pa, pb):
        if self.threads > 1 and len(pa) > 4096:
            m = self.threads
            idx = np.array_split(np.arange(len(pa)), m)
            with ThreadPoolExecutor(max_workers=m) as ex:
                parts = list(
                    ex.map(
                        lambda ii: kernels.classify_candidates(
                            pa[ii], pb[ii], self.ea, self.eb,
                            contact_eps=self.contact_eps,
                        ),
                        idx,
                    )
                )
            return np.concatenate(parts)
        return kernels.classify_candidates(
            pa, pb, self.ea, self.eb, contact_eps=self.contact_eps
        )

    def _admit_batch(self, pairs):
        """pairs: list of (u, w) coordinate tuples.  Returns a bool list."""
        if not pairs:
            return []
        pa = np.array([p[0] for p in pairs], dtype=float)
        pb = np.array([p[1] for p in pairs], dtype=float)
        verdict = self._classify(pa, pb)
        out = [False] * len(pairs)
        direct = []
        for i, (u, w) in enumerate(pairs):
            if frozenset((u, w)) in self.direct:
                out[i] = True
                direct.append(i)
        clean = [
            i
            for i in range(len(pairs))
            if not out[i] and verdict[i] == kernels.CLEAN
        ]
        if clean:
            mids = (pa[clean] + pb[clean]) / 2.0
            good = self._batch_in_closure(mids)
            for j, i in enumerate(clean):
                out[i] = bool(good[j])
        for i in range(len(pairs)):
            if not out[i] and verdict[i] == kernels.TOUCH:
                out[i] = self._slow_admit(pairs[i][0], pairs[i][1])
        return out

    def _touch_edges(self, u, w):
        """Edge ids not certifiably contact-free for segment u-w.

        Float filter only; sound: an excluded edge provably has no common
        point with the candidate, so it cannot contribute crossings, covered
        runs, or vertex events to the exact scan.
        """
        ea, eb = self.ea, self.eb
        if len(ea) == 0:
            return []
        ax, ay = u
        bx, by = w
        eax, eay = ea[:, 0], ea[:, 1]
        ebx, eby = eb[:, 0], eb[:, 1]
        disjoint = (
            (np.maximum(eax, ebx) < min(ax, bx))
            | (np.minimum(eax, ebx) > max(ax, bx))
            | (np.maximum(eay, eby) < min(ay, by))
            | (np.minimum(eay, eby) > max(ay, by))
        )
        d1, c1, _ = _filtered_sign(eax, eay, ebx, eby, ax, ay)
        d2, c2, _ = _filtered_sign(eax, eay, ebx, eby, bx, by)
        d3, c3, _ = _filtered_sign(ax, ay, bx, by, eax, eay)
        d4, c4, _ = _filtered_sign(ax, ay, bx, by, ebx, eby)
        sep = (c1 & c2 & (d1 * d2 > 0)) | (c3 & c4 & (d3 * d4 > 0))
        return np.nonzero(~(disjoint | sep))[0]

    def _slow_admit(self, u, w) -> bool:
        """Exact admissibility of segment u-w: no transversal boundary
        crossing, every off-boundary stretch inside the closure, and each
        vertex pass-through contained in a single in-domain sector."""
        covered = []
        vertex_events = {}
        cuts = {Fraction(0), Fraction(1)}
        ux, uy = Fraction(u[0]), Fraction(u[1])
        dxf = Fraction(w[0]) - ux
        dyf = Fraction(w[1]) - uy
        den = dxf * dxf + dyf * dyf
        for j in self._touch_edges(u, w):
            a, b = self.segs[j]
            kind, val = segment_intersection_params(u, w, a, b)
            if kind == "none":
                continue
            if kind == "overlap":
                t0, t1 = val
                covered.append((t0, t1))
                cuts.add(t0)
                cuts.add(t1)
                for z in (a, b):
                    t = (
                        (Fraction(z[0]) - ux) * dxf + (Fraction(z[1]) - uy) * dyf
                    ) / den
                    if 0 < t < 1:
                        vertex_events[z] = t
                        cuts.add(t)
                continue
            t = val
            o1 = orientation(a, b, u)
            o2 = orientation(a, b, w)
            o3 = orientation(u, w, a)
            o4 = orientation(u, w, b)
            if o1 * o2 < 0 and o3 * o4 < 0:
                # float query points sit a few ulp off the boundary: a
                # straddle confined to contact range is sliding or endpoint
                # contact, not a transversal crossing
                ceps = self.contact_eps
                if (
                    point_line_distance(u, a, b) <= ceps
                    and point_line_distance(w, a, b) <= ceps
                ):
                    ta = (
                        (Fraction(a[0]) - ux) * dxf
                        + (Fraction(a[1]) - uy) * dyf
                    ) / den
                    tb = (
                        (Fraction(b[0]) - ux) * dxf
                        + (Fraction(b[1]) - uy) * dyf
                    ) / den
                    if tb < ta:
                        ta, tb = tb, ta
                    t0 = max(ta, Fraction(0))
                    t1 = min(tb, Fraction(1))
                    if t0 < t1:
                        covered.append((t0, t1))
                        cuts.add(t0)
                        cuts.add(t1)
                    for z, tz in ((a, ta), (b, tb)):
                        if 0 < tz < 1:
                            vertex_events[z] = tz
                            cuts.add(tz)
                    continue
                x = (float(ux + t * dxf), float(uy + t * dyf))
                if dist(x, u) <= ceps or dist(x, w) <= ceps:
                    continue
                return False
            if t == 0 or t == 1:
                continue
            if o3 == 0:
                vertex_events[a] = t
            elif o4 == 0:
                vertex_events[b] = t
            else:
                x = (float(ux + t * dxf), float(uy + t * dyf))
                if dist(x, u) <= self.contact_eps or \
                        dist(x, w) <= self.contact_eps:
                    continue
                return False
            cuts.add(t)

        for z in vertex_events:
            if (
                dist(z, u) <= self.contact_eps
                or dist(z, w) <= self.contact_eps
            ):
                continue
            fan = self.fans[self.vindex[z]]
            back = set(
                s for s in fan.sectors_toward(u) if fan.nodes[s] is not None
            )
            fore = set(
                s for s in fan.sectors_toward(w) if fan.nodes[s] is not None
            )
            if not back & fore:
                return False

        merged = []
        for t0, t1 in sorted(covered):
            if merged and t0 <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], t1))
            else:
                merged.append((t0, t1))
        ordered = sorted(cuts)
        for ta, tb in zip(ordered, ordered[1:]):
            if any(c0 <= ta and tb <= c1 for c0, c1 in merged):
                continue
            tm = (ta + tb) / 2
            pt = (float(ux + tm * dxf), float(uy + tm * dyf))
            if not self._in_closure_tol(pt):
                return False
        return True

    # ---------------------------------------------------------------- graph

    def _covered_by_soup(self, u, w) -> bool:
        """True when segment [u, w] runs along boundary edges end to end
        (within contact tolerance).

        Erring toward True only drops connections that thread hairline
        gaps, which the metric should not depend on anyway; erring toward
        False would let a path switch sides across a wall it rode."""
        d = (w[0] - u[0], w[1] - u[1])
        L2 = d[0] * d[0] + d[1] * d[1]
        if L2 == 0.0:
            return True
        eps_t = self.contact_eps / math.sqrt(L2)
        ivs = []
        for a, b in self.segs:
            if (
                point_line_distance(a, u, w) <= self.contact_eps
                and point_line_distance(b, u, w) <= self.contact_eps
            ):
                ta = ((a[0] - u[0]) * d[0] + (a[1] - u[1]) * d[1]) / L2
                tb = ((b[0] - u[0]) * d[0] + (b[1] - u[1]) * d[1]) / L2
                if tb < ta:
                    ta, tb = tb, ta
                if tb < -eps_t or ta > 1.0 + eps_t:
                    continue
                ivs.append((ta, tb))
        ivs.sort()
        reach = 0.0
        for ta, tb in ivs:
            if ta > reach + eps_t:
                return False
            if tb > reach:
                reach = tb
            if reach >= 1.0 - eps_t:
                return True
        return reach >= 1.0 - eps_t

    def _ride_blocked_sides(self, u, w):
        """Sides of [u, w] against which another edge abuts strictly
        between the endpoints; a path hugging that side cannot pass."""
        d = (w[0] - u[0], w[1] - u[1])
        L2 = d[0] * d[0] + d[1] * d[1]
        eps_t = self.contact_eps / math.sqrt(L2) if L2 else 0.0
        blocked = set()
        for vi, z in enumerate(self.verts):
            if point_line_distance(z, u, w) > self.contact_eps:
                continue
            t = ((z[0] - u[0]) * d[0] + (z[1] - u[1]) * d[1]) / L2
            if t <= eps_t or t >= 1.0 - eps_t:
                continue
            for r, _ in self.incident[vi]:
                if point_line_distance(r, u, w) <= self.contact_eps:
                    continue
                s = orientation(u, w, r)
                if s:
                    blocked.add(s)
        return blocked

    @staticmethod
    def _sector_side(fan, s, u, w) -> int:
        """Side of directed line u -> w the mid-direction of sector s
        points to; 0 when undetermined (full-circle fan or mid along
        the line)."""
        k = len(fan.rays)
        if k <= 1:
            return 0
        v = fan.xy
        angs = [math.atan2(z[1] - v[1], z[0] - v[0]) for z in fan.rays]
        a0 = angs[s]
        a1 = angs[(s + 1) % k]
        if a1 <= a0:
            a1 += 2.0 * math.pi
        mid = 0.5 * (a0 + a1)
        dx, dy = w[0] - u[0], w[1] - u[1]
        cr = dx * math.sin(mid) - dy * math.cos(mid)
        if cr > 0.0:
            return 1
        if cr < 0.0:
            return -1
        return 0

    def _ride_combos(self, u, w, fu, fw):
        """Wireable node pairs for a segment leaving an endpoint exactly
        along an incident boundary edge.

        Riding a two-sided wall is approximated by interior paths on one
        side at a time, so when the segment lies on boundary edges end to
        end the sectors at u and w must sit on the same side of the ride
        and that side must be free of abutting edges in between.  When
        part of the segment crosses open space the wall end can be
        rounded there and every sector combination is reachable."""
        sa = [
            (s, self._sector_side(fu, s, u, w))
            for s in fu.sectors_toward(w)
            if fu.nodes[s] is not None
        ]
        sb = [
            (s, self._sector_side(fw, s, u, w))
            for s in fw.sectors_toward(u)
            if fw.nodes[s] is not None
        ]
        if not self._covered_by_soup(u, w):
            return [(fu.nodes[s], fw.nodes[t]) for s, _ in sa for t, _ in sb]
        blocked = self._ride_blocked_sides(u, w)
        out = []
        for s, side_a in sa:
            for t, side_b in sb:
                if side_a * side_b < 0:
                    continue
                side = side_a or side_b
                if side != 0 and side in blocked:
                    continue
                if side == 0 and len(blocked) == 2:
                    continue
                out.append((fu.nodes[s], fw.nodes[t]))
        return out

    def _ensure_static(self):
        if self._adj is not None:
            return
        nn = len(self.node_pos)
        adj = [[] for _ in range(nn)]
        vis = [vi for vi, f in enumerate(self.fans) if any(
            x is not None for x in f.nodes)]
        pairs = []
        pair_vi = []
        for ii in range(len(vis)):
            for jj in range(ii + 1, len(vis)):
                u = self.verts[vis[ii]]
                w = self.verts[vis[jj]]
                pairs.append((u, w))
                pair_vi.append((vis[ii], vis[jj]))
        admitted = self._admit_batch(pairs)
        for (u, w), (vi, wi), ok in zip(pairs, pair_vi, admitted):
            if not ok:
                continue
            fa, fb = self.fans[vi], self.fans[wi]
            na = fa.node_ids_toward(w)
            nb = fb.node_ids_toward(u)
            if not na or not nb:
                continue
            if len(na) > 1 or len(nb) > 1:
                combos = self._ride_combos(u, w, fa, fb)
            else:
                combos = [(na[0], nb[0])]
            wt = dist(u, w)
            for x, y in combos:
                adj[x].append((y, wt))
                adj[y].append((x, wt))
        self._adj = adj

    def query(self, p, q):
        """Returns (GeodesicPath, rim_touched)."""
        p = (float(p[0]), float(p[1]))
        q = (float(q[0]), float(q[1]))
        if p == q:
            return (
                GeodesicPath(endpoints=(p, q), vertices=(p,), length=0.0,
                             pieces=()),
                False,
            )
        # an admissible straight chord is always optimal (length >= chordal)
        if self._admit_batch([(p, q)])[0]:
            return self._finish(p, q, [p, q]), False
        self._ensure_static()
        nn = len(self.node_pos)
        P, Q = nn, nn + 1
        extra = {P: [], Q: []}
        pairs = [(p, q)]
        # None marks the p-q chord; fan owners are (endpoint tag, vertex
        # index) and a vertex index may equal Q, so a tuple sentinel would
        # collide
        owners = [None]
        for vi, fan in enumerate(self.fans):
            if all(x is None for x in fan.nodes):
                continue
            v = self.verts[vi]
            for src, tag in ((p, P), (q, Q)):
                if src != v:
                    pairs.append((src, v))
                    owners.append((tag, vi))
        admitted = self._admit_batch(pairs)
        for (u, w), owner, ok in zip(pairs, owners, admitted):
            if not ok:
                continue
            if owner is None:
                wt = dist(p, q)
                extra[P].append((Q, wt))
                extra[Q].append((P, wt))
                continue
            tag, vi = owner
            nb = self.fans[vi].node_ids_toward(u)
            wt = dist(u, w)
            for y in nb:
                extra[tag].append((y, wt))
                extra.setdefault(y, []).append((tag, wt))

        # A* with the straight-line lower bound; pop order changes versus
        # plain Dijkstra but relaxation sums are identical
        h_arr = [-1.0] * (nn + 2)

        def _h(node):
            h = h_arr[node]
            if h < 0.0:
                xy = p if node == P else self.node_pos[node]
                h = dist(xy, q)
                h_arr[node] = h
            return h

        h_arr[Q] = 0.0
        dist_arr = [math.inf] * (nn + 2)
        pred = [None] * (nn + 2)
        dist_arr[P] = 0.0
        heap = [(_h(P), 0.0, P)]
        while heap:
            _, d, node = heapq.heappop(heap)
            if d > dist_arr[node]:
                continue
            if node == Q:
                break
            nbrs = self._adj[node] if node < nn else []
            for y, wt in nbrs:
                nd = d + wt
                if nd < dist_arr[y]:
                    dist_arr[y] = nd
                    pred[y] = node
                    heapq.heappush(heap, (nd + _h(y), nd, y))
            for y, wt in extra.get(node, []):
                nd = d + wt
                if nd < dist_arr[y]:
                    dist_arr[y] = nd
                    pred[y] = node
                    heapq.heappush(heap, (nd + _h(y), nd, y))
        if not math.isfinite(dist_arr[Q]):
            return (
                GeodesicPath(endpoints=(p, q), vertices=(p, q),
                             length=math.inf, pieces=()),
                False,
            )
        chain = []
        node = Q
        rim = False
        while node is not None:
            if node == P:
                chain.append(p)
            elif node == Q:
                chain.append(q)
            else:
                chain.append(self.node_pos[node])
                rim = rim or self.node_rim[node]
            node = pred[node]
        chain.reverse()
        return self._finish(p, q, chain), rim

    def _collinear_between(self, a, b):
        """Soup vertices strictly inside segment a-b, near-to-far from a."""
        V = self._verts_np
        if len(V) == 0:
            return []
        ax, ay = a
        bx, by = b
        dx, dy = bx - ax, by - ay
        ln2 = dx * dx + dy * dy
        if ln2 == 0.0:
            return []
        cross = np.abs((V[:, 0] - ax) * dy - (V[:, 1] - ay) * dx)
        t = (V[:, 0] - ax) * dx + (V[:, 1] - ay) * dy
        band = 1e-9 * (1.0 + abs(ax) + abs(ay) + ln2)
        cand = np.nonzero((cross <= band) & (t > -band) & (t < ln2 + band))[0]
        out = [
            v
            for i in cand
            if (v := self.verts[int(i)]) != a and v != b
            and on_segment(a, b, v)
        ]
        out.sort(key=lambda v: dist(a, v))
        return out

    def _finish(self, p, q, chain):
        pts = [chain[0]]
        for c in chain[1:]:
            if c != pts[-1]:
                pts.append(c)
        full = [pts[0]]
        for a, b in zip(pts, pts[1:]):
            full.extend(self._collinear_between(a, b))
            full.append(b)
        pieces = []
        length = 0.0
        for a, b in zip(full, full[1:]):
            mid = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
            loc = (
                "boundary"
                if self._soup_distance(mid) <= self.contact_eps
                else "interior"
            )
            pieces.append(((a, b), loc))
            length += dist(a, b)
        return GeodesicPath(
            endpoints=(p, q),
            vertices=tuple(full),
            length=length,
            pieces=tuple(pieces),
        )


# ---------------------------------------------------------------- helpers


def _unit(v):
    n = math.hypot(v[0], v[1])
    return (v[0] / n, v[1] / n)


def _box_sides(R):
    c = [(-R, -R), (R, -R), (R, R), (-R, R)]
    return [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]


def _rim_side(p, R):
    if p[1] == -R and -R <= p[0] <= R:
        return 0
    if p[0] == R and -R <= p[1] <= R:
        return 1
    if p[1] == R and -R <= p[0] <= R:
        return 2
    if p[0] == -R and -R <= p[1] <= R:
        return 3
    return None


def _exact_rim_point(a, b, t, side, R):
    """Intersection of segment (a, b) with a rim side, the rim coordinate
    kept exact."""
    x = float(Fraction(a[0]) + t * (Fraction(b[0]) - Fraction(a[0])))
    y = float(Fraction(a[1]) + t * (Fraction(b[1]) - Fraction(a[1])))
    if side == 0:
        return (min(max(x, -R), R), -R)
    if side == 1:
        return (R, min(max(y, -R), R))
    if side == 2:
        return (min(max(x, -R), R), R)
    return (-R, min(max(y, -R), R))


def _clip_line_to_box(n, c, R):
    """Segment of the line n . x = c inside the square [-R, R]^2."""
    nx, ny = n
    pts = []
    if ny != 0:
        for x in (-R, R):
            y = (c - nx * x) / ny
            if -R <= y <= R:
                pts.append((x, y))
    if nx != 0:
        for y in (-R, R):
            x = (c - ny * y) / nx
            if -R <= x <= R:
                pts.append((x, y))
    uniq = sorted(set(pts))
    if len(uniq) < 2:
        return None
    a = uniq[0]
    b = max(uniq, key=lambda p: dist(a, p))
    if a == b:
        return None
    return (a, b)


def _split_mutual(segs, flags=None):
    """Subdivide segments at pairwise proper crossings.

    Soup admission treats whole boundary edges as slide-along-able, which
    is sound only when no two edges cross; descriptions whose pieces do
    cross (walls overhanging a region rim, say) are therefore subdivided
    at every crossing first.  With flags, each piece inherits its parent's
    flag and (pieces, flags) is returned.
    """
    n = len(segs)
    cuts = [[] for _ in segs]
    if n > 1:
        A = np.array([s[0] for s in segs], dtype=float)
        B = np.array([s[1] for s in segs], dtype=float)
        lo = np.minimum(A, B)
        hi = np.maximum(A, B)
        boxed = (
            (lo[:, None, 0] <= hi[None, :, 0])
            & (lo[None, :, 0] <= hi[:, None, 0])
            & (lo[:, None, 1] <= hi[None, :, 1])
            & (lo[None, :, 1] <= hi[:, None, 1])
        )
        for i, j in zip(*np.nonzero(np.triu(boxed, 1))):
            a, b = segs[i]
            c, d = segs[j]
            kind, t = segment_intersection_params(a, b, c, d)
            if kind == "point" and 0 < t < 1:
                x = (
                    float(Fraction(a[0]) + t * (Fraction(b[0]) - Fraction(a[0]))),
                    float(Fraction(a[1]) + t * (Fraction(b[1]) - Fraction(a[1]))),
                )
                cuts[i].append(x)
                kind2, t2 = segment_intersection_params(c, d, a, b)
                if kind2 == "point" and 0 < t2 < 1:
                    cuts[j].append(x)
    out = []
    out_flags = []
    for k, ((a, b), cc) in enumerate(zip(segs, cuts)):
        run = [a] + sorted(set(cc), key=lambda p: dist(a, p)) + [b]
        for u, w in zip(run, run[1:]):
            if u != w:
                out.append((u, w))
                out_flags.append(flags[k] if flags is not None else False)
    if flags is not None:
        return out, out_flags
    return out


def _parity(px, py, poly):
    """Even-odd crossing parity for points against a closed polyline.
    Returns (inside, uncertain); uncertain marks points whose ray test came
    too close to an edge for float arithmetic to be trusted."""
    n = len(poly)
    inside = np.zeros(px.shape, dtype=bool)
    unsure = np.zeros(px.shape, dtype=bool)
    if n < 3:
        return inside, unsure
    ax = np.array([poly[i][0] for i in range(n)])
    ay = np.array([poly[i][1] for i in range(n)])
    bx = np.roll(ax, -1)
    by = np.roll(ay, -1)
    chunk = max(1, 4_000_000 // max(n, 1))
    for lo in range(0, len(px), chunk):
        sl = slice(lo, lo + chunk)
        x = px[sl][:, None]
        y = py[sl][:, None]
        straddle = (ay > y) != (by > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = ax + (y - ay) * (bx - ax) / (by - ay)
        hits = straddle & (x < xint)
        inside[sl] = (hits.sum(axis=1) % 2).astype(bool)
        slope = np.where(straddle, np.abs(bx - ax) / np.maximum(
            np.abs(by - ay), 1e-300), 0.0)
        guard = 1e-10 * (1.0 + np.abs(ax) + np.abs(bx) + np.abs(x) + slope)
        unsure[sl] = (straddle & (np.abs(x - xint) <= guard)).any(axis=1)
    return inside, unsure


# ----------------------------------------------------------- public layer

_ENGINES = weakref.WeakKeyDictionary()


def engine_for(domain, window=None, flatten_eps=None) -> GeodesicEngine:
    per = _ENGINES.setdefault(domain, {})
    key = (window, flatten_eps)
    if key not in per:
        per[key] = GeodesicEngine(domain, window=window,
                                  flatten_eps=flatten_eps)
    return per[key]


def _has_arcs(domain) -> bool:
    return any(
        isinstance(e, Arc2) for lp in domain.loops for e in lp.edges
    )


def _boundary_distance(domain, p) -> float:
    best = math.inf
    for lp in domain.loops:
        for e in lp.edges:
            if isinstance(e, Arc2):
                d = math.hypot(p[0] - e.center[0], p[1] - e.center[1])
                ang = math.atan2(p[1] - e.center[1], p[0] - e.center[0])
                if _angle_in_sweep(e, ang):
                    best = min(best, abs(d - e.r))
                else:
                    best = min(best, dist(p, e.start()), dist(p, e.end()))
            else:
                best = min(best, _seg_dist(p, e.a, e.b))
    for sl in domain.slits:
        pts = sl.points
        if len(pts) == 1:
            best = min(best, dist(p, pts[0]))
        for a, b in zip(pts, pts[1:]):
            best = min(best, _seg_dist(p, a, b))
    return best


def _angle_in_sweep(arc, ang) -> bool:
    a0, a1, ccw = arc.a0, arc.a1, arc.ccw
    sweep = (a1 - a0) % (2 * math.pi) if ccw else (a0 - a1) % (2 * math.pi)
    if sweep == 0.0:
        sweep = 2 * math.pi
    off = (ang - a0) % (2 * math.pi) if ccw else (a0 - ang) % (2 * math.pi)
    return off <= sweep


def _seg_dist(p, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    den = dx * dx + dy * dy
    if den == 0.0:
        return dist(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / den
    t = min(max(t, 0.0), 1.0)
    return math.hypot(a[0] + t * dx - p[0], a[1] + t * dy - p[1])


def _require_in_closure(domain, p, eng=None):
    if eng is not None:
        # engine fast path: contact range then filtered parity; exact
        # locate only runs for points both tests refuse
        if eng._soup_distance(p) <= eng.contact_eps:
            return p
        if bool(eng._batch_in_closure(np.asarray([p], dtype=float))[0]):
            return p
    if domain.locate(p) != OUTSIDE:
        return p
    if _boundary_distance(domain, p) <= domain.tolerance.eps_flat * 1.001:
        return _snap_to_flat(domain, p)
    raise ValueError("point outside closure: %r" % (p,))


def _snap_to_flat(domain, p):
    """Project onto the flattened boundary (arc domains: points generated on
    the true arc sit just outside the chord polygon)."""
    best, bp = math.inf, p
    for poly in domain.flat_loops:
        n = len(poly)
        rng = range(n) if len(poly) > 2 else range(n - 1)
        for i in rng:
            a, b = poly[i], poly[(i + 1) % n]
            dx, dy = b[0] - a[0], b[1] - a[1]
            den = dx * dx + dy * dy
            if den == 0.0:
                continue
            t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / den
            t = min(max(t, 0.0), 1.0)
            c = (a[0] + t * dx, a[1] + t * dy)
            d = dist(p, c)
            if d < best:
                best, bp = d, c
    return bp


def _window_base(domain) -> float:
    m = domain.max_abs_coord()
    if domain.kind == "clipped":
        hps = domain.halfplanes
        for i in range(len(hps)):
            for j in range(i + 1, len(hps)):
                n1, c1 = hps[i].n, hps[i].c
                n2, c2 = hps[j].n, hps[j].c
                det = n1[0] * n2[1] - n1[1] * n2[0]
                if abs(det) > 1e-12:
                    x = (c1 * n2[1] - c2 * n1[1]) / det
                    y = (n1[0] * c2 - n2[0] * c1) / det
                    m = max(m, abs(x), abs(y))
    return m


def shortest_path(domain: PlanarDomain, p, q, window=None) -> GeodesicPath:
    """Exact shortest path between p and q in the closure of the domain.

    window: optional clip half-width for unbounded domains; must dominate
    the per-query formula (it is raised to it if not) and lets batches of
    queries share one cached visibility structure."""
    arcs = _has_arcs(domain)
    eng = (
        engine_for(domain, None, None)
        if domain.kind == "bounded" and not arcs
        else None
    )
    p = _require_in_closure(domain, (float(p[0]), float(p[1])), eng)
    q = _require_in_closure(domain, (float(q[0]), float(q[1])), eng)
    if p == q:
        return GeodesicPath(endpoints=(p, q), vertices=(p,), length=0.0,
                            pieces=())
    if arcs and diagnose(domain).is_convex:
        # chords of a convex closure are geodesics; no flattening error
        return GeodesicPath(
            endpoints=(p, q),
            vertices=(p, q),
            length=dist(p, q),
            pieces=(((p, q), "interior"),),
            refinement_change=0.0,
        )
    path = _windowed_query(domain, p, q, None, window)
    if arcs:
        fine = _windowed_query(domain, p, q,
                               domain.tolerance.eps_flat / 4.0, window)
        path = replace(path, refinement_change=abs(path.length - fine.length))
    return path


def _windowed_query(domain, p, q, flatten_eps, window=None) -> GeodesicPath:
    if domain.kind == "bounded":
        eng = engine_for(domain, None, flatten_eps)
        path, _ = eng.query(p, q)
        return path
    need = _window_base(domain) + max(abs(p[0]), abs(p[1]), abs(q[0]),
                                      abs(q[1])) + dist(p, q) + 1.0
    # round up to a power of two so nearby queries share one engine
    R = 2.0 ** math.ceil(math.log2(max(need, window or 0.0)))
    path = None
    for _ in range(_MAX_WINDOW_RETRIES):
        eng = engine_for(domain, R, flatten_eps)
        path, rim = eng.query(p, q)
        if path.finite and not rim:
            return path
        R *= 2.0
    return path


def relative_boundary_distance(domain: PlanarDomain, a, b):
    """The relative metric between two boundary points: infimum of interior
    path lengths, evaluated as the shortest-path length in the closure.

    At a declared singular vertex the value is the limit over boundary
    points approaching the vertex along each adjacent boundary direction
    (the smaller of the two one-sided limits)."""
    pa, ra = _boundary_query_point(domain, a)
    pb, rb = _boundary_query_point(domain, b)
    sa = _singular_ref(domain, pa, ra)
    sb = _singular_ref(domain, pb, rb)
    if sa is None and sb is None:
        return shortest_path(domain, pa, pb).length

    def eval_at(x, y):
        return shortest_path(domain, x, y).length

    eps = domain.tolerance.eps_metric
    if sa is not None and sb is None:
        return min(
            _one_sided_limit(domain, sa, side, lambda x: eval_at(x, pb), eps)
            for side in (+1, -1)
        )
    if sa is None:
        return min(
            _one_sided_limit(domain, sb, side, lambda y: eval_at(pa, y), eps)
            for side in (+1, -1)
        )
    vals = []
    for s1 in (+1, -1):
        for s2 in (+1, -1):
            vals.append(
                _one_sided_limit(
                    domain,
                    sa,
                    s1,
                    lambda x: _one_sided_limit(
                        domain, sb, s2, lambda y: eval_at(x, y), eps
                    ),
                    eps,
                )
            )
    return min(vals)


def truncated_distance_sequence(domain, a, b, ks=range(3, 15), side=+1):
    """Distances from boundary points at arclength 2^-k off a (a singular
    vertex) to b; the truncation protocol made visible for reports."""
    pa, ra = _boundary_query_point(domain, a)
    pb, _ = _boundary_query_point(domain, b)
    ref, s0 = ra
    out = []
    for k in ks:
        x = _component_point(domain, ref, s0 + side * 2.0 ** -k)
        out.append((k, shortest_path(domain, x, pb).length))
    return out


def _component_point(domain, ref, s):
    _, comp = domain.component(ref)
    return tuple(comp.point_at(s))


def _boundary_query_point(domain, a):
    """Accepts a BoundaryPoint or raw coordinates; returns (xy, (ref, s) or
    None)."""
    if isinstance(a, BoundaryPoint):
        return tuple(a.xy), (a.loop_ref, a.s)
    xy = (float(a[0]), float(a[1]))
    return xy, _find_on_boundary(domain, xy)


def _find_on_boundary(domain, xy):
    eps = max(domain.tolerance.eps_geom, 1e-12)
    for ref in domain.component_ids():
        _, comp = domain.component(ref)
        pts = comp.polyline(domain.tolerance.eps_flat)
        closed = getattr(comp, "closed", False)
        runs = zip(pts, pts[1:] + ([pts[0]] if closed else []))
        acc = 0.0
        for a, b in runs:
            el = dist(a, b)
            if el > 0.0 and _seg_dist(xy, a, b) <= eps:
                t = ((xy[0] - a[0]) * (b[0] - a[0]) + (xy[1] - a[1]) * (
                    b[1] - a[1])) / (el * el)
                return (ref, acc + min(max(t, 0.0), 1.0) * el)
            acc += el
    return None


def _singular_ref(domain, xy, ref_s):
    eps = max(domain.tolerance.eps_geom, 1e-12)
    for v in domain.singular_vertices:
        if dist(xy, v) <= eps:
            if ref_s is None:
                raise ValueError(
                    "singular vertex %r is not on a parametrized component"
                    % (v,)
                )
            return ref_s
    return None


def _one_sided_limit(domain, ref_s, side, fn, eps, kmax=24):
    ref, s0 = ref_s
    prev = None
    val = math.inf
    for k in range(3, kmax + 1):
        x = _component_point(domain, ref, s0 + side * 2.0 ** -k)
        val = fn(x)
        if prev is not None and abs(val - prev) <= eps:
            return val
        prev = val
    return val


def sample_boundary_point(domain, rng):
    comps = []
    for ref in domain.component_ids():
        _, comp = domain.component(ref)
        L = comp.length
        if L > 0.0:
            comps.append((ref, comp, L))
    if not comps:
        raise ValueError("domain has no one-dimensional boundary")
    total = sum(L for _, _, L in comps)
    r = rng.uniform(0.0, total)
    for ref, comp, L in comps:
        if r <= L or (ref, comp, L) == comps[-1]:
            return tuple(comp.point_at(r))
        r -= L
    raise AssertionError


def _sample_closure_point(domain, rng):
    if rng.random() < 0.4:
        return sample_boundary_point(domain, rng)
    m = domain.max_abs_coord() + 1.0
    for _ in range(400):
        p = (rng.uniform(-m, m), rng.uniform(-m, m))
        if domain.locate(p) == INSIDE:
            return p
    return sample_boundary_point(domain, rng)


def verify_metric_axioms(domain: PlanarDomain, sample_count: int,
                         seed: int) -> MetricReport:
    """Sampled check of symmetry, identity, and the triangle inequality."""
    rng = random.Random(seed)
    max_tri = 0.0
    max_sym = 0.0
    max_ident = 0.0
    for _ in range(sample_count):
        x = _sample_closure_point(domain, rng)
        y = _sample_closure_point(domain, rng)
        z = _sample_closure_point(domain, rng)
        dxy = shortest_path(domain, x, y).length
        dyx = shortest_path(domain, y, x).length
        dyz = shortest_path(domain, y, z).length
        dxz = shortest_path(domain, x, z).length
        dxx = shortest_path(domain, x, x).length
        max_sym = max(max_sym, abs(dxy - dyx))
        max_ident = max(max_ident, abs(dxx))
        if math.isfinite(dxz) and math.isfinite(dxy) and math.isfinite(dyz):
            max_tri = max(max_tri, dxz - dxy - dyz)
    return MetricReport(
        triples=sample_count,
        max_triangle_violation=max(0.0, max_tri),
        max_symmetry_violation=max_sym,
        max_identity_violation=max_ident,
    )


def check_h_structure(path: GeodesicPath, domain: PlanarDomain) -> bool:
    """True iff between consecutive boundary contacts the path is a single
    straight segment: an interior path vertex with a genuine kink fails."""
    if not path.finite or len(path.vertices) < 3:
        return True
    verts = path.vertices
    for a, x, b in zip(verts, verts[1:], verts[2:]):
        if domain.locate(x) == INSIDE:
            if orientation(a, x, b) != 0 and point_line_distance(
                x, a, b
            ) > 1e-9 * (1.0 + dist(a, b)):
                return False
    return True


def check_condition_i(domain: PlanarDomain, probe_points, sample_count=48,
                      seed=0):
    """Per probe: is sup_y rho(probe, y) finite over sampled boundary
    points y (at the domain's current truncation)?"""
    rng = random.Random(seed)
    ys = []
    for poly in domain.flat_loops + domain.flat_slits:
        ys.extend(tuple(p) for p in poly)
    while len(ys) < sample_count:
        ys.append(sample_boundary_point(domain, rng))
    if len(ys) > sample_count:
        step = len(ys) / float(sample_count)
        ys = [ys[int(i * step)] for i in range(sample_count)]
    out = []
    for probe in probe_points:
        sup = 0.0
        for y in ys:
            d = relative_boundary_distance(domain, probe, y)
            sup = max(sup, d)
        out.append(
            {
                "probe": tuple(float(c) for c in probe),
                "sup_distance": sup,
                "finite": math.isfinite(sup),
            }
        )
    return out
