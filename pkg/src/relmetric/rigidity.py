"""Unique-determination classification and boundary-isometry verification.

A domain's boundary carries the relative metric; some domains are pinned
down (up to rigid motion) by that metric alone, others provably are not,
and for the rest the question stays open.  This module classifies a domain
by a fixed rule list, checks candidate boundary correspondences for global
or local isometry, searches for the Euclidean motion behind an exact
isometry, and verifies hand-built non-uniqueness witnesses assembled from
pocket motions plus a map of the hull-exterior boundary.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass

import numpy as np

from .domain import (
    INSIDE,
    PlanarDomain,
    boundary_is_connected_multipoint,
    diagnose,
)
from .geodesic import (
    _find_on_boundary,
    relative_boundary_distance,
)
from .geom import RigidMotion2, dist
from .structures import _contact_eps, _full_boundary_distance, decompose_Fu

__all__ = [
    "UNIQUE",
    "NOT_UNIQUE",
    "UNDETERMINED",
    "RULE_COLLINEAR",
    "RULE_BOUNDED",
    "RULE_CONVEX",
    "RULE_HULL_EXTERIOR_EMPTY",
    "RULE_HULL_EXTERIOR_DISCONNECTED",
    "RULE_STRICTLY_CONVEX",
    "RULE_OPEN",
    "Classification",
    "PiecePair",
    "BoundaryCorrespondence",
    "IsometryReport",
    "classify",
    "identity_correspondence",
    "check_global_isometry",
    "check_local_isometry",
    "find_rigid_motion",
    "verify_witness_II",
]

UNIQUE = "UniquelyDetermined"
NOT_UNIQUE = "NotUniquelyDetermined"
UNDETERMINED = "Undetermined"

RULE_COLLINEAR = "collinear-boundary"
RULE_BOUNDED = "bounded-domain"
RULE_CONVEX = "convex-not-halfplane"
RULE_HULL_EXTERIOR_EMPTY = "hull-exterior-empty"
RULE_HULL_EXTERIOR_DISCONNECTED = "hull-exterior-disconnected"
# convex with no boundary segments; subsumed by the rules above for every
# representable domain, kept for report vocabulary
RULE_STRICTLY_CONVEX = "strictly-convex"
RULE_OPEN = "exterior-structure-open"

_BIJECTIVITY_NOTE = (
    "correspondence is required to be bijective; a merely surjective "
    "boundary isometry is rejected"
)


@dataclass(frozen=True)
class Classification:
    """Verdict plus the first decision rule whose premises held."""

    verdict: str
    rule: str
    evidence: dict

    def __post_init__(self):
        assert (self.verdict == UNDETERMINED) == (self.rule == RULE_OPEN)


def classify(domain: PlanarDomain) -> Classification:
    """Decide whether the relative metric determines the domain.

    Rules fire in a fixed order and the first applicable one is reported:
    collinear boundary, bounded domain, convex domain (necessarily not a
    half-plane once collinearity is excluded), empty hull exterior,
    disconnected hull exterior.  A domain passing all five keeps a
    connected nonempty hull exterior and the question is left open.
    """
    diag = diagnose(domain)
    evidence = {
        "bounded": diag.is_bounded,
        "convex": diag.is_convex,
        "boundary_collinear": diag.boundary_collinear,
    }
    if diag.boundary_collinear:
        connected, multi = boundary_is_connected_multipoint(domain)
        evidence["boundary_connected"] = connected
        evidence["boundary_multipoint"] = multi
        verdict = NOT_UNIQUE if (connected and multi) else UNIQUE
        return Classification(verdict, RULE_COLLINEAR, evidence)
    if diag.is_bounded:
        return Classification(UNIQUE, RULE_BOUNDED, evidence)
    if diag.is_convex:
        return Classification(UNIQUE, RULE_CONVEX, evidence)
    fu = decompose_Fu(domain)
    evidence["f_components"] = fu.f_components
    evidence["f_unbounded"] = fu.f_unbounded
    evidence["boundary_f_components"] = fu.boundary_f_components
    evidence["pocket_count"] = len(fu.u_components)
    if fu.f_components == 0:
        return Classification(UNIQUE, RULE_HULL_EXTERIOR_EMPTY, evidence)
    if fu.f_components >= 2:
        return Classification(
            UNIQUE, RULE_HULL_EXTERIOR_DISCONNECTED, evidence
        )
    return Classification(UNDETERMINED, RULE_OPEN, evidence)


@dataclass(frozen=True)
class PiecePair:
    """One boundary piece of U matched to one of V by an arclength map
    s -> orientation * s + offset."""

    u_ref: str
    v_ref: str
    orientation: int = 1
    offset: float = 0.0

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")


@dataclass(frozen=True)
class BoundaryCorrespondence:
    """Boundary map given either piecewise by arclength or by samples.

    pairs   : structured form, one PiecePair per boundary piece.
    samples : unordered matched point pairs ((xu, yu), (xv, yv)).
    chains  : ordered runs of matched pairs along single boundary pieces;
              used for maps that are not arclength-affine and for the
              hull-exterior boundary maps of non-uniqueness witnesses.
    """

    pairs: tuple = ()
    samples: tuple = ()
    chains: tuple = ()
    sample_density: float = 4.0

    @property
    def structured(self) -> bool:
        return bool(self.pairs)

    def all_samples(self):
        out = list(self.samples)
        for chain in self.chains:
            out.extend(chain)
        return out

    def pair_for(self, u_ref: str) -> PiecePair:
        for pp in self.pairs:
            if pp.u_ref == u_ref:
                return pp
        raise KeyError("no pair for boundary piece %r" % u_ref)

    def map_param(self, V: PlanarDomain, u_ref: str, s: float):
        """Image point for arclength s on piece u_ref of U."""
        pp = self.pair_for(u_ref)
        _, comp = V.component(pp.v_ref)
        return tuple(comp.point_at(pp.orientation * s + pp.offset))

    def map_xy(self, U: PlanarDomain, V: PlanarDomain, p):
        if self.structured:
            hit = _find_on_boundary(U, tuple(p))
            if hit is None:
                raise ValueError("point %r is not on the boundary of U" % (p,))
            ref, s = hit
            return self.map_param(V, ref, s)
        return _project_through_chains(self, p)

    def inverse(self) -> "BoundaryCorrespondence":
        pairs = tuple(
            PiecePair(
                pp.v_ref,
                pp.u_ref,
                pp.orientation,
                -pp.orientation * pp.offset,
            )
            for pp in self.pairs
        )
        samples = tuple((b, a) for a, b in self.samples)
        chains = tuple(
            tuple((b, a) for a, b in chain) for chain in self.chains
        )
        return BoundaryCorrespondence(
            pairs, samples, chains, self.sample_density
        )


def identity_correspondence(domain: PlanarDomain) -> BoundaryCorrespondence:
    return BoundaryCorrespondence(
        pairs=tuple(PiecePair(ref, ref) for ref in domain.component_ids())
    )


def _project_through_chains(corr: BoundaryCorrespondence, p):
    """Evaluate a sampled map at p by projecting onto the source polylines
    and interpolating the image samples linearly."""
    best = None
    for chain in corr.chains:
        for (a, fa), (b, fb) in zip(chain, chain[1:]):
            ab2 = dist(a, b) ** 2
            if ab2 <= 0.0:
                continue
            t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / ab2
            t = min(max(t, 0.0), 1.0)
            foot = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            d = dist(p, foot)
            if best is None or d < best[0]:
                img = (
                    fa[0] + t * (fb[0] - fa[0]),
                    fa[1] + t * (fb[1] - fa[1]),
                )
                best = (d, img)
    for a, fa in corr.samples:
        d = dist(p, a)
        if best is None or d < best[0]:
            best = (d, fa)
    if best is None:
        raise ValueError("empty sampled correspondence")
    return best[1]


@dataclass(frozen=True)
class IsometryReport:
    kind: str
    max_defect: float
    epsilon_used: float | None
    pair_count: int
    rigid_motion: RigidMotion2 | None
    rigid_residual: float
    notes: tuple = ()

    def __post_init__(self):
        assert self.max_defect >= 0.0


def _require_bijective(U, V, f: BoundaryCorrespondence):
    if not f.structured:
        if not f.all_samples():
            raise ValueError("correspondence has neither pairs nor samples")
        return
    urefs = sorted(pp.u_ref for pp in f.pairs)
    vrefs = sorted(pp.v_ref for pp in f.pairs)
    if urefs != sorted(U.component_ids()) or vrefs != sorted(
        V.component_ids()
    ):
        raise ValueError(
            "correspondence must pair the boundary pieces of U and V "
            "bijectively; got %r -> %r" % (urefs, vrefs)
        )
    eps = max(U.tolerance.eps_metric, V.tolerance.eps_metric)
    for pp in f.pairs:
        _, cu = U.component(pp.u_ref)
        _, cv = V.component(pp.v_ref)
        if getattr(cu, "closed", False) and getattr(cv, "closed", False):
            if abs(cu.length - cv.length) > eps * (1.0 + cu.length):
                raise ValueError(
                    "arclength-inconsistent pair %s -> %s: lengths %.12g "
                    "and %.12g" % (pp.u_ref, pp.v_ref, cu.length, cv.length)
                )


def _arc_window(U: PlanarDomain, V: PlanarDomain) -> float:
    return 4.0 * (1.0 + max(U.max_abs_coord(), V.max_abs_coord()))


def _piece_windows(U: PlanarDomain, f: BoundaryCorrespondence, W: float):
    """Arclength sampling ranges per matched piece; rays get a finite
    window of length W past each open end."""
    out = []
    for pp in f.pairs:
        _, comp = U.component(pp.u_ref)
        L = comp.length
        lo = 0.0
        hi = max(L, 0.0)
        if getattr(comp, "ray_start", None) is not None:
            lo = -W
        if getattr(comp, "ray_end", None) is not None:
            hi = L + W
        if hi <= lo:
            continue
        out.append((pp, comp, lo, hi))
    return out


def _matched_points(U, V, f: BoundaryCorrespondence, count: int):
    """Deterministic matched sample arrays (P on boundary of U, Q = image)."""
    P, Q = [], []
    if f.structured:
        windows = _piece_windows(U, f, _arc_window(U, V))
        total = sum(hi - lo for _, _, lo, hi in windows)
        if total <= 0.0:
            raise ValueError("correspondence covers no boundary length")
        for pp, comp, lo, hi in windows:
            n = max(2, int(round(count * (hi - lo) / total)))
            for i in range(n):
                s = lo + (i + 0.5) * (hi - lo) / n
                P.append(tuple(comp.point_at(s)))
                Q.append(f.map_param(V, pp.u_ref, s))
    else:
        pts = f.all_samples()
        stride = max(1, len(pts) // count)
        for a, b in pts[::stride]:
            P.append(tuple(a))
            Q.append(tuple(b))
    return np.asarray(P, dtype=float), np.asarray(Q, dtype=float)


def _best_rigid(P: np.ndarray, Q: np.ndarray):
    """Closed-form orthogonal alignment of matched samples.

    Tries the proper rotation and the reflection, keeps whichever leaves
    the smaller worst-case residual; returns (motion, residual, degenerate)
    where degenerate flags a nearly collinear sample.
    """
    pc = P.mean(axis=0)
    qc = Q.mean(axis=0)
    H = (P - pc).T @ (Q - qc)
    U_, S, Vt = np.linalg.svd(H)
    degenerate = S[0] <= 0.0 or S[1] / S[0] < 1e-12
    best = None
    for det_target in (1.0, -1.0):
        M = Vt.T @ U_.T
        if np.linalg.det(M) * det_target < 0.0:
            M = Vt.T @ np.diag([1.0, -1.0]) @ U_.T
        t = qc - M @ pc
        res = float(np.max(np.linalg.norm(P @ M.T + t - Q, axis=1)))
        if best is None or res < best[0]:
            best = (res, M, t)
    res, M, t = best
    motion = RigidMotion2(
        angle=math.atan2(M[1, 0], M[0, 0]),
        tx=float(t[0]),
        ty=float(t[1]),
        reflect=bool(np.linalg.det(M) < 0.0),
    )
    return motion, res, degenerate


def _alignment_samples(domain: PlanarDomain, per_piece: int, W: float):
    """Points spread over every boundary piece, rays and clip lines
    included, for checking how far a motion image sits from a boundary."""
    pts = []
    for ref in domain.component_ids():
        _, comp = domain.component(ref)
        L = comp.length
        lo = -W if getattr(comp, "ray_start", None) is not None else 0.0
        hi = L + W if getattr(comp, "ray_end", None) is not None else L
        if hi <= lo:
            pts.append(tuple(comp.point_at(0.0)))
            continue
        for i in range(per_piece):
            s = lo + (i + 0.5) * (hi - lo) / per_piece
            pts.append(tuple(comp.point_at(s)))
    ctol = 1e-9 * (1.0 + domain.max_abs_coord())
    for hp in domain.halfplanes:
        t = (-hp.n[1], hp.n[0])
        base = (hp.n[0] * hp.c, hp.n[1] * hp.c)
        for i in range(per_piece):
            u = -W + (i + 0.5) * 2.0 * W / per_piece
            p = (base[0] + u * t[0], base[1] + u * t[1])
            if all(
                other.value(p) <= ctol
                for other in domain.halfplanes
                if other is not hp
            ):
                pts.append(p)
    return pts


def _boundary_misalignment(U, V, motion: RigidMotion2, per_piece=48):
    W = _arc_window(U, V)
    worst = 0.0
    inv = motion.inverse()
    for p in _alignment_samples(U, per_piece, W):
        worst = max(worst, _full_boundary_distance(V, motion.apply(p)))
    for q in _alignment_samples(V, per_piece, W):
        worst = max(worst, _full_boundary_distance(U, inv.apply(q)))
    return worst


def _registration(U, V, f, count=192):
    P, Q = _matched_points(U, V, f, count)
    if len(P) < 2:
        raise ValueError("need at least two matched samples")
    motion, res, degenerate = _best_rigid(P, Q)
    eps = max(U.tolerance.eps_metric, V.tolerance.eps_metric)
    if res <= eps:
        res = max(res, _boundary_misalignment(U, V, motion))
    ok = res <= eps
    return (motion if ok else None), res, degenerate


def find_rigid_motion(U, V, f: BoundaryCorrespondence, count=256):
    """The Euclidean motion carrying U onto V behind the correspondence,
    or None when no motion survives verification.

    The alignment is a certificate search: all matched samples get equal
    weight, both the proper and the reflected alignment are tried, and the
    winner must both interpolate the samples and carry the boundaries onto
    each other within the metric tolerance.
    """
    motion, res, degenerate = _registration(U, V, f, count)
    if degenerate:
        warnings.warn(
            "matched boundary samples are nearly collinear; registration "
            "is underdetermined",
            RuntimeWarning,
            stacklevel=2,
        )
    return motion


def _rho(domain, a, b):
    return relative_boundary_distance(domain, a, b)


def check_global_isometry(
    U: PlanarDomain,
    V: PlanarDomain,
    f: BoundaryCorrespondence,
    samples: int = 200,
    seed: int = 0,
) -> IsometryReport:
    """Worst sampled gap |rho_U(a, b) - rho_V(f a, f b)| over boundary pairs."""
    _require_bijective(U, V, f)
    rng = random.Random(seed)
    draws = _pair_source(U, V, f, rng)
    worst = 0.0
    for _ in range(samples):
        a_u, a_v = draws()
        b_u, b_v = draws()
        if dist(a_u, b_u) <= 0.0:
            continue
        worst = max(worst, abs(_rho(U, a_u, b_u) - _rho(V, a_v, b_v)))
    motion, res, _ = _registration(U, V, f)
    return IsometryReport(
        kind="global",
        max_defect=worst,
        epsilon_used=None,
        pair_count=samples,
        rigid_motion=motion,
        rigid_residual=res,
        notes=(_BIJECTIVITY_NOTE,),
    )


def _pair_source(U, V, f: BoundaryCorrespondence, rng):
    """Random matched boundary point generator honoring the map form."""
    if f.structured:
        windows = _piece_windows(U, f, _arc_window(U, V))
        if not windows:
            raise ValueError("correspondence covers no boundary length")
        weights = [hi - lo for _, _, lo, hi in windows]

        def draw():
            pp, comp, lo, hi = rng.choices(windows, weights=weights)[0]
            s = rng.uniform(lo, hi)
            return tuple(comp.point_at(s)), f.map_param(V, pp.u_ref, s)

    else:
        pts = f.all_samples()

        def draw():
            a, b = pts[rng.randrange(len(pts))]
            return tuple(a), tuple(b)

    return draw


def _shortest_feature_length(domain: PlanarDomain) -> float:
    eps = domain.tolerance.eps_flat
    best = math.inf
    for ref in domain.component_ids():
        _, comp = domain.component(ref)
        pts = comp.polyline(eps)
        runs = list(zip(pts, pts[1:]))
        if getattr(comp, "closed", False) and len(pts) > 2:
            runs.append((pts[-1], pts[0]))
        for a, b in runs:
            el = dist(a, b)
            if el > 0.0:
                best = min(best, el)
    if not math.isfinite(best):
        best = 1.0 + domain.max_abs_coord()
    return best


def _near_piece_params(domain: PlanarDomain, y, eps: float):
    """Pieces passing within eps of y, with the arclength of the closest
    approach; candidate ground for short-range pair sampling."""
    out = []
    flat = domain.tolerance.eps_flat
    for ref in domain.component_ids():
        _, comp = domain.component(ref)
        pts = comp.polyline(flat)
        runs = list(zip(pts, pts[1:]))
        if getattr(comp, "closed", False) and len(pts) > 2:
            runs.append((pts[-1], pts[0]))
        acc = 0.0
        for a, b in runs:
            el = dist(a, b)
            if el > 0.0:
                t = (
                    (y[0] - a[0]) * (b[0] - a[0])
                    + (y[1] - a[1]) * (b[1] - a[1])
                ) / (el * el)
                t = min(max(t, 0.0), 1.0)
                foot = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                if dist(y, foot) < eps:
                    out.append((ref, comp, acc + t * el))
            acc += el
    return out


def _local_defect(U, V, f, eps, samples, rng):
    """Worst short-range defect in the direction U -> V."""
    if f.structured:
        windows = _piece_windows(U, f, _arc_window(U, V))
        if not windows:
            raise ValueError("correspondence covers no boundary length")
        weights = [hi - lo for _, _, lo, hi in windows]
    else:
        pool = f.all_samples()
    worst = 0.0
    count = 0
    attempts = 0
    cap = samples * 8
    while count < samples and attempts < cap:
        attempts += 1
        if f.structured:
            pp, comp, lo, hi = rng.choices(windows, weights=weights)[0]
            sy = rng.uniform(lo, hi)
            y = tuple(comp.point_at(sy))
        else:
            y = tuple(pool[rng.randrange(len(pool))][0])
        cands = _near_piece_params(U, y, eps)
        if not cands:
            continue

        def draw_near():
            ref, comp_c, s0 = cands[rng.randrange(len(cands))]
            s = s0 + rng.uniform(-eps, eps)
            p = tuple(comp_c.point_at(s))
            if f.structured:
                return p, f.map_param(V, ref, s)
            return p, tuple(f.map_xy(U, V, p))

        a_u, a_v = draw_near()
        b_u, b_v = draw_near()
        if _rho(U, a_u, y) >= eps or _rho(U, b_u, y) >= eps:
            continue
        if dist(a_u, b_u) <= 0.0:
            continue
        worst = max(worst, abs(_rho(U, a_u, b_u) - _rho(V, a_v, b_v)))
        count += 1
    return worst, count


def check_local_isometry(
    U: PlanarDomain,
    V: PlanarDomain,
    f: BoundaryCorrespondence,
    epsilon: float | None = None,
    samples: int = 120,
    seed: int = 0,
) -> IsometryReport:
    """Short-range isometry check around sampled anchors, both ways.

    For anchors y and pairs a, b with rho_U(a, y) < eps and
    rho_U(b, y) < eps the gap |rho_U(a, b) - rho_V(f a, f b)| is taken,
    and the symmetric check runs for the inverse map; the inverse of a
    local isometry is again one, so a sound map must pass both.  Defaults
    eps to one twentieth of the shortest boundary feature.
    """
    if epsilon is not None and epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    if epsilon is None:
        epsilon = _shortest_feature_length(U) / 20.0
    _require_bijective(U, V, f)
    rng = random.Random(seed)
    fwd, n_fwd = _local_defect(U, V, f, epsilon, samples, rng)
    bwd, n_bwd = _local_defect(V, U, f.inverse(), epsilon, samples, rng)
    motion, res, _ = _registration(U, V, f)
    return IsometryReport(
        kind="local",
        max_defect=max(fwd, bwd),
        epsilon_used=epsilon,
        pair_count=n_fwd + n_bwd,
        rigid_motion=motion,
        rigid_residual=res,
        notes=(_BIJECTIVITY_NOTE,),
    )


def _pocket_polygons(fu):
    from shapely.geometry import Polygon

    return [Polygon(c) for c in fu.u_components]


def _apply_poly(motion: RigidMotion2, poly):
    from shapely.geometry import Polygon

    return Polygon(motion.apply_many(list(poly.exterior.coords)[:-1]))


def verify_witness_II(
    U: PlanarDomain,
    V: PlanarDomain,
    Q_list,
    theta: BoundaryCorrespondence,
    density: float | None = None,
) -> dict:
    """Check a non-uniqueness witness: pocket motions plus an exterior map.

    The witness asserts that V is assembled from U by moving each hull
    pocket U_i rigidly by Q_i while the hull-exterior boundary transforms
    by theta.  Checks, in order: each Q_i carries U_i onto a pocket of V
    (symmetric-difference area within tolerance), membership equivalence
    of pocket-boundary points lying inside the domain with theta matching
    Q_i there, and arclength preservation of theta along sampled subarcs.
    Pocket count mismatch fails immediately.
    """
    fu = decompose_Fu(U)
    fv = decompose_Fu(V)
    eps = max(U.tolerance.eps_metric, V.tolerance.eps_metric)
    scale = 1.0 + max(U.max_abs_coord(), V.max_abs_coord())
    tol_pt = 1e3 * eps * scale
    report = {
        "pass": False,
        "pocket_count_u": len(fu.u_components),
        "pocket_count_v": len(fv.u_components),
    }
    if len(fu.u_components) != len(fv.u_components):
        report["reason"] = "pocket count mismatch"
        return report
    if len(Q_list) != len(fu.u_components):
        report["reason"] = "need exactly one motion per pocket"
        return report

    pockets_u = _pocket_polygons(fu)
    pockets_v = _pocket_polygons(fv)
    if density is None:
        density = theta.sample_density

    # (IIa) pair each moved pocket with its best match in V by leftover area
    unused = list(range(len(pockets_v)))
    pairing = []
    iia_worst = 0.0
    for i, (qi, pu) in enumerate(zip(Q_list, pockets_u)):
        moved = _apply_poly(qi, pu)
        best_j = min(
            unused,
            key=lambda j: moved.symmetric_difference(pockets_v[j]).area,
        )
        unused.remove(best_j)
        defect = moved.symmetric_difference(pockets_v[best_j]).area
        iia_worst = max(iia_worst, defect / max(pockets_v[best_j].length, eps))
        pairing.append((i, best_j))
    report["pairing"] = tuple(pairing)
    report["iia_max_area_defect"] = iia_worst
    iia_ok = iia_worst <= eps

    # (IIb) pocket-boundary points inside U must map into V's pocket rim,
    # with theta agreeing with the pocket motion there.  Rim samples land
    # exactly on the measure-zero boundary set, so membership is decided
    # with the engine-wide contact band: a point counts as inside only
    # when it clears the full boundary by more than the band.
    band = max(_contact_eps(U), _contact_eps(V))
    iib_checked = 0
    iib_mismatch = 0
    iib_map_worst = 0.0
    for i, j in pairing:
        qi = Q_list[i]
        rim_u = list(pockets_u[i].exterior.coords)[:-1]
        rim_v = pockets_v[j].exterior
        for a, b in zip(rim_u, rim_u[1:] + rim_u[:1]):
            el = dist(a, b)
            n = max(2, int(math.ceil(el * density)) + 1)
            for k in range(1, n):
                t = k / n
                x = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                in_u = (
                    U.locate(x) == INSIDE
                    and _full_boundary_distance(U, x) > band
                )
                qx = qi.apply(x)
                in_v = (
                    V.locate(qx) == INSIDE
                    and _full_boundary_distance(V, qx) > band
                    and rim_v.distance(_shapely_point(qx)) <= tol_pt
                )
                iib_checked += 1
                if in_u != in_v:
                    iib_mismatch += 1
                elif in_u:
                    tx = theta.map_xy(U, V, x)
                    iib_map_worst = max(iib_map_worst, dist(tx, qx))
    report["iib_checked"] = iib_checked
    report["iib_mismatches"] = iib_mismatch
    report["iib_max_map_defect"] = iib_map_worst
    iib_ok = iib_mismatch == 0 and iib_map_worst <= tol_pt

    # (IIc) theta preserves arclength along its sampled chains
    iic_worst = 0.0
    for chain in theta.chains:
        src = 0.0
        img = 0.0
        for (a, fa), (b, fb) in zip(chain, chain[1:]):
            src += dist(a, b)
            img += dist(fa, fb)
            iic_worst = max(iic_worst, abs(src - img) / (1.0 + src))
    report["iic_max_arclength_defect"] = iic_worst
    iic_ok = iic_worst <= eps

    report["iia_ok"] = iia_ok
    report["iib_ok"] = iib_ok
    report["iic_ok"] = iic_ok
    report["pass"] = iia_ok and iib_ok and iic_ok
    return report


def _shapely_point(p):
    from shapely.geometry import Point

    return Point(p)
