"""Segment classification kernels: backend parity and soundness.

The kernel answers, per candidate segment against an edge soup: certainly
clean, certainly crossing, or needs the exact slow path (touch).  Soundness
means the certain answers are never wrong; touch may be conservative.
"""

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from relmetric import _kernels_py
from relmetric.geom import orientation, segment_intersection_params

try:
    from relmetric import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

CLEAN, TOUCH, CROSS = _kernels_py.CLEAN, _kernels_py.TOUCH, _kernels_py.CROSS


def pair_kind(p1, p2, q1, q2):
    """Exact relation of one segment pair: none, shared, touch, or cross."""
    kind, t = segment_intersection_params(p1, p2, q1, q2)
    if kind == "none":
        return "none"
    if kind == "overlap":
        return "touch"
    o1 = orientation(q1, q2, p1)
    o2 = orientation(q1, q2, p2)
    o3 = orientation(p1, p2, q1)
    o4 = orientation(p1, p2, q2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return "cross"
    px = Fraction(p1[0]) + t * (Fraction(p2[0]) - Fraction(p1[0]))
    py = Fraction(p1[1]) + t * (Fraction(p2[1]) - Fraction(p1[1]))
    at_p = (px, py) in {(Fraction(p1[0]), Fraction(p1[1])),
                        (Fraction(p2[0]), Fraction(p2[1]))}
    at_q = (px, py) in {(Fraction(q1[0]), Fraction(q1[1])),
                        (Fraction(q2[0]), Fraction(q2[1]))}
    return "shared" if (at_p and at_q) else "touch"


def check_sound(classify, cands, edges):
    pa = np.array([c[0] for c in cands], dtype=float)
    pb = np.array([c[1] for c in cands], dtype=float)
    ea = np.array([e[0] for e in edges], dtype=float)
    eb = np.array([e[1] for e in edges], dtype=float)
    verdicts = classify(pa, pb, ea, eb)
    for (p1, p2), v in zip(cands, verdicts):
        kinds = [pair_kind(p1, p2, q1, q2) for q1, q2 in edges]
        if v == CROSS:
            assert "cross" in kinds, (p1, p2)
        elif v == CLEAN:
            assert all(k in ("none", "shared") for k in kinds), (p1, p2, kinds)
    return verdicts


def lattice_segments(m):
    pts = [(float(x), float(y)) for x in range(m) for y in range(m)]
    return [(a, b) for a, b in itertools.combinations(pts, 2)]


def test_lattice_soundness():
    segs = lattice_segments(3)
    check_sound(_kernels_py.classify_candidates, segs, segs)


def test_lattice_crossings_found():
    # the two diagonals of a unit cell certainly cross
    cands = [((0.0, 0.0), (1.0, 1.0))]
    edges = [((0.0, 1.0), (1.0, 0.0))]
    v = check_sound(_kernels_py.classify_candidates, cands, edges)
    assert v[0] == CROSS


def test_shared_endpoint_clean():
    # polygon-style fan: consecutive edges share one endpoint and are clean
    cands = [((0.0, 0.0), (1.0, 0.0))]
    edges = [((1.0, 0.0), (2.0, 1.0)), ((0.0, 0.0), (-1.0, 3.0))]
    v = check_sound(_kernels_py.classify_candidates, cands, edges)
    assert v[0] == CLEAN


def test_collinear_overlap_is_touch():
    cands = [((0.0, 0.0), (2.0, 0.0))]
    edges = [((1.0, 0.0), (3.0, 0.0))]
    pa = np.array([c[0] for c in cands])
    pb = np.array([c[1] for c in cands])
    ea = np.array([e[0] for e in edges])
    eb = np.array([e[1] for e in edges])
    assert _kernels_py.classify_candidates(pa, pb, ea, eb)[0] == TOUCH


def test_random_float_soundness():
    rng = random.Random(7)
    segs = []
    for _ in range(120):
        a = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        b = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        if a != b:
            segs.append((a, b))
    check_sound(_kernels_py.classify_candidates, segs[:40], segs[40:])


def test_near_degenerate_soundness():
    # points a few ulps off a common line exercise the filter boundary
    base = [(float(i), float(i)) for i in range(4)]
    jit = [(x, np.nextafter(y, 2.0)) for x, y in base]
    pts = base + jit
    segs = [(a, b) for a, b in itertools.combinations(pts, 2) if a != b]
    check_sound(_kernels_py.classify_candidates, segs, segs)


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernel unavailable")
def test_backend_parity():
    rng = random.Random(11)
    cands, edges = [], []
    for out, count in ((cands, 300), (edges, 64)):
        while len(out) < count:
            if rng.random() < 0.5:
                a = (float(rng.randint(0, 3)), float(rng.randint(0, 3)))
                b = (float(rng.randint(0, 3)), float(rng.randint(0, 3)))
            else:
                a = (rng.uniform(0, 3), rng.uniform(0, 3))
                b = (rng.uniform(0, 3), rng.uniform(0, 3))
            if a != b:
                out.append((a, b))
    pa = np.array([c[0] for c in cands])
    pb = np.array([c[1] for c in cands])
    ea = np.array([e[0] for e in edges])
    eb = np.array([e[1] for e in edges])
    vp = _kernels_py.classify_candidates(pa, pb, ea, eb)
    vc = _kernels_c.classify_candidates(pa, pb, ea, eb)
    assert np.array_equal(vp, vc)


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernel unavailable")
def test_backend_parity_lattice():
    segs = lattice_segments(3)
    pa = np.array([s[0] for s in segs])
    pb = np.array([s[1] for s in segs])
    vp = _kernels_py.classify_candidates(pa, pb, pa, pb)
    vc = _kernels_c.classify_candidates(pa, pb, pa, pb)
    assert np.array_equal(vp, vc)


def test_backend_reports_choice():
    from relmetric import kernels

    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.classify_candidates is not None
