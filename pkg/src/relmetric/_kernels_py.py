"""Pure-numpy fallback for the hot visibility kernel.

Classifies candidate sight segments against a soup of boundary edges:

    0 CLEAN  certainly no contact with any edge,
    1 TOUCH  some contact, shared endpoint geometry, or a filtered sign was
             uncertain; the caller resolves these exactly in Python,
    2 CROSS  certainly a proper transversal crossing (candidate rejected).

CROSS and CLEAN verdicts are exact: filtered orientation signs are only
trusted when they clear Shewchuk's A-bound.  Semantics here and in the
compiled twin must stay in lockstep; test_kernels checks the parity.
"""

from __future__ import annotations

import numpy as np

_ERR = 3.3306690738754716e-16

CLEAN, TOUCH, CROSS = 0, 1, 2


def _filtered_sign(ax, ay, bx, by, cx, cy):
    """Orientation sign of (a,b,c) broadcast over arrays.

    Returns (sign, certain, |det|): sign in {-1,0,1}; entries with
    certain == False carry no sign information.
    """
    acx = ax - cx
    acy = ay - cy
    bcx = bx - cx
    bcy = by - cy
    detl = acx * bcy
    detr = acy * bcx
    det = detl - detr
    errb = _ERR * (np.abs(detl) + np.abs(detr))
    certain = np.abs(det) >= errb
    return np.sign(det).astype(np.int8), certain, np.abs(det)


def classify_candidates(pa, pb, ea, eb, contact_eps=0.0, chunk=None):
    """Classify M candidate segments [pa_i, pb_i] against E edges [ea_j, eb_j].

    All inputs are float64 arrays of shape (M, 2) / (E, 2).  Returns a uint8
    array of length M with CLEAN / TOUCH / CROSS verdicts.  A crossing whose
    candidate endpoint lies within contact_eps of the edge's line is demoted
    to TOUCH; callers treat such grazes as boundary contact, not crossing.
    """
    pa = np.asarray(pa, dtype=np.float64)
    pb = np.asarray(pb, dtype=np.float64)
    ea = np.asarray(ea, dtype=np.float64)
    eb = np.asarray(eb, dtype=np.float64)
    M = pa.shape[0]
    E = ea.shape[0]
    out = np.zeros(M, dtype=np.uint8)
    if M == 0 or E == 0:
        return out
    if chunk is None:
        chunk = max(1, 4_000_000 // max(E, 1))

    eax, eay = ea[:, 0], ea[:, 1]
    ebx, eby = eb[:, 0], eb[:, 1]
    e_minx = np.minimum(eax, ebx)
    e_maxx = np.maximum(eax, ebx)
    e_miny = np.minimum(eay, eby)
    e_maxy = np.maximum(eay, eby)
    # |orientation det| equals distance-to-line times edge length
    thr = contact_eps * np.hypot(ebx - eax, eby - eay)

    for lo in range(0, M, chunk):
        hi = min(lo + chunk, M)
        ax = pa[lo:hi, 0][:, None]
        ay = pa[lo:hi, 1][:, None]
        bx = pb[lo:hi, 0][:, None]
        by = pb[lo:hi, 1][:, None]

        disjoint = (
            (np.maximum(ax, bx) < e_minx[None, :])
            | (np.minimum(ax, bx) > e_maxx[None, :])
            | (np.maximum(ay, by) < e_miny[None, :])
            | (np.minimum(ay, by) > e_maxy[None, :])
        )

        d1, c1, m1 = _filtered_sign(eax[None, :], eay[None, :], ebx[None, :], eby[None, :], ax, ay)
        d2, c2, m2 = _filtered_sign(eax[None, :], eay[None, :], ebx[None, :], eby[None, :], bx, by)
        d3, c3, _ = _filtered_sign(ax, ay, bx, by, eax[None, :], eay[None, :])
        d4, c4, _ = _filtered_sign(ax, ay, bx, by, ebx[None, :], eby[None, :])
        all_certain = c1 & c2 & c3 & c4

        shared_a = ((ax == eax[None, :]) & (ay == eay[None, :])) | (
            (ax == ebx[None, :]) & (ay == eby[None, :])
        )
        shared_b = ((bx == eax[None, :]) & (by == eay[None, :])) | (
            (bx == ebx[None, :]) & (by == eby[None, :])
        )
        shared = shared_a | shared_b
        one_shared = shared_a ^ shared_b

        cross = (
            all_certain
            & ~shared
            & (d1 * d2 < 0)
            & (d3 * d4 < 0)
            & (m1 > thr[None, :])
            & (m2 > thr[None, :])
        )
        # one shared endpoint: if the candidate's free endpoint is certainly
        # off the edge's line, the only contact is the shared point itself
        shared_clean = one_shared & (
            (shared_a & c2 & (d2 != 0)) | (shared_b & c1 & (d1 != 0))
        )
        separated = ~shared & (
            (c1 & c2 & (d1 * d2 > 0)) | (c3 & c4 & (d3 * d4 > 0))
        )
        clean = disjoint | separated | shared_clean
        touch = ~(clean | cross)

        out_chunk = np.zeros(hi - lo, dtype=np.uint8)
        t_any = touch.any(axis=1)
        out_chunk[t_any] = TOUCH
        x_any = cross.any(axis=1)
        out_chunk[x_any] = CROSS
        out[lo:hi] = out_chunk
    return out
