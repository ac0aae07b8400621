# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of _kernels_py.classify_candidates.

Same verdict semantics (CLEAN certain, TOUCH conservative, CROSS certain);
per-pair early exit on CROSS makes this the fast path for dense scenes.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef double _ERR = 3.3306690738754716e-16

CLEAN, TOUCH, CROSS = 0, 1, 2


cdef inline int _fsign(double ax, double ay, double bx, double by,
                       double cx, double cy, int *certain,
                       double *absdet) nogil:
    cdef double detl = (ax - cx) * (by - cy)
    cdef double detr = (ay - cy) * (bx - cx)
    cdef double det = detl - detr
    cdef double errb = _ERR * (
        (detl if detl >= 0 else -detl) + (detr if detr >= 0 else -detr)
    )
    absdet[0] = det if det >= 0 else -det
    if det >= errb or -det >= errb:
        certain[0] = 1
        if det > 0:
            return 1
        if det < 0:
            return -1
        return 0
    certain[0] = 0
    return 0


def classify_candidates(cnp.ndarray[cnp.float64_t, ndim=2] pa,
                        cnp.ndarray[cnp.float64_t, ndim=2] pb,
                        cnp.ndarray[cnp.float64_t, ndim=2] ea,
                        cnp.ndarray[cnp.float64_t, ndim=2] eb,
                        double contact_eps=0.0, chunk=None):
    cdef Py_ssize_t M = pa.shape[0]
    cdef Py_ssize_t E = ea.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.zeros(M, dtype=np.uint8)
    if M == 0 or E == 0:
        return out

    cdef cnp.ndarray[cnp.float64_t, ndim=1] eminx = np.minimum(ea[:, 0], eb[:, 0])
    cdef cnp.ndarray[cnp.float64_t, ndim=1] emaxx = np.maximum(ea[:, 0], eb[:, 0])
    cdef cnp.ndarray[cnp.float64_t, ndim=1] eminy = np.minimum(ea[:, 1], eb[:, 1])
    cdef cnp.ndarray[cnp.float64_t, ndim=1] emaxy = np.maximum(ea[:, 1], eb[:, 1])
    # |orientation det| equals distance-to-line times edge length
    cdef cnp.ndarray[cnp.float64_t, ndim=1] thr = contact_eps * np.hypot(
        eb[:, 0] - ea[:, 0], eb[:, 1] - ea[:, 1]
    )

    cdef Py_ssize_t i, j
    cdef double ax, ay, bx, by, qx, qy, rx, ry
    cdef double cminx, cmaxx, cminy, cmaxy
    cdef double m1, m2, m3, m4
    cdef int d1, d2, d3, d4, c1, c2, c3, c4
    cdef bint sa, sb, one_shared, touched
    cdef int verdict

    with nogil:
        for i in range(M):
            ax = pa[i, 0]; ay = pa[i, 1]
            bx = pb[i, 0]; by = pb[i, 1]
            cminx = ax if ax < bx else bx
            cmaxx = ax if ax > bx else bx
            cminy = ay if ay < by else by
            cmaxy = ay if ay > by else by
            verdict = 0
            for j in range(E):
                if cmaxx < eminx[j] or cminx > emaxx[j]:
                    continue
                if cmaxy < eminy[j] or cminy > emaxy[j]:
                    continue
                qx = ea[j, 0]; qy = ea[j, 1]
                rx = eb[j, 0]; ry = eb[j, 1]
                sa = (ax == qx and ay == qy) or (ax == rx and ay == ry)
                sb = (bx == qx and by == qy) or (bx == rx and by == ry)
                one_shared = sa != sb
                if sa or sb:
                    if one_shared:
                        if sa:
                            d2 = _fsign(qx, qy, rx, ry, bx, by, &c2, &m2)
                            if c2 and d2 != 0:
                                continue
                        else:
                            d1 = _fsign(qx, qy, rx, ry, ax, ay, &c1, &m1)
                            if c1 and d1 != 0:
                                continue
                    verdict = 1
                    continue
                d1 = _fsign(qx, qy, rx, ry, ax, ay, &c1, &m1)
                d2 = _fsign(qx, qy, rx, ry, bx, by, &c2, &m2)
                if c1 and c2 and d1 * d2 > 0:
                    continue
                d3 = _fsign(ax, ay, bx, by, qx, qy, &c3, &m3)
                d4 = _fsign(ax, ay, bx, by, rx, ry, &c4, &m4)
                if c3 and c4 and d3 * d4 > 0:
                    continue
                if c1 and c2 and c3 and c4:
                    if d1 * d2 < 0 and d3 * d4 < 0:
                        if m1 > thr[j] and m2 > thr[j]:
                            verdict = 2
                            break
                verdict = 1
            out[i] = verdict
    return out
