"""Independent length oracle: Dijkstra on a dense 8-connected grid graph.

Deliberately separate from the package under test: own point-in-polygon
test, own crossing test, scipy.sparse.csgraph for the search.  The eight
grid directions make the oracle exact only for paths whose segments are
axis- or diagonal-aligned; fixtures that rely on tight tolerances must be
built that way (otherwise accuracy degrades to ~8 percent).

Query endpoints must coincide with grid nodes.  Obstacle polylines must be
kept off the lattice (offset by a half spacing) or paths may tunnel through
an on-line node.
"""

import math

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra

_CHUNK = 200_000


def _segment_distance(px, py, ax, ay, bx, by):
    """Distance from points (px, py) to segment (a, b), broadcast over edges."""
    dx = bx - ax
    dy = by - ay
    den = dx * dx + dy * dy
    t = ((px[:, None] - ax) * dx + (py[:, None] - ay) * dy) / den
    t = np.clip(t, 0.0, 1.0)
    ex = ax + t * dx - px[:, None]
    ey = ay + t * dy - py[:, None]
    return np.sqrt(ex * ex + ey * ey)


def _inside(px, py, edges, snap):
    """Even-odd membership of the closed region, points within snap count in."""
    ax, ay, bx, by = edges
    inside = np.zeros(px.shape, dtype=bool)
    for lo in range(0, len(px), _CHUNK):
        sl = slice(lo, lo + _CHUNK)
        x, y = px[sl], py[sl]
        straddle = (ay > y[:, None]) != (by > y[:, None])
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = ax + (y[:, None] - ay) * (bx - ax) / (by - ay)
        hits = straddle & (x[:, None] < xint)
        par = (hits.sum(axis=1) % 2).astype(bool)
        near = (_segment_distance(x, y, ax, ay, bx, by).min(axis=1) <= snap)
        inside[sl] = par | near
    return inside


def _crosses(px, py, qx, qy, obstacles):
    """True where segment (p, q) properly crosses any obstacle segment."""
    out = np.zeros(px.shape, dtype=bool)
    for (ax, ay), (bx, by) in obstacles:
        for lo in range(0, len(px), _CHUNK):
            sl = slice(lo, lo + _CHUNK)
            p_x, p_y, q_x, q_y = px[sl], py[sl], qx[sl], qy[sl]
            d1 = (bx - ax) * (p_y - ay) - (by - ay) * (p_x - ax)
            d2 = (bx - ax) * (q_y - ay) - (by - ay) * (q_x - ax)
            d3 = (q_x - p_x) * (ay - p_y) - (q_y - p_y) * (ax - p_x)
            d4 = (q_x - p_x) * (by - p_y) - (q_y - p_y) * (bx - p_x)
            out[sl] |= (d1 * d2 < 0) & (d3 * d4 < 0)
    return out


def grid_geodesic(polygon, p, q, spacing, obstacles=(), snap=None):
    """Length of the shortest grid path from p to q inside the closed polygon.

    obstacles: extra polylines (e.g. slits) that grid edges may not cross.
    """
    h = float(spacing)
    if snap is None:
        snap = h * 1e-6
    pts = [tuple(map(float, v)) for v in polygon]
    n = len(pts)
    ax = np.array([pts[i][0] for i in range(n)])
    ay = np.array([pts[i][1] for i in range(n)])
    bx = np.array([pts[(i + 1) % n][0] for i in range(n)])
    by = np.array([pts[(i + 1) % n][1] for i in range(n)])
    edges = (ax, ay, bx, by)

    obs = []
    for chain in obstacles:
        for a, b in zip(chain, chain[1:]):
            obs.append((tuple(map(float, a)), tuple(map(float, b))))

    i0 = math.floor(min(ax.min(), bx.min()) / h) - 1
    j0 = math.floor(min(ay.min(), by.min()) / h) - 1
    nx = math.ceil(max(ax.max(), bx.max()) / h) - i0 + 2
    ny = math.ceil(max(ay.max(), by.max()) / h) - j0 + 2

    jj, ii = np.meshgrid(np.arange(ny), np.arange(nx), indexing="ij")
    gx = ((i0 + ii) * h).ravel()
    gy = ((j0 + jj) * h).ravel()
    mask = _inside(gx, gy, edges, snap).reshape(ny, nx)

    ids = np.full(mask.shape, -1, dtype=np.int64)
    ids[mask] = np.arange(int(mask.sum()))

    rows, cols, wts = [], [], []
    for di, dj, w in ((1, 0, h), (0, 1, h), (1, 1, h * math.sqrt(2)),
                      (1, -1, h * math.sqrt(2))):
        a_j = slice(max(0, -dj), ny - max(0, dj))
        a_i = slice(max(0, -di), nx - max(0, di))
        b_j = slice(max(0, dj), ny - max(0, -dj))
        b_i = slice(max(0, di), nx - max(0, -di))
        ok = mask[a_j, a_i] & mask[b_j, b_i]
        src = ids[a_j, a_i][ok]
        dst = ids[b_j, b_i][ok]
        jj_a, ii_a = np.nonzero(ok)
        px = (i0 + ii_a + a_i.start) * h
        py = (jj_a + a_j.start + j0) * h
        qx = px + di * h
        qy = py + dj * h
        mx = (px + qx) / 2
        my = (py + qy) / 2
        good = _inside(mx, my, edges, snap)
        if obs:
            good &= ~_crosses(px, py, qx, qy, obs)
        rows.append(src[good])
        cols.append(dst[good])
        wts.append(np.full(int(good.sum()), w))

    nnode = int(mask.sum())
    graph = coo_matrix(
        (np.concatenate(wts), (np.concatenate(rows), np.concatenate(cols))),
        shape=(nnode, nnode),
    ).tocsr()

    def node_of(pt):
        i = round(pt[0] / h) - i0
        j = round(pt[1] / h) - j0
        if abs(pt[0] - (i0 + i) * h) > 1e-9 or abs(pt[1] - (j0 + j) * h) > 1e-9:
            raise ValueError("query point %r is not on the grid" % (pt,))
        if not (0 <= i < nx and 0 <= j < ny) or ids[j, i] < 0:
            raise ValueError("query point %r is outside the domain" % (pt,))
        return ids[j, i]

    src, dst = node_of(p), node_of(q)
    dist = dijkstra(graph, directed=False, indices=src)
    return float(dist[dst])
