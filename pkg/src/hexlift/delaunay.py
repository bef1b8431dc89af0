"""Delaunay triangulation with exact predicates.

Bin centroids sit on a regular hexagon lattice, which is maximally
cocircular: four lattice points on a common circle are the norm, not the
exception, so floating-point incircle tests are unreliable exactly where
they matter.  Orientation and incircle signs are therefore evaluated
with a floating-point filter backed by exact rational arithmetic, and
exactly-cocircular configurations are never flipped, which together with
lexicographic insertion order gives a deterministic triangulation whose
circumcircles contain no point strictly inside.

The construction is incremental: points are inserted in lexicographic
(x, y, index) order, each new point is connected to the strictly visible
hull edges, and the new edges are legalized by recursive flips.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

# Conservative filter thresholds: the float determinants below have
# relative error of a few ulp (~1e-16) of the magnitude sum.
_ORIENT_EPS = 1e-12
_INCIRCLE_EPS = 1e-10


@dataclass(frozen=True)
class EdgeList:
    """Neighbor edges (sorted index pairs) and triangles over m points."""

    edges: frozenset[tuple[int, int]]
    triangles: tuple[tuple[int, int, int], ...]
    collinear: bool = False

    @property
    def hull_size(self) -> int:
        seen: dict[tuple[int, int], int] = {}
        for tri in self.triangles:
            a, b, c = tri
            for e in ((a, b), (a, c), (b, c)):
                seen[e] = seen.get(e, 0) + 1
        return sum(1 for v in seen.values() if v == 1)


def _orient(pa, pb, pc, exact) -> int:
    """Sign of the cross product (pb-pa) x (pc-pa); +1 = CCW."""
    detleft = (pb[0] - pa[0]) * (pc[1] - pa[1])
    detright = (pb[1] - pa[1]) * (pc[0] - pa[0])
    det = detleft - detright
    bound = _ORIENT_EPS * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    ax, ay = exact(pa)
    bx, by = exact(pb)
    cx, cy = exact(pc)
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (det > 0) - (det < 0)


def _incircle(pa, pb, pc, pd, exact) -> int:
    """Sign of the incircle determinant for CCW triangle (pa,pb,pc).

    +1 means pd is strictly inside the circumcircle, 0 exactly on it.
    """
    adx = pa[0] - pd[0]
    ady = pa[1] - pd[1]
    bdx = pb[0] - pd[0]
    bdy = pb[1] - pd[1]
    cdx = pc[0] - pd[0]
    cdy = pc[1] - pd[1]
    ad2 = adx * adx + ady * ady
    bd2 = bdx * bdx + bdy * bdy
    cd2 = cdx * cdx + cdy * cdy
    t1 = ad2 * (bdx * cdy - bdy * cdx)
    t2 = bd2 * (cdx * ady - cdy * adx)
    t3 = cd2 * (adx * bdy - ady * bdx)
    det = t1 + t2 + t3
    bound = _INCIRCLE_EPS * (abs(t1) + abs(t2) + abs(t3))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    ax, ay = exact(pa)
    bx, by = exact(pb)
    cx, cy = exact(pc)
    dx, dy = exact(pd)
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - cdy * adx)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx)
    )
    return (det > 0) - (det < 0)


class _Triangulation:
    def __init__(self, pts: np.ndarray):
        self.pts = [(float(x), float(y)) for x, y in pts]
        self._exact_cache: dict[int, tuple[Fraction, Fraction]] = {}
        # edge (i<j) -> set of opposite vertex indices (1 = hull, 2 = interior)
        self.edge_opp: dict[tuple[int, int], set[int]] = {}
        self.hull: list[int] = []  # CCW

    def exact(self, p):
        key = id(p)
        cached = self._exact_cache.get(key)
        if cached is None:
            cached = (Fraction(p[0]), Fraction(p[1]))
            self._exact_cache[key] = cached
        return cached

    def orient(self, i: int, j: int, k: int) -> int:
        return _orient(self.pts[i], self.pts[j], self.pts[k], self.exact)

    def incircle(self, i: int, j: int, k: int, l: int) -> int:
        # orient (i,j,k) CCW before testing
        if self.orient(i, j, k) < 0:
            i, j = j, i
        return _incircle(self.pts[i], self.pts[j], self.pts[k], self.pts[l], self.exact)

    @staticmethod
    def _ekey(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def add_triangle(self, a: int, b: int, c: int) -> None:
        for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
            self.edge_opp.setdefault(self._ekey(u, v), set()).add(w)

    def _replace_opp(self, a: int, b: int, old: int, new: int) -> None:
        opp = self.edge_opp[self._ekey(a, b)]
        opp.discard(old)
        opp.add(new)

    def legalize(self, a: int, b: int, p: int) -> None:
        """Flip edge (a,b) opposite the new point p while non-Delaunay."""
        stack = [(a, b, p)]
        while stack:
            a, b, p = stack.pop()
            key = self._ekey(a, b)
            opp = self.edge_opp.get(key)
            if opp is None or len(opp) < 2:
                continue
            others = opp - {p}
            if not others:
                continue
            d = next(iter(others))
            if self.incircle(a, b, p, d) > 0:
                del self.edge_opp[key]
                self.edge_opp[self._ekey(p, d)] = {a, b}
                self._replace_opp(a, p, b, d)
                self._replace_opp(b, p, a, d)
                self._replace_opp(a, d, b, p)
                self._replace_opp(b, d, a, p)
                stack.append((a, d, p))
                stack.append((b, d, p))

    def insert(self, p: int) -> None:
        """Connect the lexicographically-next point to the visible hull arc."""
        h = len(self.hull)
        vis = [
            self.orient(self.hull[i], self.hull[(i + 1) % h], p) < 0
            for i in range(h)
        ]
        if not any(vis):
            raise AssertionError("new point sees no hull edge (duplicate input?)")
        # rotate so the visible arc is contiguous starting at index `start`
        start = 0
        for _ in range(h + 1):
            if vis[start] and not vis[(start - 1) % h]:
                break
            start = (start + 1) % h
        else:
            raise AssertionError("visible hull arc is not contiguous")
        arc = []
        i = start
        while vis[i]:
            arc.append(i)
            i = (i + 1) % h
        for i in arc:
            u, v = self.hull[i], self.hull[(i + 1) % h]
            self.add_triangle(u, v, p)
        for i in arc:
            u, v = self.hull[i], self.hull[(i + 1) % h]
            self.legalize(u, v, p)
        # hull: keep vertices start and end of the arc, splice p between
        end = (arc[-1] + 1) % h
        new_hull = [p]
        i = end
        while True:
            new_hull.append(self.hull[i])
            if i == start:
                break
            i = (i + 1) % h
        self.hull = new_hull


def triangulate(centroids: np.ndarray) -> EdgeList:
    """Delaunay triangulation of m 2-D points.

    All-collinear input degenerates to a path along the sorted points,
    flagged with ``collinear=True``.  Raises on m < 3 or duplicate points.
    """
    pts = np.asarray(centroids, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected m x 2 points, got shape {pts.shape}")
    m = pts.shape[0]
    if m < 3:
        raise ValueError(f"triangulation needs at least 3 points, got {m}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points contain non-finite coordinates")
    order = sorted(range(m), key=lambda i: (pts[i, 0], pts[i, 1]))
    for a, b in zip(order, order[1:]):
        if pts[a, 0] == pts[b, 0] and pts[a, 1] == pts[b, 1]:
            raise ValueError(f"duplicate points at indices {a} and {b}")

    tri = _Triangulation(pts)

    # find the first point breaking collinearity with the first two
    pivot = None
    for k in range(2, m):
        if tri.orient(order[0], order[1], order[k]) != 0:
            pivot = k
            break
    if pivot is None:
        edges = frozenset(
            (min(a, b), max(a, b)) for a, b in zip(order, order[1:])
        )
        return EdgeList(edges=edges, triangles=(), collinear=True)

    pk = order[pivot]
    chain = order[:pivot]  # collinear, sorted along their line
    for a, b in zip(chain, chain[1:]):
        tri.add_triangle(a, b, pk)
    if len(chain) == 1:
        # cannot happen: pivot >= 2
        raise AssertionError
    # hull is the fan boundary; orient CCW
    if tri.orient(chain[0], chain[-1], pk) > 0:
        tri.hull = chain + [pk]
    else:
        tri.hull = [pk] + list(reversed(chain))

    for idx in order[pivot + 1:]:
        tri.insert(idx)

    triangles = set()
    for (a, b), opps in tri.edge_opp.items():
        for c in opps:
            triangles.add(tuple(sorted((a, b, c))))
    return EdgeList(
        edges=frozenset(tri.edge_opp.keys()),
        triangles=tuple(sorted(triangles)),
        collinear=False,
    )


def brute_force_delaunay(points: np.ndarray, tol: float = 0.0) -> set[tuple[int, int, int]]:
    """Reference O(m^4) Delaunay: triples whose circumcircle holds no other
    point strictly inside (within ``tol``).  Assumes general position."""
    pts = np.asarray(points, dtype=float)
    m = pts.shape[0]
    triangles = set()
    from itertools import combinations

    for i, j, k in combinations(range(m), 3):
        a, b, c = pts[i], pts[j], pts[k]
        d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
        if d == 0.0:
            continue
        ux = ((a @ a) * (b[1] - c[1]) + (b @ b) * (c[1] - a[1]) + (c @ c) * (a[1] - b[1])) / d
        uy = ((a @ a) * (c[0] - b[0]) + (b @ b) * (a[0] - c[0]) + (c @ c) * (b[0] - a[0])) / d
        center = np.array([ux, uy])
        r2 = ((a - center) ** 2).sum()
        dist2 = ((pts - center) ** 2).sum(axis=1)
        dist2[[i, j, k]] = np.inf
        if np.all(dist2 >= r2 - tol):
            triangles.add((i, j, k))
    return triangles
