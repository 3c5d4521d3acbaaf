"""Geometric disjointness graphs over planar point sets, exact integer arithmetic.

D_V(n) has the segments spanned by V as vertices, adjacent when the closed
segments are disjoint; D_V(n,k) generalizes to k-point subsets with
disjoint convex hulls.  Everything below assumes (and enforces) general
position: integer coordinates, no three points collinear.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .colorings import Coloring, verify_coloring
from .designs import construct_sts
from .errors import (CertificateError, ParameterDomainError, SearchExhaustedError,
                     SizeCapError)
from .exact_cover import exact_cover
from .kneser import colex_key

Point = tuple


def orientation(p, q, r) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 ccw, -1 cw, 0 collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def _on_segment(p, q, r) -> bool:
    # q collinear with pr: is q within the bounding box of pr?
    return (min(p[0], r[0]) <= q[0] <= max(p[0], r[0])
            and min(p[1], r[1]) <= q[1] <= max(p[1], r[1]))


def segments_intersect(a, b) -> bool:
    """Closed segments a = (p1,p2), b = (q1,q2) share at least one point."""
    p1, p2 = a
    q1, q2 = b
    o1 = orientation(p1, p2, q1)
    o2 = orientation(p1, p2, q2)
    o3 = orientation(q1, q2, p1)
    o4 = orientation(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(p1, q1, p2):
        return True
    if o2 == 0 and _on_segment(p1, q2, p2):
        return True
    if o3 == 0 and _on_segment(q1, p1, q2):
        return True
    if o4 == 0 and _on_segment(q1, p2, q2):
        return True
    return False


def segments_disjoint(a, b) -> bool:
    return not segments_intersect(a, b)


def convex_hull(points):
    """Monotone chain; returns the hull as indices into `points`, ccw order."""
    idx = sorted(range(len(points)), key=lambda i: points[i])
    if len(idx) <= 2:
        return idx

    def half(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and orientation(points[out[-2]], points[out[-1]],
                                                points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def _point_in_convex(hull_pts, p) -> bool:
    # hull ccw with >= 3 vertices; general position keeps p off the boundary
    for i in range(len(hull_pts)):
        if orientation(hull_pts[i], hull_pts[(i + 1) % len(hull_pts)], p) < 0:
            return False
    return True


def hulls_disjoint(pts_a, pts_b) -> bool:
    """Convex hulls of two coordinate lists share no point (closed hulls)."""
    ha = [pts_a[i] for i in convex_hull(pts_a)]
    hb = [pts_b[i] for i in convex_hull(pts_b)]

    def boundary(h):
        if len(h) == 1:
            return [(h[0], h[0])]
        if len(h) == 2:
            return [(h[0], h[1])]
        return [(h[i], h[(i + 1) % len(h)]) for i in range(len(h))]

    for ea in boundary(ha):
        for eb in boundary(hb):
            if segments_intersect(ea, eb):
                return False
    if len(hb) >= 3 and _point_in_convex(hb, pts_a[0]):
        return False
    if len(ha) >= 3 and _point_in_convex(ha, pts_b[0]):
        return False
    return True


class PointSet:
    """Labeled integer points 1..n in general position."""

    def __init__(self, coords):
        coords = tuple((int(x), int(y)) for x, y in coords)
        if len(set(coords)) != len(coords):
            raise ParameterDomainError("points must be distinct")
        for a, b, c in combinations(range(len(coords)), 3):
            if orientation(coords[a], coords[b], coords[c]) == 0:
                raise ParameterDomainError(
                    f"points {a + 1},{b + 1},{c + 1} are collinear; general position required")
        self.coords = coords

    def __len__(self):
        return len(self.coords)

    def coord(self, label: int):
        return self.coords[label - 1]

    def segment(self, pair):
        a, b = pair
        return (self.coords[a - 1], self.coords[b - 1])

    @property
    def convex_position(self) -> bool:
        return len(convex_hull(self.coords)) == len(self.coords)

    def hull_labels(self):
        return [i + 1 for i in convex_hull(self.coords)]


def convex_position_points(n: int) -> PointSet:
    """n parabola points (i, i^2): convex and general position."""
    if n < 3:
        raise ParameterDomainError(f"need n >= 3 points, got {n}")
    return PointSet([(i, i * i) for i in range(1, n + 1)])


def random_general_position(n: int, seed: int = 0, span: int | None = None) -> PointSet:
    """Rejection-sampled random integer points with no three collinear."""
    if n < 1:
        raise ParameterDomainError(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    span = span or max(4 * n * n, 64)
    pts: list = []
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 10000 * n:
            raise SearchExhaustedError("could not sample a general-position set")
        p = (rng.randrange(span), rng.randrange(span))
        if p in pts:
            continue
        if any(orientation(a, b, p) == 0 for a, b in combinations(pts, 2)):
            continue
        pts.append(p)
    return PointSet(pts)


def random_convex_position(n: int, seed: int = 0) -> PointSet:
    """n random parabola points: convex position, general position, seeded."""
    if n < 3:
        raise ParameterDomainError(f"need n >= 3, got {n}")
    rng = random.Random(seed)
    xs = rng.sample(range(1, max(20 * n, 100)), n)
    return PointSet(sorted((x, x * x) for x in xs))


class DisjointnessGraph:
    """D_V(n,k): k-subsets of the labels, adjacent iff their hulls are disjoint."""

    def __init__(self, ps: PointSet, k: int):
        n = len(ps)
        if k < 2 or 2 * k > n:
            raise ParameterDomainError(f"D_V needs 2 <= k <= n/2, got k={k}, n={n}")
        self.ps = ps
        self.k = k
        self.vertices = tuple(sorted(combinations(range(1, n + 1), k), key=colex_key))
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._adj = None

    @property
    def vertex_count(self):
        return len(self.vertices)

    def index(self, v):
        try:
            return self._index[tuple(v)]
        except KeyError:
            raise ParameterDomainError(f"{v} is not a vertex of this D_V") from None

    def adjacent_subsets(self, u, v) -> bool:
        if set(u) & set(v):
            return False
        if self.k == 2:
            return segments_disjoint(self.ps.segment(u), self.ps.segment(v))
        return hulls_disjoint([self.ps.coord(x) for x in u],
                              [self.ps.coord(x) for x in v])

    def adjacency_bitsets(self):
        if self._adj is None:
            V = self.vertex_count
            bits = [0] * V
            for i in range(V):
                for j in range(i + 1, V):
                    if self.adjacent_subsets(self.vertices[i], self.vertices[j]):
                        bits[i] |= 1 << j
                        bits[j] |= 1 << i
            self._adj = bits
        return self._adj

    def edges(self):
        bits = self.adjacency_bitsets()
        for i in range(self.vertex_count):
            m = bits[i] >> (i + 1)
            while m:
                low = m & -m
                yield i, i + 1 + low.bit_length() - 1
                m ^= low


def build_dv(ps: PointSet, k: int) -> DisjointnessGraph:
    return DisjointnessGraph(ps, k)


def thrackle_max_edges(ps: PointSet, cap: int = 7) -> int:
    """Maximum number of pairwise meeting segments (a straight-line thrackle).

    Max clique in the complement of D_V(n); capped because the clique search
    is exponential.
    """
    n = len(ps)
    if n > cap:
        raise SizeCapError(f"thrackle search capped at {cap} points, got {n}")
    segs = list(combinations(range(1, n + 1), 2))
    V = len(segs)
    meet = [0] * V
    for i in range(V):
        for j in range(i + 1, V):
            if set(segs[i]) & set(segs[j]) or segments_intersect(
                    ps.segment(segs[i]), ps.segment(segs[j])):
                meet[i] |= 1 << j
                meet[j] |= 1 << i
    best = 0

    def grow(cand, size):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        grow(cand & meet[v], size + 1)
        grow(cand ^ low, size)

    grow((1 << V) - 1, 0)
    return best


@dataclass
class TrianglePairReport:
    pairs_checked: int
    counterexamples: list

    @property
    def passes(self) -> bool:
        return not self.counterexamples

    def as_dict(self):
        return {"pairs_checked": self.pairs_checked,
                "counterexamples": [list(map(list, ce)) for ce in self.counterexamples],
                "passes": self.passes}


def triangle_pair_check(ps: PointSet) -> TrianglePairReport:
    """Every two point triangles sharing <= 1 point contain two disjoint edges."""
    n = len(ps)
    segs = list(combinations(range(1, n + 1), 2))
    sidx = {s: i for i, s in enumerate(segs)}
    disj = [0] * len(segs)  # bitset: segment pairs that are disjoint
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if not set(segs[i]) & set(segs[j]) and segments_disjoint(
                    ps.segment(segs[i]), ps.segment(segs[j])):
                disj[i] |= 1 << j
                disj[j] |= 1 << i
    checked = 0
    bad = []
    tris = list(combinations(range(1, n + 1), 3))
    tri_edges = [[sidx[e] for e in combinations(t, 2)] for t in tris]
    tri_mask = [sum(1 << e for e in es) for es in tri_edges]
    for a in range(len(tris)):
        for b in range(a + 1, len(tris)):
            if len(set(tris[a]) & set(tris[b])) > 1:
                continue
            checked += 1
            if not any(disj[e] & tri_mask[b] for e in tri_edges[a]):
                bad.append((tris[a], tris[b]))
    return TrianglePairReport(pairs_checked=checked, counterexamples=bad)


def _pair(a, b):
    return (a, b) if a < b else (b, a)


def _triangle_class(blk):
    a, b, c = blk
    return tuple(sorted((_pair(a, b), _pair(a, c), _pair(b, c))))


def dv_achromatic_coloring(ps: PointSet) -> Coloring:
    """A proper complete coloring of D_V(n).

    Odd n = 1,3 (mod 6): the blocks of STS(n) as triangle classes (any
    general-position set).  Even n (convex position): triangles of K_n - F
    plus the components of F, where F sits on the hull; n = 4 (mod 6) is
    capped at n in {10, 16} (exact-cover decomposition scale).
    """
    n = len(ps)
    if n % 2 == 1:
        if n % 6 not in (1, 3):
            raise ParameterDomainError(
                f"odd route needs n = 1,3 (mod 6) for an STS({n}); got n={n}")
        sts = construct_sts(n)
        classes = [_triangle_class(blk) for blk in sts.blocks]
        expect = comb(n, 2) // 3
    else:
        if not ps.convex_position:
            raise ParameterDomainError("even route requires points in convex position")
        hull = ps.hull_labels()
        if n % 6 in (0, 2):
            classes = _even_matching_route(n, hull)
            expect = comb(n + 1, 2) // 3
        else:
            if n not in (10, 16):
                raise ParameterDomainError(
                    "n = 4 (mod 6) route is implemented for n in {10, 16}")
            classes = _even_forest_route(n, hull)
            expect = (n * n + n - 8) // 6
    coloring = Coloring(("dv", ps.coords, 2), tuple(classes))
    if coloring.color_count != expect:
        raise CertificateError(
            f"D_V coloring built {coloring.color_count} classes, wants {expect}")
    rep = verify_coloring(build_dv(ps, 2), coloring, checks={"proper", "complete"})
    if not (rep.proper and rep.complete):
        raise CertificateError(f"D_V coloring failed verification: {rep.witnesses}")
    return coloring


def _even_matching_route(n, hull):
    # STS(n+1) minus its last point leaves triangles plus a perfect matching;
    # relabel so the matching runs along alternating hull edges.
    sts = construct_sts(n + 1)
    v = n + 1
    matching = sorted(tuple(p for p in blk if p != v) for blk in sts.blocks if v in blk)
    relab = {}
    for i, (x, y) in enumerate(matching):
        relab[x] = hull[2 * i]
        relab[y] = hull[2 * i + 1]
    classes = [(_pair(hull[2 * i], hull[2 * i + 1]),) for i in range(len(matching))]
    triangles = [_triangle_class(tuple(sorted(relab[p] for p in blk)))
                 for blk in sts.blocks if v not in blk]
    return triangles + classes


def _even_forest_route(n, hull):
    # F = 3-edge star at h1 (two hull edges plus the short diagonal h1-h3)
    # plus alternating hull-edge matching on h4..h_{n-1}; all F-degrees odd.
    h = hull
    star = [_pair(h[0], h[1]), _pair(h[0], h[2]), _pair(h[0], h[n - 1])]
    matching = [_pair(h[i], h[i + 1]) for i in range(3, n - 2, 2)]
    forest = set(star) | set(matching)
    edges = [e for e in combinations(range(1, n + 1), 2) if _pair(*e) not in forest]
    eset = set(edges)
    rows = {}
    tri_of = {}
    rid = 0
    for t in combinations(range(1, n + 1), 3):
        es = [_pair(t[0], t[1]), _pair(t[0], t[2]), _pair(t[1], t[2])]
        if all(e in eset for e in es):
            rows[rid] = [("e",) + e for e in es]
            tri_of[rid] = t
            rid += 1
    sol = exact_cover([("e",) + e for e in edges], rows, max_nodes=500000)
    if sol is None:
        raise SearchExhaustedError(f"no triangle decomposition of K_{n} - F found")
    classes = [_triangle_class(tri_of[r]) for r in sorted(sol)]
    classes.append(tuple(sorted(star)))
    classes.extend((e,) for e in matching)
    return classes


def dvnk_lower_coloring(ps: PointSet, k: int) -> Coloring:
    """Complete coloring of D_V(n,k) with C(n/2,k) classes via a halving line.

    Points split by x-order into halves V1, V2; class i pairs the i-th
    k-subset of V1 with the i-th of V2 (cross-side hulls are always
    disjoint); straddling subsets are spread round-robin over the classes.
    """
    n = len(ps)
    if n % 2 == 1:
        raise ParameterDomainError(f"halving construction needs even n, got {n}")
    if k < 2 or 2 * k > n:
        raise ParameterDomainError(f"need 2 <= k <= n/2, got k={k}")
    labels = sorted(range(1, n + 1), key=lambda i: ps.coord(i))
    v1, v2 = labels[:n // 2], labels[n // 2:]
    side1 = sorted((tuple(sorted(c)) for c in combinations(v1, k)), key=colex_key)
    side2 = sorted((tuple(sorted(c)) for c in combinations(v2, k)), key=colex_key)
    classes = [[a, b] for a, b in zip(side1, side2)]
    used = set(side1) | set(side2)
    leftovers = [v for v in sorted(combinations(range(1, n + 1), k), key=colex_key)
                 if v not in used]
    for i, v in enumerate(leftovers):
        classes[i % len(classes)].append(v)
    coloring = Coloring(("dv", ps.coords, k),
                        tuple(tuple(sorted(cls)) for cls in classes))
    if coloring.color_count != comb(n // 2, k):
        raise CertificateError("halving coloring has the wrong class count")
    rep = verify_coloring(build_dv(ps, k), coloring, checks={"complete"})
    if not rep.complete:
        raise CertificateError(f"halving coloring incomplete: {rep.witnesses}")
    return coloring
