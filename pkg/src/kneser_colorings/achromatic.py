"""Optimal proper complete colorings of K(n,2), one construction per residue of n mod 6.

Vertices of K(n,2) are edges of K_n; a "triangle class" is the three pairs
inside a triple, a "path class" is two pairs sharing a K_n vertex (a P_3),
and singletons are single pairs.  Classes are always emitted triangles
first, then paths, then singletons, which is exactly the color order the
Grundy relabeling wants.

Every constructor re-verifies its own output (proper, complete, class
count, condition (C)) and refuses to emit anything that fails.
"""
from __future__ import annotations

from math import comb

from .bounds import alpha_upper_kn2
from .colorings import Coloring, check_condition_C, verify_coloring
from .designs import construct_sts, find_parallel_class
from .errors import CertificateError, ParameterDomainError, ShapeError
from .kneser import build_kneser

# Optimal patterns for the small cases, frozen from the tiny exhaustive
# searches kept in the test suite as regressions.
K42_PATTERN = (((1, 2), (1, 3)), ((2, 3), (3, 4)), ((1, 4), (2, 4)))
K52_PATTERN = (((1, 2), (2, 4)), ((2, 3), (3, 5)), ((1, 4), (3, 4)),
               ((2, 5), (4, 5)), ((1, 3), (1, 5)))


def _pair(a: int, b: int):
    return (a, b) if a < b else (b, a)


def _triangle_class(a: int, b: int, c: int):
    return tuple(sorted((_pair(a, b), _pair(a, c), _pair(b, c))))


def _map_pattern(pattern, points):
    """Relabel a pattern given as classes of pairs on 1..len(points)."""
    out = []
    for cls in pattern:
        out.append(tuple(sorted(_pair(points[x - 1], points[y - 1]) for x, y in cls)))
    return out


def _k72_pattern():
    """The 9-class pattern on K(7,2): STS(9) minus two points.

    Returns (triangles, paths, singletons, exceptional_point) on points 1..7.
    The six pairs left over after deleting two points always close into a
    6-cycle w1..w6; classes {w1w2, w2w3}, {w4w5, w5w6}, {w3w4}, {w6w1}.
    """
    sts9 = construct_sts(9)
    gone = {8, 9}
    triangles = []
    leftover = []
    for blk in sts9.blocks:
        hit = set(blk) & gone
        if not hit:
            triangles.append(_triangle_class(*blk))
        elif len(hit) == 1:
            a, b = (p for p in blk if p not in gone)
            leftover.append(_pair(a, b))
    nbr = {}
    for a, b in leftover:
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    start = min(nbr)
    walk = [start, min(nbr[start])]
    while len(walk) < 6:
        prev, cur = walk[-2], walk[-1]
        walk.append(next(w for w in nbr[cur] if w != prev))
    w1, w2, w3, w4, w5, w6 = walk
    paths = [tuple(sorted((_pair(w1, w2), _pair(w2, w3)))),
             tuple(sorted((_pair(w4, w5), _pair(w5, w6))))]
    singletons = [(_pair(w3, w4),), (_pair(w6, w1),)]
    exceptional = next(p for p in range(1, 8) if p not in nbr)
    return triangles, paths, singletons, exceptional


def _relabel_for_parallel_class(sts, pc):
    """Permute points so the parallel class becomes {3i+1, 3i+2, 3i+3} triples."""
    perm = {}
    nxt = 1
    for blk in sorted(pc):
        for p in blk:
            perm[p] = nxt
            nxt += 1
    pc_set = set(pc)
    others = [tuple(sorted(perm[p] for p in blk)) for blk in sts.blocks
              if blk not in pc_set]
    new_pc = [tuple(range(3 * i + 1, 3 * i + 4)) for i in range(len(pc))]
    return others, new_pc


def _case1(n: int):
    # n = 0,2 mod 6: STS(n+1) minus its last point
    sts = construct_sts(n + 1)
    v = n + 1
    triangles = []
    singles = []
    for blk in sts.blocks:
        if v in blk:
            a, b = (p for p in blk if p != v)
            singles.append((_pair(a, b),))
        else:
            triangles.append(_triangle_class(*blk))
    return triangles + singles


def _case2(n: int):
    # n = 3,5 mod 6: STS(n-2) plus two points, one block dissolved into the
    # K(5,2) pattern
    sts = construct_sts(n - 2)
    u, v = n - 1, n
    a, b, c = sts.blocks[0]
    triangles = [_triangle_class(*blk) for blk in sts.blocks[1:]]
    pattern = _map_pattern(K52_PATTERN, (a, b, c, u, v))
    paths = [tuple(sorted((_pair(u, x), _pair(x, v))))
             for x in range(1, n - 1) if x not in (a, b, c)]
    return triangles + pattern + paths


def _case3(n: int):
    # n = 4 mod 6: STS(n-1) with one parallel class spread over a new point
    sts = construct_sts(n - 1)
    pc = find_parallel_class(sts)
    if pc is None:
        raise CertificateError(f"no parallel class found in STS({n - 1})")
    v = n
    pc_set = set(pc)
    triangles = [_triangle_class(*blk) for blk in sts.blocks if blk not in pc_set]
    paths = []
    for p, q, r in sorted(pc):
        paths.append(tuple(sorted((_pair(p, q), _pair(p, v)))))
        paths.append(tuple(sorted((_pair(q, r), _pair(q, v)))))
        paths.append(tuple(sorted((_pair(p, r), _pair(r, v)))))
    return triangles + paths


def _case4(n: int):
    # n = 1 mod 6, n >= 13: STS(n-4) with a parallel class; four new points
    # a,b,c,d; the join gadget on every parallel triple but the last; the
    # K(7,2) pattern on the last triple plus a,b,c,d.
    sts = construct_sts(n - 4)
    pc = find_parallel_class(sts)
    if pc is None:
        raise CertificateError(f"no parallel class found in STS({n - 4})")
    others, new_pc = _relabel_for_parallel_class(sts, pc)
    a, b, c, d = n - 3, n - 2, n - 1, n
    triangles = [_triangle_class(*blk) for blk in sorted(others)]
    paths = []
    for v1, v2, v3 in new_pc[:-1]:
        triangles.append(_triangle_class(v1, v2, a))
        triangles.append(_triangle_class(v2, v3, b))
        triangles.append(_triangle_class(v1, v3, c))
        paths.append(tuple(sorted((_pair(a, v3), _pair(v3, d)))))
        paths.append(tuple(sorted((_pair(b, v1), _pair(v1, d)))))
        paths.append(tuple(sorted((_pair(c, v2), _pair(v2, d)))))
    tail_tris, tail_paths, tail_singles, z = _k72_pattern()
    # map the tail onto the last triple plus a,b,c,d; the tail's exceptional
    # point goes to d so every pair at d lands in a triangle class (this is
    # what lets the size-ordered relabeling be a Grundy coloring here)
    last = new_pc[-1]
    s_pts = [last[0], last[1], last[2], a, b, c]
    mapping = [0] * 8
    mapping[z] = d
    rest = iter(s_pts)
    for p in range(1, 8):
        if p != z:
            mapping[p] = next(rest)

    def remap(cls):
        return tuple(sorted(_pair(mapping[x], mapping[y]) for x, y in cls))

    triangles.extend(remap(cls) for cls in tail_tris)
    paths.extend(remap(cls) for cls in tail_paths)
    singles = [remap(cls) for cls in tail_singles]
    return triangles + paths + singles


def achromatic_coloring(n: int) -> Coloring:
    """A proper complete coloring of K(n,2) with exactly alpha(K(n,2)) classes."""
    if n < 2:
        raise ParameterDomainError(f"achromatic construction needs n >= 2, got {n}")
    if n == 2:
        classes = [((1, 2),)]
    elif n == 3:
        classes = [((1, 2), (1, 3), (2, 3))]
    elif n == 4:
        classes = list(K42_PATTERN)
    elif n == 5:
        classes = list(K52_PATTERN)
    elif n == 7:
        tris, paths, singles, _ = _k72_pattern()
        classes = tris + paths + singles
    elif n % 6 in (0, 2):
        classes = _case1(n)
    elif n % 6 in (3, 5):
        classes = _case2(n)
    elif n % 6 == 4:
        classes = _case3(n)
    else:
        classes = _case4(n)
    coloring = Coloring(("kneser", n, 2), tuple(classes))
    _certify(coloring, n)
    return coloring


def _certify(coloring: Coloring, n: int) -> None:
    want = alpha_upper_kn2(n)
    if coloring.color_count != want:
        raise CertificateError(
            f"construction for n={n} built {coloring.color_count} classes, wants {want}")
    g = build_kneser(n, 2)
    rep = verify_coloring(g, coloring, checks={"proper", "complete"})
    if not (rep.proper and rep.complete):
        raise CertificateError(f"self-verification failed for n={n}: {rep.witnesses}")
    if n != 3:  # K(3,2) is edgeless; its single class has no accounting to satisfy
        cc = check_condition_C(coloring)
        if not cc.passes:
            raise CertificateError(f"condition (C) failed for n={n}: {cc.problems}")


def grundy_relabel(coloring: Coloring) -> Coloring:
    """Recolor so size-3 classes get the smallest colors, then size-2, then size-1.

    Ties keep the constructor's canonical class order (stable sort).
    """
    for cls in coloring.classes:
        if len(cls) > 3:
            raise ShapeError(f"class {cls} has size {len(cls)} > 3")
    order = {3: 0, 2: 1, 1: 2}
    classes = tuple(sorted(coloring.classes, key=lambda cls: order[len(cls)]))
    return Coloring(coloring.graph_id, classes)


def max_degree_kn2(n: int) -> int:
    return comb(n - 2, 2)
