"""Shared brute-force helpers; these stay independent of the library code paths
they are used to check."""
from itertools import combinations


def brute_kneser_edges(n, k):
    """All disjoint pairs of k-subsets of [n], by direct enumeration."""
    verts = list(combinations(range(1, n + 1), k))
    return [(u, v) for u, v in combinations(verts, 2) if not set(u) & set(v)]


def brute_pair_cover(blocks, n):
    """Multiplicity of every point pair across the given blocks."""
    cnt = {pq: 0 for pq in combinations(range(1, n + 1), 2)}
    for blk in blocks:
        for pq in combinations(sorted(blk), 2):
            cnt[pq] += 1
    return cnt


def brute_complete(classes, adjacent):
    """Completeness by the naive all-pairs scan over class members."""
    l = len(classes)
    for i in range(l):
        for j in range(i + 1, l):
            if not any(adjacent(u, v) for u in classes[i] for v in classes[j]):
                return False, (i + 1, j + 1)
    return True, None


def brute_proper(classes, adjacent):
    for cls in classes:
        for u, v in combinations(cls, 2):
            if adjacent(u, v):
                return False, (u, v)
    return True, None
