"""Complete (not necessarily proper) colorings of K(n,2) realizing the psi bounds.

The lower-bound coloring pairs edges inside the factors of a 4-cycle-free
1-factorization (four cases by n mod 4); the tightness coloring at n = 20
deletes a point of the (21,5,1)-design and labels the surviving blocks'
pairs; matchings get the closed-form optimal coloring.
"""
from __future__ import annotations

from math import comb

from .bounds import max_colors_for_pairs, psi_lower_kn2
from .colorings import Coloring, verify_coloring
from .designs import c4_free_one_factorization, construct_design_21_5_1
from .errors import CertificateError, ParameterDomainError
from .kneser import build_kneser


def _pair(a, b):
    return (a, b) if a < b else (b, a)


def _factor_classes(t2: int, seed: int, drop_vertex=None):
    """Size-2 classes from pairing consecutive edges inside each 1-factor.

    With drop_vertex set, the factor loses its edge at that vertex first
    (the maximal-matching case).
    """
    of = c4_free_one_factorization(t2, seed=seed)
    classes = []
    for factor in of.factors:
        edges = [e for e in factor if drop_vertex not in e] if drop_vertex else list(factor)
        edges.sort()
        for i in range(0, len(edges) - 1, 2):
            classes.append((edges[i], edges[i + 1]))
    return classes


def psi_lower_coloring(n: int, seed: int = 0) -> Coloring:
    """A complete coloring of K(n,2) with exactly floor(C(n,2)/2) classes."""
    if n < 7:
        raise ParameterDomainError(f"psi lower construction needs n >= 7, got {n}")
    classes = _psi_lower_classes(n, seed)
    coloring = Coloring(("kneser", n, 2), tuple(classes))
    want = psi_lower_kn2(n)
    if coloring.color_count != want:
        raise CertificateError(f"psi lower built {coloring.color_count} classes, wants {want}")
    rep = verify_coloring(build_kneser(n, 2), coloring, checks={"complete"})
    if not rep.complete:
        raise CertificateError(f"psi lower completeness failed at n={n}: {rep.witnesses}")
    return coloring


def _psi_lower_classes(n: int, seed: int):
    r = n % 4
    if r == 0:
        return _factor_classes(n, seed)
    if r == 1:
        return _factor_classes(n + 1, seed, drop_vertex=n + 1)
    if r == 2:
        # K_{n-2} as the 4k case plus classes {ax, xb}; the edge ab joins class 1
        a, b = n - 1, n
        classes = _factor_classes(n - 2, seed)
        for x in range(1, n - 1):
            classes.append((_pair(a, x), _pair(x, b)))
        classes[0] = classes[0] + (_pair(a, b),)
        return classes
    # r == 3: K_{n-2} as the 4k+1 case plus {ax, xb}; ab reuses class 1
    a, b = n - 1, n
    classes = _factor_classes(n - 1, seed, drop_vertex=n - 1)
    for x in range(1, n - 1):
        classes.append((_pair(a, x), _pair(x, b)))
    classes[0] = classes[0] + (_pair(a, b),)
    return classes


# The ten pairs of a 5-set split into five classes of two disjoint pairs,
# class i = {p_i p_{i+1}, p_{i+2} p_{i+4}} (indices mod 5).
def _five_block_classes(block):
    p = list(block)
    out = []
    for i in range(5):
        out.append(tuple(sorted((_pair(p[i], p[(i + 1) % 5]),
                                 _pair(p[(i + 2) % 5], p[(i + 4) % 5])))))
    return out


def psi_tight_coloring(n: int = 20) -> Coloring:
    """The complete coloring of K(20,2) with 100 = psi(K(20,2)) classes.

    Deletes a point of the (21,5,1)-design: each surviving 5-block yields
    five 2-classes; the five punctured blocks yield the f-singletons and the
    e-pairs across consecutive blocks.
    """
    if n != 20:
        raise ParameterDomainError(
            f"tightness construction is n = 20 only (n+1 = 1 mod 20 at desk scale), got {n}")
    design = construct_design_21_5_1()
    v = 21
    full = [blk for blk in design.blocks if v not in blk]
    punctured = sorted(tuple(p for p in blk if p != v) for blk in design.blocks if v in blk)
    classes = []
    for blk in full:
        classes.extend(_five_block_classes(blk))
    f_edges = []
    e_edges = {}
    for i, (q1, q2, q3, q4) in enumerate(punctured):
        f_edges.append(_pair(q1, q2))
        f_edges.append(_pair(q3, q4))
        e_edges[i] = _pair(q1, q3)
        e_edges[5 + i] = _pair(q1, q4)
        e_edges[10 + i] = _pair(q2, q3)
        e_edges[15 + i] = _pair(q2, q4)
    for i in range(10):
        classes.append(tuple(sorted((e_edges[2 * i], e_edges[2 * i + 1]))))
    for e in f_edges:
        classes.append((e,))
    coloring = Coloring(("kneser", 20, 2), tuple(classes))
    if coloring.color_count != 100:
        raise CertificateError(f"tight coloring built {coloring.color_count} classes, wants 100")
    rep = verify_coloring(build_kneser(20, 2), coloring, checks={"complete"})
    if not rep.complete:
        raise CertificateError(f"tightness completeness failed: {rep.witnesses}")
    return coloring


class MatchingGraph:
    """Disjoint union of m edges; vertex t's partner is t +- m (1-based)."""

    def __init__(self, m: int):
        self.m = m
        self.vertices = tuple(range(1, 2 * m + 1))

    @property
    def vertex_count(self):
        return 2 * self.m

    def index(self, v):
        if not 1 <= v <= 2 * self.m:
            raise ValueError(f"vertex {v} outside matching of size {self.m}")
        return v - 1

    def edges(self):
        for t in range(self.m):
            yield t, t + self.m


def matching_coloring(m: int) -> Coloring:
    """Proper complete coloring of an m-edge matching with max_colors_for_pairs(m) colors.

    Edge t < C(r,2) gets the t-th color pair {i,j} (lexicographic); leftover
    edges cycle through the pairs again.
    """
    if m < 1:
        raise ParameterDomainError(f"matching needs m >= 1 edges, got {m}")
    r = max_colors_for_pairs(m)
    pairs = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    color = {}
    for t in range(m):
        i, j = pairs[t % len(pairs)]
        color[t + 1] = i          # edge t joins vertices t+1 and t+1+m
        color[t + 1 + m] = j
    classes = tuple(tuple(v for v in range(1, 2 * m + 1) if color[v] == c)
                    for c in range(1, r + 1))
    coloring = Coloring(("matching", m), classes)
    rep = verify_coloring(MatchingGraph(m), coloring, checks={"proper", "complete"})
    if not (rep.proper and rep.complete):
        raise CertificateError(f"matching coloring failed: {rep.witnesses}")
    return coloring


def kneser_matching_coloring(k: int) -> Coloring:
    """matching_coloring transported onto K(2k,k), whose edges pair complements."""
    if k < 1:
        raise ParameterDomainError(f"needs k >= 1, got {k}")
    g = build_kneser(2 * k, k)
    reps = [v for v in g.vertices if 1 in v]
    m = len(reps)
    base = matching_coloring(m)
    color = {}
    for ci, cls in enumerate(base.classes):
        for vlab in cls:
            color[vlab] = ci
    full = set(range(1, 2 * k + 1))
    classes = [[] for _ in base.classes]
    for t, rep_v in enumerate(reps):
        comp = tuple(sorted(full - set(rep_v)))
        classes[color[t + 1]].append(rep_v)
        classes[color[t + 1 + m]].append(comp)
    coloring = Coloring(("kneser", 2 * k, k),
                        tuple(tuple(sorted(cls)) for cls in classes))
    rep = verify_coloring(g, coloring, checks={"proper", "complete"})
    if not (rep.proper and rep.complete):
        raise CertificateError(f"K(2k,k) matching coloring failed: {rep.witnesses}")
    return coloring
