"""Exact exponential-time ground truth for chi, Gamma, alpha, psi on small graphs.

alpha and psi share one branch-and-bound over class assignments (properness
is a toggle); the search walks target counts downward so every reported
value is both attained and refuted at value+1.  Admissible prunes only:
pair-count versus remaining-edge budget, open-class feasibility, and the
singleton-degree argument (a singleton class must see every other class).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb

from .errors import SizeCapError


@dataclass(frozen=True)
class OracleResult:
    param: str
    value: int
    nodes_explored: int
    seconds: float

    def as_dict(self):
        return {"param": self.param, "value": self.value,
                "nodes_explored": self.nodes_explored,
                "seconds": round(self.seconds, 6)}


def _adjacency_bits(g):
    if hasattr(g, "adjacency_bitsets"):
        return list(g.adjacency_bitsets())
    verts = list(g.vertices)
    bits = [0] * len(verts)
    for i, j in g.edges():
        bits[i] |= 1 << j
        bits[j] |= 1 << i
    return bits


def _check_cap(g, cap, what):
    if g.vertex_count > cap:
        raise SizeCapError(f"{what} capped at {cap} vertices, graph has {g.vertex_count}")


def exact_chromatic(g, cap: int = 24) -> OracleResult:
    """Minimum proper coloring size, by iterative deepening from a clique bound."""
    _check_cap(g, cap, "exact_chromatic")
    t0 = time.time()
    adj = _adjacency_bits(g)
    V = len(adj)
    if V == 0:
        return OracleResult("chi", 0, 0, time.time() - t0)
    deg = [a.bit_count() for a in adj]
    clique = []
    for v in sorted(range(V), key=lambda v: -deg[v]):
        if all((adj[v] >> u) & 1 for u in clique):
            clique.append(v)
    lb = max(1, len(clique))
    nodes = 0

    def colorable(l):
        nonlocal nodes
        color = [0] * V

        def rec(assigned, maxc):
            nonlocal nodes
            nodes += 1
            if assigned == V:
                return True
            # most saturated uncolored vertex, ties by degree
            best, bsat, bdeg = -1, -1, -1
            for v in range(V):
                if color[v]:
                    continue
                sat = 0
                seen = 0
                m = adj[v]
                while m:
                    low = m & -m
                    u = low.bit_length() - 1
                    m ^= low
                    if color[u]:
                        bit = 1 << color[u]
                        if not seen & bit:
                            seen |= bit
                            sat += 1
                if sat > bsat or (sat == bsat and deg[v] > bdeg):
                    best, bsat, bdeg = v, sat, deg[v]
            v = best
            used = set()
            m = adj[v]
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if color[u]:
                    used.add(color[u])
            for c in range(1, min(l, maxc + 1) + 1):
                if c in used:
                    continue
                color[v] = c
                if rec(assigned + 1, max(maxc, c)):
                    return True
                color[v] = 0
            return False

        return rec(0, 0)

    l = lb
    while not colorable(l):
        l += 1
    return OracleResult("chi", l, nodes, time.time() - t0)


def _complete_max(g, proper: bool, cap: int, param: str) -> OracleResult:
    _check_cap(g, cap, f"exact_{param}")
    t0 = time.time()
    adj = _adjacency_bits(g)
    V = len(adj)
    E = sum(a.bit_count() for a in adj) // 2
    deg = [a.bit_count() for a in adj]
    maxdeg = max(deg, default=0)
    hi = 1
    while comb(hi + 1, 2) <= E:
        hi += 1
    hi = min(hi, V)
    order = sorted(range(V), key=lambda v: (-deg[v], v))
    nodes = 0

    def feasible(l):
        nonlocal nodes
        if l == 1:
            return True
        if 2 * l > V and maxdeg < l - 1:
            # some class must be a singleton, and a singleton must be
            # adjacent to all l-1 other classes
            return False
        classes = [0] * l
        seen = [0] * l
        assigned = 0

        def rec(pos, used, unseen, erem):
            nonlocal nodes, assigned
            nodes += 1
            if unseen == 0 and used == l:
                return True
            if pos == V or used + (V - pos) < l or unseen > erem:
                return False
            v = order[pos]
            av = adj[v]
            for c in range(min(used + 1, l)):
                if proper and classes[c] & av:
                    continue
                newly = []
                for c2 in range(l):
                    if c2 != c and classes[c2] & av and not (seen[c] >> c2) & 1:
                        newly.append(c2)
                classes[c] |= 1 << v
                for c2 in newly:
                    seen[c] |= 1 << c2
                    seen[c2] |= 1 << c
                e_used = (av & assigned).bit_count()
                assigned |= 1 << v
                if rec(pos + 1, max(used, c + 1), unseen - len(newly), erem - e_used):
                    return True
                assigned &= ~(1 << v)
                classes[c] &= ~(1 << v)
                for c2 in newly:
                    seen[c] &= ~(1 << c2)
                    seen[c2] &= ~(1 << c)
            return False

        return rec(0, 0, l * (l - 1) // 2, E)

    for l in range(hi, 0, -1):
        if feasible(l):
            return OracleResult(param, l, nodes, time.time() - t0)
    return OracleResult(param, 1, nodes, time.time() - t0)


def exact_achromatic(g, cap: int = 16) -> OracleResult:
    """Maximum proper complete coloring size."""
    return _complete_max(g, proper=True, cap=cap, param="alpha")


def exact_pseudoachromatic(g, cap: int = 16) -> OracleResult:
    """Maximum complete coloring size (properness dropped)."""
    return _complete_max(g, proper=False, cap=cap, param="psi")


def exact_grundy(g, cap: int = 16) -> OracleResult:
    """Maximum l admitting a Grundy l-coloring (every color j sees all i < j)."""
    _check_cap(g, cap, "exact_grundy")
    t0 = time.time()
    adj = _adjacency_bits(g)
    V = len(adj)
    if V == 0:
        return OracleResult("grundy", 0, 0, time.time() - t0)
    deg = [a.bit_count() for a in adj]
    hi = min(max(deg) + 1, V)
    order = sorted(range(V), key=lambda v: (-deg[v], v))
    nodes = 0

    def feasible(l):
        nonlocal nodes
        color = [0] * V

        def rec(pos, used_max):
            nonlocal nodes
            nodes += 1
            if pos == V:
                if used_max != l:
                    return False
                for v in range(V):
                    have = 0
                    m = adj[v]
                    while m:
                        low = m & -m
                        have |= 1 << color[low.bit_length() - 1]
                        m ^= low
                    want = ((1 << color[v]) - 1) ^ 1  # colors 1..c-1
                    if have & want != want:
                        return False
                return True
            v = order[pos]
            av = adj[v]
            have = 0
            unassigned = 0
            m = av
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if color[u]:
                    have |= 1 << color[u]
                else:
                    unassigned += 1
            for c in range(1, min(deg[v] + 1, l) + 1):
                if (have >> c) & 1:
                    continue
                missing = 0
                for i in range(1, c):
                    if not (have >> i) & 1:
                        missing += 1
                if missing > unassigned:
                    continue
                color[v] = c
                if rec(pos + 1, max(used_max, c)):
                    return True
                color[v] = 0
            return False

        return rec(0, 0)

    for l in range(hi, 0, -1):
        if feasible(l):
            return OracleResult("grundy", l, nodes, time.time() - t0)
    return OracleResult("grundy", 1, nodes, time.time() - t0)
