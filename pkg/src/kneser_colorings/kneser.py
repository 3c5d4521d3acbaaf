"""Kneser graphs: vertices are k-subsets of [n], edges join disjoint subsets.

Vertices are kept in colexicographic order; that order is part of the
public contract (JSON exports and search traces index into it).
"""
from __future__ import annotations

import json
from itertools import combinations
from math import comb

from .errors import ForeignVertexError, ParameterDomainError

KSubset = tuple  # sorted tuple of distinct ints in 1..n

_BITSET_CACHE_LIMIT = 4096


def colex_key(subset):
    return tuple(reversed(subset))


def validate_ksubset(subset, n, k) -> None:
    if len(subset) != k:
        raise ParameterDomainError(f"subset {subset} does not have size {k}")
    if list(subset) != sorted(set(subset)):
        raise ParameterDomainError(f"subset {subset} is not strictly increasing")
    if subset and (subset[0] < 1 or subset[-1] > n):
        raise ParameterDomainError(f"subset {subset} not within 1..{n}")


class KneserGraph:
    """Immutable K(n,k). Adjacency is subset disjointness."""

    def __init__(self, n: int, k: int):
        if k < 1 or n < k:
            raise ParameterDomainError(f"K({n},{k}) needs 1 <= k <= n")
        self.n = n
        self.k = k
        self.vertices = tuple(sorted(combinations(range(1, n + 1), k), key=colex_key))
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._adj_bits = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def regular_degree(self) -> int:
        return comb(self.n - self.k, self.k)

    def index(self, v) -> int:
        try:
            return self._index[tuple(v)]
        except KeyError:
            raise ForeignVertexError(f"{v} is not a vertex of K({self.n},{self.k})") from None

    def adjacent_subsets(self, u, v) -> bool:
        if tuple(u) not in self._index or tuple(v) not in self._index:
            raise ForeignVertexError(f"{u} or {v} is not a vertex of K({self.n},{self.k})")
        return not set(u) & set(v)

    def adjacent_idx(self, i: int, j: int) -> bool:
        return not set(self.vertices[i]) & set(self.vertices[j])

    def neighbors_idx(self, i: int):
        bits = self.adjacency_bitsets()[i]
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def adjacency_bitsets(self):
        """Per-vertex neighbor bitsets, cached (|V| here never exceeds the cap)."""
        if self._adj_bits is None:
            if self.vertex_count > _BITSET_CACHE_LIMIT:
                raise ParameterDomainError(
                    f"adjacency cache capped at {_BITSET_CACHE_LIMIT} vertices")
            verts = self.vertices
            sets = [set(v) for v in verts]
            bits = [0] * len(verts)
            for i in range(len(verts)):
                si = sets[i]
                for j in range(i + 1, len(verts)):
                    if not si & sets[j]:
                        bits[i] |= 1 << j
                        bits[j] |= 1 << i
            self._adj_bits = bits
        return self._adj_bits

    def edges(self):
        """Yield index pairs (i, j), i < j, of adjacent vertices."""
        if self.k == 2:
            # walk disjoint pairs directly instead of testing all C(V,2) pairs
            n = self.n
            for i, (a, b) in enumerate(self.vertices):
                rest = [x for x in range(1, n + 1) if x != a and x != b]
                for c, d in combinations(rest, 2):
                    j = self._index[(c, d)]
                    if j > i:
                        yield i, j
        else:
            verts = self.vertices
            sets = [set(v) for v in verts]
            for i in range(len(verts)):
                for j in range(i + 1, len(verts)):
                    if not sets[i] & sets[j]:
                        yield i, j

    def edge_count(self) -> int:
        return self.vertex_count * self.regular_degree // 2

    def to_dot(self) -> str:
        lines = [f'graph "K({self.n},{self.k})" {{']
        for i, v in enumerate(self.vertices):
            label = "{" + ",".join(map(str, v)) + "}"
            lines.append(f'  v{i} [label="{label}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)

    def vertices_json(self) -> str:
        return json.dumps({"n": self.n, "k": self.k,
                           "vertices": [list(v) for v in self.vertices]})


_graph_cache: dict = {}


def build_kneser(n: int, k: int) -> KneserGraph:
    """Construct (and memoize) K(n,k).

    The degenerate boundary cases K(3,2) and K(2,2) (edgeless graphs) are
    meaningful here, so the only requirement is 1 <= k <= n.
    """
    key = (n, k)
    if key not in _graph_cache:
        _graph_cache[key] = KneserGraph(n, k)
    return _graph_cache[key]


def adjacent(g: KneserGraph, u, v) -> bool:
    return g.adjacent_subsets(u, v)


def lovasz_chromatic(n: int, k: int) -> int:
    """chi(K(n,k)) = n - 2(k-1); valid through the edgeless boundary 2k = n+1."""
    if k < 1 or 2 * k > n + 1:
        raise ParameterDomainError(f"chromatic formula needs 1 <= k and 2k <= n+1, got ({n},{k})")
    return n - 2 * (k - 1)
