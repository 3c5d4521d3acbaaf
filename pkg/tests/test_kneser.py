from itertools import combinations
from math import comb

import pytest

from kneser_colorings.errors import ForeignVertexError, ParameterDomainError
from kneser_colorings.kneser import KneserGraph, adjacent, build_kneser, lovasz_chromatic

from conftest import brute_kneser_edges


def test_petersen_shape():
    g = build_kneser(5, 2)
    assert g.vertex_count == 10
    assert g.edge_count() == 15 == len(brute_kneser_edges(5, 2))
    assert g.regular_degree == 3


def test_k42_is_perfect_matching():
    g = build_kneser(4, 2)
    assert g.vertex_count == 6
    assert g.edge_count() == 3 == len(brute_kneser_edges(4, 2))
    assert g.regular_degree == 1


def test_k32_edgeless_boundary_case():
    g = build_kneser(3, 2)
    assert g.vertex_count == 3
    assert list(g.edges()) == []


def test_adjacency_examples():
    g5 = build_kneser(5, 2)
    assert adjacent(g5, (1, 2), (3, 4))
    assert not adjacent(g5, (1, 2), (2, 3))
    g6 = build_kneser(6, 3)
    assert adjacent(g6, (1, 2, 3), (4, 5, 6))


def test_foreign_vertex_rejected():
    g = build_kneser(5, 2)
    with pytest.raises(ForeignVertexError):
        adjacent(g, (1, 2), (5, 6))
    with pytest.raises(ForeignVertexError):
        g.index((1, 2, 3))


def test_bad_parameters():
    with pytest.raises(ParameterDomainError):
        build_kneser(4, 0)
    with pytest.raises(ParameterDomainError):
        build_kneser(3, 4)


def test_colex_order_is_the_contract():
    g = build_kneser(5, 2)
    assert g.vertices[:6] == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
    assert g.index((3, 4)) == 5


@pytest.mark.parametrize("n", range(2, 13))
def test_degree_audit(n):
    for k in range(1, n // 2 + 1):
        g = build_kneser(n, k)
        want = comb(n - k, k)
        degs = [0] * g.vertex_count
        for i, j in g.edges():
            degs[i] += 1
            degs[j] += 1
        assert all(d == want for d in degs), (n, k)


@pytest.mark.parametrize("n", range(4, 11))
def test_k2_matches_line_graph_complement(n):
    """Adjacency in K(n,2) = edge-disjointness in K_n, built independently."""
    g = build_kneser(n, 2)
    edges_kn = list(combinations(range(1, n + 1), 2))
    for u, v in combinations(edges_kn, 2):
        share = bool(set(u) & set(v))
        assert g.adjacent_subsets(u, v) == (not share)


def test_lovasz_formula():
    assert lovasz_chromatic(5, 2) == 3
    assert lovasz_chromatic(6, 3) == 2
    for k in range(1, 8):
        assert lovasz_chromatic(2 * k, k) == 2
    assert lovasz_chromatic(3, 2) == 1  # edgeless boundary
    with pytest.raises(ParameterDomainError):
        lovasz_chromatic(2, 2)
    with pytest.raises(ParameterDomainError):
        lovasz_chromatic(5, 0)


def test_exports():
    g = build_kneser(4, 2)
    dot = g.to_dot()
    assert '"{1,2}"' in dot and "v0 -- " in dot or "v0 --" in dot
    assert dot.count("--") == 3
    import json
    doc = json.loads(g.vertices_json())
    assert doc["n"] == 4 and len(doc["vertices"]) == 6
    assert doc["vertices"][0] == [1, 2]


def test_graph_cache_returns_same_object():
    assert build_kneser(5, 2) is build_kneser(5, 2)
