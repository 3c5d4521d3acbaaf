from itertools import combinations
from math import comb

import pytest

from kneser_colorings.errors import ParameterDomainError, SizeCapError
from kneser_colorings.geometry import (PointSet, build_dv, convex_position_points,
                                       dv_achromatic_coloring, dvnk_lower_coloring,
                                       orientation, random_convex_position,
                                       random_general_position, segments_disjoint,
                                       thrackle_max_edges, triangle_pair_check)


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (1, 1), (2, 2)) == 0
    assert orientation((0, 0), (0, 1), (1, 0)) == -1


def test_segment_disjointness_examples():
    assert segments_disjoint(((0, 0), (1, 0)), ((0, 1), (1, 1)))
    assert not segments_disjoint(((0, 0), (2, 2)), ((0, 2), (2, 0)))  # crossing
    assert not segments_disjoint(((0, 0), (1, 0)), ((1, 0), (2, 1)))  # shared end


def test_collinear_overlap_detected():
    assert not segments_disjoint(((0, 0), (4, 0)), ((2, 0), (6, 0)))
    assert segments_disjoint(((0, 0), (1, 0)), ((3, 0), (5, 0)))


def test_pointset_validation():
    with pytest.raises(ParameterDomainError):
        PointSet([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(ParameterDomainError):
        PointSet([(0, 0), (0, 0), (1, 2)])


def test_parabola_properties():
    for n in (3, 4, 10):
        ps = convex_position_points(n)
        assert ps.convex_position
        for a, b, c in combinations(range(len(ps)), 3):
            assert orientation(ps.coords[a], ps.coords[b], ps.coords[c]) != 0


def test_random_general_position_seeded():
    ps1 = random_general_position(7, seed=3)
    ps2 = random_general_position(7, seed=3)
    assert ps1.coords == ps2.coords


def test_dv_on_convex_quad():
    # 4 convex points: only the two opposite side pairs are disjoint
    g = build_dv(convex_position_points(4), 2)
    assert g.vertex_count == 6
    assert len(list(g.edges())) == 2


def test_dv_subgraph_of_kneser():
    for seed in range(5):
        ps = random_general_position(6, seed=seed)
        g = build_dv(ps, 2)
        for i, j in g.edges():
            assert not set(g.vertices[i]) & set(g.vertices[j])


def test_dv_edge_count_bounded():
    ps = random_general_position(5, seed=1)
    g = build_dv(ps, 2)
    assert len(list(g.edges())) <= 15


def test_dv_k3_consecutive_arcs():
    g = build_dv(convex_position_points(6), 3)
    assert g.adjacent_subsets((1, 2, 3), (4, 5, 6))


def test_thrackle_convex_equals_n():
    for n in range(3, 8):
        assert thrackle_max_edges(convex_position_points(n)) == n
        assert thrackle_max_edges(random_convex_position(n, seed=n)) == n


def test_thrackle_upper_bound_random_sets():
    for seed in range(10):
        for n in range(3, 8):
            assert thrackle_max_edges(random_general_position(n, seed=seed)) <= n


def test_thrackle_strict_for_interior_point():
    """A triangle with an interior point draws K_4 without crossings, so the
    meeting graph is L(K_4): max thrackle 3 < 4.  Per-set equality in the
    thrackle theorem is a convex-position phenomenon."""
    ps = PointSet([(0, 0), (10, 0), (5, 9), (5, 3)])
    assert thrackle_max_edges(ps) == 3


def test_thrackle_cap():
    with pytest.raises(SizeCapError):
        thrackle_max_edges(convex_position_points(8))


def test_triangle_pairs_parabola_and_random():
    assert triangle_pair_check(convex_position_points(6)).passes
    for seed in range(10):
        rep = triangle_pair_check(random_general_position(7, seed=seed))
        assert rep.passes and rep.pairs_checked > 0


def test_triangle_pairs_skip_shared_edge():
    rep = triangle_pair_check(convex_position_points(4))
    # every pair of triangles on 4 points shares 2 points: nothing to check
    assert rep.pairs_checked == 0 and rep.passes


@pytest.mark.parametrize("n,classes", [(7, 7), (9, 12), (13, 26)])
def test_dv_coloring_odd_route(n, classes):
    c = dv_achromatic_coloring(random_general_position(n, seed=n))
    assert c.color_count == classes == comb(n, 2) // 3


@pytest.mark.parametrize("n,classes", [(8, 12), (12, 26), (14, 35)])
def test_dv_coloring_even_matching_route(n, classes):
    c = dv_achromatic_coloring(convex_position_points(n))
    assert c.color_count == classes == comb(n + 1, 2) // 3


@pytest.mark.parametrize("n", [10, 16])
def test_dv_coloring_even_forest_route(n):
    c = dv_achromatic_coloring(convex_position_points(n))
    assert c.color_count == (n * n + n - 8) // 6


def test_dv_coloring_domain_errors():
    with pytest.raises(ParameterDomainError):
        dv_achromatic_coloring(random_general_position(11, seed=0))  # 11 = 5 mod 6
    nonconvex = PointSet([(0, 0), (10, 0), (5, 9), (5, 3), (20, 5), (1, 17), (13, 40), (-7, 22)])
    assert not nonconvex.convex_position
    with pytest.raises(ParameterDomainError):
        dv_achromatic_coloring(nonconvex)


@pytest.mark.parametrize("n,k,classes", [(8, 2, 6), (6, 2, 3), (12, 3, 20)])
def test_dvnk_halving(n, k, classes):
    c = dvnk_lower_coloring(convex_position_points(n), k)
    assert c.color_count == classes == comb(n // 2, k)


def test_dvnk_needs_even_n():
    with pytest.raises(ParameterDomainError):
        dvnk_lower_coloring(convex_position_points(7), 2)


def test_affine_invariance():
    """Translating and positively scaling coordinates changes no predicate."""
    base = random_general_position(6, seed=9)
    moved = PointSet([(3 * x + 17, 3 * y - 5) for x, y in base.coords])
    g1, g2 = build_dv(base, 2), build_dv(moved, 2)
    assert list(g1.edges()) == list(g2.edges())
    assert thrackle_max_edges(base) == thrackle_max_edges(moved)
