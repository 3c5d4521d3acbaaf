from math import comb

import pytest

from kneser_colorings.colorings import verify_coloring
from kneser_colorings.errors import ParameterDomainError
from kneser_colorings.kneser import build_kneser
from kneser_colorings.pseudoachromatic import (MatchingGraph, kneser_matching_coloring,
                                               matching_coloring, psi_lower_coloring,
                                               psi_tight_coloring)

from conftest import brute_complete


def _adjacent(u, v):
    return not set(u) & set(v)


@pytest.mark.parametrize("n,classes", [(7, 10), (8, 14), (9, 18)])
def test_lower_bound_class_counts(n, classes):
    c = psi_lower_coloring(n)
    assert c.color_count == classes == comb(n, 2) // 2


@pytest.mark.parametrize("n", [7, 8, 9, 10, 11, 12, 13, 14])
def test_lower_bound_complete_by_naive_scan(n):
    c = psi_lower_coloring(n)
    ok, witness = brute_complete(c.classes, _adjacent)
    assert ok, witness


def test_lower_bound_rejects_small_n():
    with pytest.raises(ParameterDomainError):
        psi_lower_coloring(6)


def test_lower_bound_covers_all_vertices():
    for n in (7, 8, 9, 10):
        c = psi_lower_coloring(n)
        verts = sorted(v for cls in c.classes for v in cls)
        assert len(verts) == comb(n, 2)
        assert verts == sorted(set(verts))


def test_tight_coloring_at_20():
    c = psi_tight_coloring(20)
    assert c.color_count == 100 == (comb(20, 2) + 10) // 2
    assert c.class_histogram() == {1: 10, 2: 90}
    rep = verify_coloring(build_kneser(20, 2), c, checks={"complete"})
    assert rep.complete


def test_tight_coloring_rejects_other_n():
    with pytest.raises(ParameterDomainError):
        psi_tight_coloring(19)


def test_tight_coloring_not_proper():
    # the five-block pattern's classes each hold two disjoint pairs
    rep = verify_coloring(build_kneser(20, 2), psi_tight_coloring(20),
                          checks={"proper"})
    assert not rep.proper


@pytest.mark.parametrize("m,colors", [(1, 2), (3, 3), (10, 5), (45, 10)])
def test_matching_color_counts(m, colors):
    c = matching_coloring(m)
    assert c.color_count == colors
    rep = verify_coloring(MatchingGraph(m), c, checks={"proper", "complete"})
    assert rep.proper and rep.complete


def test_matching_rejects_zero():
    with pytest.raises(ParameterDomainError):
        matching_coloring(0)


@pytest.mark.parametrize("k,colors", [(2, 3), (3, 5)])
def test_kneser_matching_colorings(k, colors):
    c = kneser_matching_coloring(k)
    g = build_kneser(2 * k, k)
    assert c.color_count == colors
    rep = verify_coloring(g, c, checks={"proper", "complete"})
    assert rep.proper and rep.complete
