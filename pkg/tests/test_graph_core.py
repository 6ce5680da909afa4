from __future__ import annotations

from itertools import permutations
from math import perm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starcut.app.errors import InvalidInputError, ParameterError
from starcut.app.models import EdgeKind, EdgeTag
from starcut.app.schemas import GraphSpec
from starcut.app.services.graph_core import (build_star, check_structure, format_label,
                                             is_automorphism, neighbors, parse_label, rank,
                                             relabel_symbols, unrank, vertex_count, vertex_of)

SMALL_SPECS = [(n, k) for n in range(2, 7) for k in range(1, n)]


@pytest.mark.parametrize("n,k,expected", [(3, 2, 6), (4, 2, 12), (4, 3, 24), (5, 3, 60), (6, 2, 30)])
def test_vertex_count(n, k, expected):
    assert vertex_count(GraphSpec.of(n, k)) == expected
    assert build_star(n, k).n_vertices == expected


def test_s32_is_a_six_cycle(s32):
    assert list(s32.labels) == ["12", "13", "21", "23", "31", "32"]
    assert s32.degrees == (2,) * 6
    assert s32.edge_count == 6


def test_neighbors_of_12_in_s42(s42):
    v = vertex_of(s42, "12")
    got = {s42.labels[u]: str(tag) for u, tag in neighbors(s42, v)}
    assert got == {"21": "swap_2", "32": "unswap", "42": "unswap"}
    assert s42.tag(v, vertex_of(s42, "21")) == EdgeTag.swap(2)


def test_k1_is_complete_graph():
    g = build_star(4, 1)
    assert g.edge_count == 6
    assert all(str(tag) == "unswap" for _, _, tag in g.tagged_edges())


@pytest.mark.parametrize("n,k", SMALL_SPECS)
def test_structure_holds(n, k):
    g = build_star(n, k)
    assert check_structure(g) == []
    assert set(g.degrees) == {n - 1}
    assert g.edge_count == perm(n, k) * (n - 1) // 2


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 4)])
def test_tag_counts_per_vertex(n, k):
    g = build_star(n, k)
    for v in range(g.n_vertices):
        kinds = [tag.kind for _, tag in neighbors(g, v)]
        assert kinds.count(EdgeKind.SWAP) == k - 1
        assert kinds.count(EdgeKind.UNSWAP) == n - k


def test_rank_matches_lexicographic_order():
    spec = GraphSpec.of(5, 3)
    for i, p in enumerate(permutations(range(1, 6), 3)):
        assert rank(p, spec) == i
        assert unrank(i, spec) == p


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_rank_unrank_inverse(data):
    n = data.draw(st.integers(min_value=2, max_value=9))
    k = data.draw(st.integers(min_value=1, max_value=n - 1))
    spec = GraphSpec.of(n, k)
    index = data.draw(st.integers(min_value=0, max_value=perm(n, k) - 1))
    assert rank(unrank(index, spec), spec) == index


def test_unrank_out_of_range():
    spec = GraphSpec.of(4, 2)
    with pytest.raises(IndexError):
        unrank(12, spec)
    with pytest.raises(IndexError):
        unrank(-1, spec)


def test_labels_use_commas_from_n_10():
    assert format_label((1, 2, 3), 9) == "123"
    assert format_label((10, 1), 10) == "10,1"
    assert parse_label("10,1", 10, 2) == (10, 1)


@pytest.mark.parametrize("text", ["11", "15", "1", "", "1a"])
def test_parse_label_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_label(text, 4, 2)


@pytest.mark.parametrize("n,k", [(4, 4), (4, 5), (1, 1), (3, 0)])
def test_graph_spec_bounds(n, k):
    with pytest.raises(ParameterError):
        GraphSpec.of(n, k)


def test_neighbors_out_of_range(s42):
    with pytest.raises(IndexError):
        neighbors(s42, 12)


@pytest.mark.parametrize("text", ["swap_1", "swap_x", "flip"])
def test_edge_tag_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        EdgeTag.parse(text)


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(1, 5))))
def test_symbol_relabeling_is_automorphism(s43, image):
    sigma = dict(zip(range(1, 5), image))
    assert is_automorphism(s43, relabel_symbols(s43, sigma))


def test_relabel_rejects_non_permutation(s42):
    with pytest.raises(ParameterError):
        relabel_symbols(s42, {1: 1, 2: 1, 3: 3, 4: 4})
