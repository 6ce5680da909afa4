from __future__ import annotations

import networkx as nx
import pytest

from starcut.app.errors import ParameterError, SizeError
from starcut.app.models import SimpleGraph
from starcut.app.schemas import SearchBudget
from starcut.app.services.decomposition import clique_key
from starcut.app.services.exact_solver import (edge_connectivity, lambda_h_bruteforce,
                                               lambda_h_exact)
from starcut.app.services.formula import theorem_value
from starcut.app.services.graph_core import build_star


def _regular(seed: int) -> tuple[nx.Graph, SimpleGraph]:
    nxg = nx.random_regular_graph(4, 16, seed=seed)
    return nxg, SimpleGraph.from_edges(16, list(nxg.edges()))


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3)])
def test_edge_connectivity_of_star_graphs(n, k):
    assert edge_connectivity(build_star(n, k)) == n - 1


def test_edge_connectivity_disconnected():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    assert edge_connectivity(g) == 0


@pytest.mark.parametrize("seed", range(20))
def test_random_regular_agrees_with_networkx(seed):
    nxg, g = _regular(seed)
    expected = nx.edge_connectivity(nxg)
    assert edge_connectivity(g) == expected
    assert lambda_h_exact(g, 0).value == expected


@pytest.mark.parametrize("seed", range(20))
def test_random_regular_agrees_with_bruteforce(seed):
    _, g = _regular(seed)
    for h in range(0, 5):
        result = lambda_h_exact(g, h)
        assert result.exact
        assert result.value == lambda_h_bruteforce(g, h), f"h={h}"
        if result.witness is not None:
            assert result.witness.valid
            assert result.witness.cut_size == result.value


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (3, 1), (4, 1), (5, 1)])
def test_star_graphs_agree_with_bruteforce(n, k):
    g = build_star(n, k)
    for h in range(0, 5):
        value = lambda_h_bruteforce(g, h)
        assert lambda_h_exact(g, h).value == value
        assert lambda_h_exact(g, h, use_symmetry=False).value == value


@pytest.mark.slow
@pytest.mark.parametrize("n,k", [(4, 3), (5, 2), (6, 2)])
def test_larger_star_graphs_agree_with_bruteforce(n, k):
    g = build_star(n, k)
    for h in range(0, 5):
        assert lambda_h_exact(g, h).value == lambda_h_bruteforce(g, h)


def test_s42_h2_is_a_clique(s42):
    result = lambda_h_exact(s42, 2)
    assert result.exact and result.value == 3
    w = result.witness
    assert 0 in w.x and len(w.x) == 3
    assert len({clique_key(s42, v) for v in w.x}) == 1
    assert w.valid and w.components == 2


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_matches_theorem_small(n, k):
    g = build_star(n, k)
    for h in range(0, n - k + 1):
        result = lambda_h_exact(g, h)
        assert result.exact
        assert result.value == theorem_value(n, k, h)


@pytest.mark.slow
@pytest.mark.parametrize("n,k", [(5, 3), (6, 2)])
def test_matches_theorem_desk_scale(n, k):
    g = build_star(n, k)
    for h in range(0, n - k + 1):
        result = lambda_h_exact(g, h)
        assert result.exact
        assert result.value == theorem_value(n, k, h)


def test_single_root_matches_all_roots(s43):
    for h in range(0, 2):
        a = lambda_h_exact(s43, h)
        b = lambda_h_exact(s43, h, use_symmetry=False)
        assert a.value == b.value
        assert a.witness.x == b.witness.x


def test_threads_do_not_change_the_answer(s42):
    for h in range(0, 3):
        one = lambda_h_exact(s42, h, use_symmetry=False)
        many = lambda_h_exact(s42, h, threads=4, use_symmetry=False)
        assert (one.value, one.witness.x) == (many.value, many.witness.x)


def test_witness_is_deterministic(s43):
    assert lambda_h_exact(s43, 1).witness == lambda_h_exact(s43, 1).witness


def test_infeasible_degree_returns_none(s32):
    result = lambda_h_exact(s32, 3)
    assert result.value is None and result.exact
    assert not result.found
    assert lambda_h_bruteforce(s32, 3) is None


def test_node_budget_makes_result_inexact(s43):
    result = lambda_h_exact(s43, 1, budget=SearchBudget(node_limit=1))
    assert not result.exact
    # The constructive seed is still reported as the best found.
    assert result.value == theorem_value(4, 3, 1)


def test_subset_cap_makes_result_inexact(s42):
    result = lambda_h_exact(s42, 1, budget=SearchBudget(max_subset_size=1))
    assert not result.exact


@pytest.mark.parametrize("kwargs", [{"h": -1}, {"h": 1, "threads": 0}])
def test_rejects_bad_arguments(s42, kwargs):
    with pytest.raises(ParameterError):
        lambda_h_exact(s42, **kwargs)


def test_bruteforce_is_capped(s53):
    with pytest.raises(SizeError):
        lambda_h_bruteforce(s53, 1)


def test_bruteforce_rejects_low_degree_vertices_away_from_the_cut():
    # Two K4s joined by one edge, with a pendant vertex hanging off vertex 1.
    k4 = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges = k4 + [(a + 4, b + 4) for a, b in k4] + [(3, 4), (1, 8)]
    g = SimpleGraph.from_edges(9, edges)
    assert lambda_h_exact(g, 2).value is None
    assert lambda_h_bruteforce(g, 2) is None
    assert lambda_h_exact(g, 1).value == lambda_h_bruteforce(g, 1) == 1


def _assert_monotone_in_h(g, h_max):
    values = [lambda_h_exact(g, h).value for h in range(0, h_max + 1)]
    found = [v for v in values if v is not None]
    # Once no h-edge-cut exists, none exists for larger h either.
    assert values[: len(found)] == found, values
    assert found == sorted(found), values


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_star_graph_values_grow_with_h(n, k):
    _assert_monotone_in_h(build_star(n, k), n - 1)


@pytest.mark.parametrize("seed", range(20))
def test_random_regular_values_grow_with_h(seed):
    _, g = _regular(seed)
    _assert_monotone_in_h(g, 4)
