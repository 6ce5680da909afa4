from __future__ import annotations

import json

import pytest

from starcut.app.errors import InvalidInputError, ParameterError
from starcut.app.schemas import SweepReport, SweepRow
from starcut.app.services.cut_construct import construct_cut
from starcut.app.services.export import (graph_from_json, graph_to_csv_edges, graph_to_dot,
                                         graph_to_json, render_graph, sweep_to_csv,
                                         witness_payload)
from starcut.app.services.graph_core import build_star


def test_dot_s42(s42):
    dot = graph_to_dot(s42)
    lines = dot.splitlines()
    assert lines[0] == 'graph "S_4_2" {'
    assert sum(1 for line in lines if "[label=" in line) == 12
    edges = [line for line in lines if " -- " in line]
    assert len(edges) == 18
    assert all("[tag=swap_2]" in line or "[tag=unswap]" in line for line in edges)
    assert 'n0 [label="12"];' in dot


def test_csv_edges_s32(s32):
    rows = graph_to_csv_edges(s32).splitlines()
    assert rows[0] == "u,v,tag"
    assert len(rows) == 7
    assert "12,21,swap_2" in rows


def test_json_round_trip(s53):
    text = graph_to_json(s53)
    back = graph_from_json(text)
    assert back.labels == s53.labels
    assert list(back.tagged_edges()) == list(s53.tagged_edges())
    assert graph_to_json(build_star(5, 3)) == text


def test_json_layout(s32):
    payload = json.loads(graph_to_json(s32))
    assert list(payload) == ["n", "k", "vertices", "edges"]
    assert payload["edges"][0] == [0, 2, "swap_2"]


def test_json_rejects_tampering(s32):
    payload = json.loads(graph_to_json(s32))
    payload["edges"] = payload["edges"][1:]
    with pytest.raises(InvalidInputError):
        graph_from_json(json.dumps(payload))
    with pytest.raises(InvalidInputError):
        graph_from_json("{}")
    with pytest.raises(InvalidInputError):
        graph_from_json("not json")


def test_unknown_format(s32):
    with pytest.raises(ParameterError):
        render_graph(s32, "png")


def test_witness_payload_uses_labels(s42):
    w = construct_cut(s42, 2)
    payload = witness_payload(s42, w)
    assert payload["X"] == ["12", "32", "42"]
    assert payload["h"] == 2
    assert all(len(edge) == 2 for edge in payload["B"])


def test_sweep_csv():
    report = SweepReport(
        n_max=3,
        rows=[
            SweepRow(n=3, k=2, h=0, theorem_value=2, solver_value=2, exact=True, match=True),
            SweepRow(n=3, k=2, h=1, theorem_value=2, solver_value=None, exact=False, match=None),
        ],
    )
    assert sweep_to_csv(report).splitlines() == [
        "n,k,h,theorem_value,solver_value,exact,match,elapsed_ms",
        "3,2,0,2,2,true,true,",
        "3,2,1,2,,false,,",
    ]
