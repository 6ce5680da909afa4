from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from starcut.app.errors import InvalidInputError, ParameterError
from starcut.app.models import EdgeTag, SimpleGraph, StarGraph
from starcut.app.schemas import CutWitness, GraphSpec, SolverResult, SweepReport
from starcut.app.services.graph_core import build

EXPORT_FORMATS = ("dot", "json", "csv-edges")

SWEEP_COLUMNS = [
    "n",
    "k",
    "h",
    "theorem_value",
    "solver_value",
    "exact",
    "match",
    "elapsed_ms",
]

_templates = Environment(
    loader=FileSystemLoader(str(Path(__file__).resolve().parent.parent / "templates")),
    trim_blocks=True,
    lstrip_blocks=True,
    undefined=StrictUndefined,
    keep_trailing_newline=True,
)


def _dumps(payload: object) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


# ---------- graphs ----------


def graph_to_json(g: StarGraph) -> str:
    payload = {
        "n": g.n,
        "k": g.k,
        "vertices": list(g.labels),
        "edges": [[u, v, str(tag)] for u, v, tag in g.tagged_edges()],
    }
    return _dumps(payload)


def graph_from_json(text: str) -> StarGraph:
    """Parse canonical JSON and rebuild the graph; the payload must match the rebuild exactly."""
    try:
        payload = json.loads(text)
        spec = GraphSpec.of(int(payload["n"]), int(payload["k"]))
        edges = [(int(u), int(v), EdgeTag.parse(tag)) for u, v, tag in payload["edges"]]
        vertices = [str(label) for label in payload["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"not a canonical graph document: {exc}") from exc

    g = build(spec)
    if vertices != list(g.labels):
        raise InvalidInputError("vertex list does not match the canonical order")
    if edges != list(g.tagged_edges()):
        raise InvalidInputError("edge list does not match the canonical adjacency")
    return g


def graph_to_dot(g: StarGraph) -> str:
    return _templates.get_template("graph.dot.j2").render(
        name=f"S_{g.n}_{g.k}",
        labels=g.labels,
        edges=[(u, v, str(tag)) for u, v, tag in g.tagged_edges()],
    )


def graph_to_csv_edges(g: StarGraph) -> str:
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(["u", "v", "tag"])
    for u, v, tag in g.tagged_edges():
        writer.writerow([g.labels[u], g.labels[v], str(tag)])
    return output.getvalue()


def render_graph(g: StarGraph, fmt: str) -> str:
    if fmt == "dot":
        return graph_to_dot(g)
    if fmt == "json":
        return graph_to_json(g)
    if fmt == "csv-edges":
        return graph_to_csv_edges(g)
    raise ParameterError(f"unknown export format {fmt!r} (allowed: {', '.join(EXPORT_FORMATS)})")


# ---------- cuts and solver results ----------


def witness_payload(g: SimpleGraph, w: CutWitness) -> dict:
    return {
        "X": [g.label(v) for v in w.x],
        "B": [[g.label(u), g.label(v)] for u, v in w.boundary],
        "h": w.h,
        "valid": w.valid,
        "components": w.components,
        "minDegInside": w.min_deg_inside,
        "minDegOutside": w.min_deg_outside,
        "flagged": w.flagged,
        "lowDegreeVertices": [g.label(v) for v in w.low_degree_vertices],
    }


def solver_payload(g: SimpleGraph, result: SolverResult) -> dict:
    return {
        "value": result.value,
        "exact": result.exact,
        "nodesExplored": result.nodes_explored,
        "elapsedMs": result.elapsed_ms,
        "witness": witness_payload(g, result.witness) if result.witness is not None else None,
    }


# ---------- sweeps ----------


def _cell(value: object) -> object:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def sweep_to_csv(report: SweepReport) -> str:
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.n,
                row.k,
                row.h,
                row.theorem_value,
                _cell(row.solver_value),
                _cell(row.exact),
                _cell(row.match),
                _cell(row.elapsed_ms),
            ]
        )
    return output.getvalue()


def sweep_to_json(report: SweepReport) -> str:
    return report.model_dump_json(indent=2)
