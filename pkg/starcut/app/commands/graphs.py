from __future__ import annotations

import click

from starcut.app.commands.common import RunContext, emit, emit_json, pass_run
from starcut.app.services.decomposition import (decompose, expected_cross_size,
                                                expected_part_size, summarize)
from starcut.app.services.export import EXPORT_FORMATS, render_graph
from starcut.app.services.formula import evaluate, psi_branch, star_graph_values
from starcut.app.services.graph_core import build_star, check_structure, neighbors


@click.command("gen")
@click.argument("n", type=int)
@click.argument("k", type=int)
@pass_run
def gen(run: RunContext, n: int, k: int) -> None:
    """List every vertex of S_{n,k} with its tagged neighbours."""
    g = build_star(n, k)
    lines = []
    for v in range(g.n_vertices):
        entries = " ".join(f"{g.labels[u]}[{tag}]" for u, tag in neighbors(g, v))
        lines.append(f"{g.labels[v]}: {entries}")
    emit(run, "\n".join(lines))


@click.command("info")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.pass_context
def info(ctx: click.Context, n: int, k: int) -> None:
    """Size, regularity and the closed-form values of S_{n,k}."""
    run: RunContext = ctx.obj
    g = build_star(n, k)
    problems = check_structure(g)
    payload = {
        "n": n,
        "k": k,
        "vertices": g.n_vertices,
        "edges": g.edge_count,
        "degree": sorted(set(g.degrees)),
        "swapDegree": k - 1,
        "unswapDegree": n - k,
        "problems": problems,
    }
    if k >= 2:
        values = {}
        for h in range(0, n - k + 1):
            entry = evaluate(n, k, h).model_dump(by_alias=True, mode="json")
            entry["psiArm"] = psi_branch(n, k, h).arm.value if 2 * h <= n - 2 else None
            values[str(h)] = entry
        payload["theoremValues"] = values
    if k == n - 1:
        payload["starGraph"] = star_graph_values(n).model_dump(by_alias=True)
    emit_json(run, payload)
    if problems:
        ctx.exit(1)


@click.command("decompose")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("t", type=int)
@click.pass_context
def decompose_cmd(ctx: click.Context, n: int, k: int, t: int) -> None:
    """Split S_{n,k} along bit t and check parts and cross matchings."""
    run: RunContext = ctx.obj
    view = decompose(build_star(n, k), t)
    summary = summarize(view)

    part_size = expected_part_size(n, k)
    cross_size = expected_cross_size(n, k)
    ok = (
        all(size == part_size for size in summary.part_sizes.values())
        and all(c.edges == cross_size for c in summary.cross_counts)
        and all(summary.isomorphic.values())
    )
    payload = summary.model_dump(by_alias=True, mode="json")
    payload.update(expectedPartSize=part_size, expectedCrossSize=cross_size, ok=ok)
    emit_json(run, payload)
    if not ok:
        ctx.exit(1)


@click.command("export")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(EXPORT_FORMATS),
    default="dot",
    show_default=True,
)
@pass_run
def export(run: RunContext, n: int, k: int, fmt: str) -> None:
    """Serialize S_{n,k} as DOT, canonical JSON or a CSV edge list."""
    emit(run, render_graph(build_star(n, k), fmt))
