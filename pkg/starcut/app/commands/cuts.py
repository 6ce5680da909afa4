from __future__ import annotations

from typing import Optional

import click

from starcut.app.commands.common import RunContext, emit_json
from starcut.app.errors import OutOfTheoremRangeError
from starcut.app.schemas import CutMode
from starcut.app.services.cut_construct import construct_cut
from starcut.app.services.exact_solver import (edge_connectivity, lambda_h_bruteforce,
                                               lambda_h_exact)
from starcut.app.services.export import solver_payload, witness_payload
from starcut.app.services.formula import theorem_value
from starcut.app.services.graph_core import build_star

_MODES = {"sub": CutMode.SUB_CLIQUE, "full": CutMode.FULL_CLIQUE}


def _theorem_or_none(n: int, k: int, h: int) -> Optional[int]:
    try:
        return theorem_value(n, k, h)
    except OutOfTheoremRangeError:
        return None


@click.command("cut")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("h", type=int)
@click.option("--alpha", default=None, help="Clique key (bits 2..k), e.g. 23. Defaults to 23...k.")
@click.option("--mode", type=click.Choice(sorted(_MODES)), default="sub", show_default=True)
@click.pass_context
def cut(ctx: click.Context, n: int, k: int, h: int, alpha: Optional[str], mode: str) -> None:
    """Build the clique-based h-edge-cut and verify it."""
    run: RunContext = ctx.obj
    g = build_star(n, k)
    w = construct_cut(g, h, alpha=alpha, mode=_MODES[mode])
    payload = witness_payload(g, w)
    payload.update(mode=w.mode.value, cutSize=w.cut_size)
    emit_json(run, payload)
    if not w.valid:
        ctx.exit(1)


@click.command("lambda")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.pass_context
def lambda_cmd(ctx: click.Context, n: int, k: int) -> None:
    """Classical edge connectivity of S_{n,k} (expected n-1)."""
    run: RunContext = ctx.obj
    value = edge_connectivity(build_star(n, k))
    emit_json(run, {"n": n, "k": k, "value": value, "expected": n - 1})
    if value != n - 1:
        ctx.exit(1)


@click.command("lambda-h")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("h", type=int)
@click.option("--bruteforce", is_flag=True, help="Also run the unpruned scan (30 vertices max).")
@click.option("--all-roots", is_flag=True, help="Search from every root instead of vertex 0 only.")
@click.pass_context
def lambda_h(ctx: click.Context, n: int, k: int, h: int, bruteforce: bool, all_roots: bool) -> None:
    """Exact h-super edge-connectivity with an optimal witness."""
    run: RunContext = ctx.obj
    g = build_star(n, k)
    result = lambda_h_exact(
        g, h, budget=run.budget, threads=run.threads, use_symmetry=not all_roots
    )
    expected = _theorem_or_none(n, k, h)
    payload = solver_payload(g, result)
    payload["theoremValue"] = expected
    if bruteforce:
        payload["bruteforceValue"] = lambda_h_bruteforce(g, h)
    emit_json(run, payload)

    if not result.exact:
        ctx.exit(3)
    if expected is not None and result.value != expected:
        ctx.exit(1)
    if bruteforce and payload["bruteforceValue"] != result.value:
        ctx.exit(1)
