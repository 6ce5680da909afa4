from __future__ import annotations

from typing import Optional

import click

from starcut.app.commands.common import RunContext, emit
from starcut.app.services.export import sweep_to_csv, sweep_to_json
from starcut.app.services.harness import fault_trial, lemma28_check, run_sweep


@click.command("verify")
@click.option("--n-max", type=int, default=5, show_default=True)
@click.option(
    "--max-vertices",
    type=int,
    default=None,
    help="Skip graphs with more vertices (default: STARCUT_MAX_VERTICES).",
)
@click.option("--timings", is_flag=True, help="Fill the elapsed_ms column.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.pass_context
def verify(
    ctx: click.Context, n_max: int, max_vertices: Optional[int], timings: bool, fmt: str
) -> None:
    """Compare the closed form with the exact solver over the (n, k, h) lattice."""
    run: RunContext = ctx.obj
    report = run_sweep(
        n_max,
        budget=run.budget,
        threads=run.threads,
        max_vertices=run.settings.max_vertices if max_vertices is None else max_vertices,
        timings=timings,
    )
    emit(run, sweep_to_csv(report) if fmt == "csv" else sweep_to_json(report))
    click.echo(
        f"{len(report.rows)} instances: "
        f"{len(report.mismatches)} mismatches, {len(report.inconclusive)} inconclusive",
        err=True,
    )
    ctx.exit(report.exit_code)


@click.command("lemma28")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("h", type=int)
@click.argument("t", type=int)
@click.pass_context
def lemma28(ctx: click.Context, n: int, k: int, h: int, t: int) -> None:
    """Split an optimal h-edge-cut along bit t and check every part it cuts."""
    run: RunContext = ctx.obj
    report = lemma28_check(n, k, h, t, budget=run.budget, threads=run.threads)
    emit(run, report.model_dump_json(by_alias=True, indent=2))
    if not report.exact:
        ctx.exit(3)
    if not report.passed:
        ctx.exit(1)


@click.command("fault-trial")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("h", type=int)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.pass_context
def fault_trial_cmd(ctx: click.Context, n: int, k: int, h: int, trials: int) -> None:
    """Remove theoremValue - 1 random edges and look for a disconnection."""
    run: RunContext = ctx.obj
    report = fault_trial(n, k, h, trials=trials, seed=run.seed)
    emit(run, report.model_dump_json(by_alias=True, indent=2))
    if not report.passed:
        ctx.exit(1)
