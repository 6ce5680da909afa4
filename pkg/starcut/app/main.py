"""
starcut command line.

    python -m starcut.app.main verify --n-max 5
    python -m starcut.app.main --output data/reports/s42.dot export 4 2
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError

from starcut.app.commands.common import RunContext
from starcut.app.config import get_settings
from starcut.app.errors import ParameterError, StarcutError
from starcut.app.schemas import SearchBudget

_LEVELS = ["WARNING", "INFO", "DEBUG"]


class StarcutGroup(click.Group):
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except StarcutError as exc:
            click.echo(f"error: {exc.detail}", err=True)
            ctx.exit(exc.exit_code)


def _log_level(configured: str, verbose: int) -> str:
    if verbose == 0:
        return configured
    floor = _LEVELS.index(configured) if configured in _LEVELS else 0
    return _LEVELS[min(len(_LEVELS) - 1, max(floor, verbose))]


@click.group(cls=StarcutGroup)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized trials.")
@click.option("--budget-ms", type=int, default=None, help="Solver time budget per instance.")
@click.option("--threads", type=int, default=None, help="Solver worker threads.")
@click.option(
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the result here instead of stdout.",
)
@click.option("-v", "--verbose", count=True, help="Repeat for more logging.")
@click.pass_context
def cli(
    ctx: click.Context,
    seed: int,
    budget_ms: Optional[int],
    threads: Optional[int],
    output: Optional[Path],
    verbose: int,
) -> None:
    """(n,k)-star graphs and their h-super edge-connectivity."""
    settings = get_settings()
    logging.basicConfig(
        level=_log_level(settings.log_level, verbose),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        budget = SearchBudget(
            time_limit_ms=budget_ms if budget_ms is not None else settings.budget_ms,
            node_limit=settings.node_limit,
        )
    except ValidationError:
        raise ParameterError(f"--budget-ms must be > 0, got {budget_ms}") from None
    ctx.obj = RunContext(
        settings=settings,
        seed=seed,
        budget=budget,
        threads=threads if threads is not None else settings.threads,
        output=output,
    )


# --- Command wiring ---
from starcut.app.commands import cuts, graphs, verification  # noqa: E402

cli.add_command(graphs.gen)
cli.add_command(graphs.info)
cli.add_command(graphs.decompose_cmd)
cli.add_command(graphs.export)
cli.add_command(cuts.cut)
cli.add_command(cuts.lambda_cmd)
cli.add_command(cuts.lambda_h)
cli.add_command(verification.verify)
cli.add_command(verification.lemma28)
cli.add_command(verification.fault_trial_cmd)


if __name__ == "__main__":
    cli()
