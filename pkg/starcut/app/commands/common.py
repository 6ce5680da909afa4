from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click

from starcut.app.config import Settings
from starcut.app.schemas import SearchBudget
from starcut.app.services.storage import write_report


@dataclass(frozen=True)
class RunContext:
    """Options shared by every command, resolved once by the group."""

    settings: Settings
    seed: int
    budget: SearchBudget
    threads: int
    output: Optional[Path]


pass_run = click.make_pass_decorator(RunContext)


def emit(run: RunContext, text: str) -> None:
    """Write to --output when given, else to stdout."""
    if not text.endswith("\n"):
        text += "\n"
    if run.output is None:
        click.echo(text, nl=False)
        return
    path = write_report(run.output, text)
    click.echo(f"wrote {path}", err=True)


def emit_json(run: RunContext, payload: object) -> None:
    emit(run, json.dumps(payload, indent=2, ensure_ascii=False))
