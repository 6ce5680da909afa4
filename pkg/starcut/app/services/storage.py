from __future__ import annotations

import os
import re
from pathlib import Path
from uuid import uuid4

from starcut.app.config import get_settings
from starcut.app.errors import OutputError


def _safe_stem(name: str) -> str:
    name = re.sub(r"[^A-Za-z0-9._-]+", "_", name).strip("._")
    return name or "report"


def reports_root() -> Path:
    """
    Root directory for generated reports.
    Kept outside starcut/ so it's clearly generated data.
    """
    return get_settings().output_dir


def default_report_path(kind: str, suffix: str) -> Path:
    """
    Returns a path like:
    data/reports/verify.csv
    """
    return reports_root() / f"{_safe_stem(kind)}.{suffix.lstrip('.')}"


def write_report(path: Path, text: str) -> Path:
    """
    Write `text` to `path` with a single writer per target.

    A sibling `.lock` file is created exclusively for the duration of the
    write; the content lands in a temp file that replaces the target at once.
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create {path.parent}: {exc}") from exc

    lock = path.with_name(path.name + ".lock")
    try:
        fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError:
        raise OutputError(f"{path} is being written by another process") from None
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc

    tmp = path.with_name(f".{path.name}.{uuid4().hex}.tmp")
    try:
        os.close(fd)
        tmp.write_text(text, encoding="utf-8", newline="")
        os.replace(tmp, path)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc
    finally:
        tmp.unlink(missing_ok=True)
        lock.unlink(missing_ok=True)
    return path
