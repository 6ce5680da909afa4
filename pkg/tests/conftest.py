from __future__ import annotations

import pytest

from starcut.app.config import get_settings
from starcut.app.services.graph_core import build_star


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    # Settings are cached per process; every test starts from a clean environment.
    for name in ("BUDGET_MS", "NODE_LIMIT", "THREADS", "MAX_VERTICES", "OUTPUT_DIR", "LOG_LEVEL"):
        monkeypatch.delenv(f"STARCUT_{name}", raising=False)
    monkeypatch.setenv("STARCUT_OUTPUT_DIR", str(tmp_path / "reports"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def s32():
    return build_star(3, 2)


@pytest.fixture(scope="session")
def s42():
    return build_star(4, 2)


@pytest.fixture(scope="session")
def s43():
    return build_star(4, 3)


@pytest.fixture(scope="session")
def s53():
    return build_star(5, 3)
