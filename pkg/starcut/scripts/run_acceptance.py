from __future__ import annotations

import argparse
import logging
import sys

from starcut.app.config import get_settings
from starcut.app.errors import StarcutError
from starcut.app.schemas import SearchBudget, SweepReport
from starcut.app.services.export import sweep_to_csv
from starcut.app.services.harness import fault_trial, run_sweep
from starcut.app.services.storage import default_report_path, write_report

# (n, k, h) instances for the randomized fault trials.
FAULT_INSTANCES = [(4, 2, 1), (4, 3, 1), (5, 2, 2), (5, 3, 1), (5, 3, 2), (6, 2, 3)]

# S_{5,4} and S_{6,3} have 120 vertices.
STRETCH_MAX_VERTICES = 120


def run_acceptance(
    n_max: int, max_vertices: int, budget: SearchBudget, trials: int, seed: int
) -> tuple[SweepReport, int]:
    report = run_sweep(n_max, budget=budget, max_vertices=max_vertices, timings=True)
    failed_trials = 0
    for n, k, h in FAULT_INSTANCES:
        if n > n_max:
            continue
        trial = fault_trial(n, k, h, trials=trials, seed=seed)
        status = "ok" if trial.passed else "FAILED"
        print(
            f"fault-trial ({n},{k},{h}): {trial.qualifying}/{trial.trials} qualifying, "
            f"{trial.disconnections} disconnections, planted={trial.planted_disconnects} [{status}]"
        )
        if not trial.passed:
            failed_trials += 1
    return report, failed_trials


def main() -> None:
    parser = argparse.ArgumentParser(description="Run the starcut acceptance sweep and fault trials.")
    parser.add_argument("--n-max", type=int, default=6, help="Largest n in the sweep.")
    parser.add_argument(
        "--stretch",
        action="store_true",
        help="Also attempt the 120-vertex graphs (S_{5,4}, S_{6,3}).",
    )
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    settings = get_settings()
    logging.basicConfig(level=settings.log_level)
    budget = SearchBudget(time_limit_ms=settings.budget_ms, node_limit=settings.node_limit)
    max_vertices = STRETCH_MAX_VERTICES if args.stretch else settings.max_vertices

    try:
        report, failed_trials = run_acceptance(
            args.n_max, max_vertices, budget, args.trials, args.seed
        )
        path = write_report(default_report_path("acceptance", "csv"), sweep_to_csv(report))
    except StarcutError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        sys.exit(exc.exit_code)

    print(
        f"Swept {len(report.rows)} instances: {len(report.mismatches)} mismatches, "
        f"{len(report.inconclusive)} inconclusive. Report: {path}"
    )
    sys.exit(1 if failed_trials else report.exit_code)


if __name__ == "__main__":
    main()
