from __future__ import annotations

import logging
from math import perm

import numpy as np

from starcut.app.errors import OutOfTheoremRangeError, ParameterError, PreconditionError
from starcut.app.models import DecompositionView, StarGraph
from starcut.app.schemas import (Branch, CrossCut, CutMode, CutPartAnalysis, CutWitness,
                                 FaultTrialReport, Lemma28Report, PartVerdict,
                                 SearchBudget, SweepReport, SweepRow)
from starcut.app.services.cut_construct import construct_cut, verify_h_edge_cut
from starcut.app.services.decomposition import clique_key, decompose, part_as_star
from starcut.app.services.exact_solver import lambda_h_exact
from starcut.app.services.formula import check_theorem_range, evaluate, recursive_lower_bound
from starcut.app.services.graph_core import build_star

logger = logging.getLogger(__name__)

# Counterexamples kept in a fault-trial report.
_MAX_COUNTEREXAMPLES = 5


def sweep_instances(n_max: int, max_vertices: int) -> list[tuple[int, int, int]]:
    """(n, k, h) lattice in lexicographic order, limited to graphs the solver can reach."""
    if n_max < 3:
        raise ParameterError(f"n_max must satisfy n_max >= 3, got {n_max}")
    if max_vertices < 2:
        raise ParameterError(f"max_vertices must satisfy max_vertices >= 2, got {max_vertices}")
    out = []
    for n in range(3, n_max + 1):
        for k in range(2, n):
            if perm(n, k) > max_vertices:
                continue
            out.extend((n, k, h) for h in range(0, n - k + 1))
    return out


def _summarize_witness(w: CutWitness | None) -> str:
    if w is None:
        return "none"
    return f"|X|={len(w.x)} |B|={w.cut_size} components={w.components}"


def run_sweep(
    n_max: int,
    budget: SearchBudget | None = None,
    threads: int = 1,
    max_vertices: int = 60,
    timings: bool = False,
) -> SweepReport:
    rows = []
    graphs: dict[tuple[int, int], StarGraph] = {}
    for n, k, h in sweep_instances(n_max, max_vertices):
        g = graphs.get((n, k))
        if g is None:
            g = graphs[(n, k)] = build_star(n, k)
        formula = evaluate(n, k, h)
        result = lambda_h_exact(g, h, budget=budget, threads=threads)
        row = SweepRow(
            n=n,
            k=k,
            h=h,
            theorem_value=formula.theorem_value,
            solver_value=result.value,
            exact=result.exact,
            match=(result.value == formula.theorem_value) if result.exact else None,
            witness_summary=_summarize_witness(result.witness),
            elapsed_ms=result.elapsed_ms if timings else None,
            gap_band=formula.gap_band,
        )
        rows.append(row)
        if row.status == "mismatch":
            logger.error("(%d,%d,%d): theorem %d, solver %s", n, k, h, row.theorem_value, row.solver_value)
        else:
            logger.info("(%d,%d,%d): %s (%s)", n, k, h, row.status, row.witness_summary)
    return SweepReport(n_max=n_max, rows=rows)


# ---------- cut against a decomposition ----------


def analyze_parts(witness: CutWitness, view: DecompositionView) -> CutPartAnalysis:
    g = view.graph
    inside = set(witness.x)
    symbols = range(1, g.n + 1)
    x_parts = {i: [v for v in view.parts[i] if v in inside] for i in symbols}
    y_parts = {i: [v for v in view.parts[i] if v not in inside] for i in symbols}

    internal: dict[int, list[tuple[int, int]]] = {i: [] for i in symbols}
    cross: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in witness.boundary:
        i, j = view.part_of(u), view.part_of(v)
        if i == j:
            internal[i].append((u, v))
        else:
            cross.setdefault((min(i, j), max(i, j)), []).append((u, v))

    j_set = [i for i in symbols if x_parts[i]]
    return CutPartAnalysis(
        t=view.t,
        x_parts=x_parts,
        y_parts=y_parts,
        internal_cuts=internal,
        cross_cuts=[CrossCut(i=i, j=j, edges=es) for (i, j), es in sorted(cross.items())],
        j=j_set,
        j_prime=[i for i in j_set if y_parts[i]],
        t_set=[i for i in symbols if y_parts[i]],
    )


def lemma28_check(
    n: int,
    k: int,
    h: int,
    t: int,
    budget: SearchBudget | None = None,
    threads: int = 1,
) -> Lemma28Report:
    if k < 3:
        raise OutOfTheoremRangeError(f"requires 3 <= k, got k={k}")
    if h < 1:
        raise OutOfTheoremRangeError(f"requires 1 <= h, got h={h}")
    check_theorem_range(n, k, h)

    g = build_star(n, k)
    view = decompose(g, t)
    result = lambda_h_exact(g, h, budget=budget, threads=threads)
    if result.witness is None:
        raise PreconditionError(f"no {h}-edge-cut found in S_{{{n},{k}}}")
    witness = result.witness
    analysis = analyze_parts(witness, view)

    verdicts = []
    for i in analysis.j_prime:
        small, mapping = part_as_star(view, i)
        mapped = [(mapping[u], mapping[v]) for u, v in analysis.internal_cuts[i]]
        check = verify_h_edge_cut(small, mapped, h - 1)
        verdicts.append(
            PartVerdict(
                i=i,
                internal_cut_size=len(mapped),
                components=check.components,
                min_degree=check.min_degree,
                valid=check.valid,
            )
        )

    cut = witness.cut_size
    internal_total = sum(len(es) for es in analysis.internal_cuts.values())
    cross_total = sum(len(c.edges) for c in analysis.cross_cuts)
    j_prime_total = sum(len(analysis.internal_cuts[i]) for i in analysis.j_prime)
    bound = recursive_lower_bound(n, k, h, len(analysis.j_prime))
    report = Lemma28Report(
        n=n,
        k=k,
        h=h,
        t=t,
        cut_value=result.value,
        exact=result.exact,
        components=witness.components,
        analysis=analysis,
        verdicts=verdicts,
        accounting_holds=internal_total + cross_total == cut and cut >= j_prime_total,
        recursive_bound=bound,
        bound_holds=cut >= bound,
        x_in_single_clique=len({clique_key(g, v) for v in witness.x}) == 1,
    )
    logger.info("lemma28 (%d,%d,%d,t=%d): J'=%s passed=%s", n, k, h, t, analysis.j_prime, report.passed)
    return report


# ---------- randomized fault injection ----------


def fault_trial(n: int, k: int, h: int, trials: int, seed: int) -> FaultTrialReport:
    """
    Remove theoremValue - 1 uniformly random edges per trial. Whenever every
    vertex keeps degree >= h the survivor must stay connected.
    """
    formula = evaluate(n, k, h)
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")

    g = build_star(n, k)
    edges = list(g.edges())
    removed = formula.theorem_value - 1
    rng = np.random.default_rng(seed)

    qualifying = 0
    disconnections = 0
    counterexamples: list[list[tuple[int, int]]] = []
    for _ in range(trials):
        picks = rng.choice(len(edges), size=removed, replace=False)
        b = [edges[int(i)] for i in sorted(picks)]
        check = verify_h_edge_cut(g, b, h)
        if check.low_degree_vertices:
            continue
        qualifying += 1
        if check.components >= 2:
            disconnections += 1
            if len(counterexamples) < _MAX_COUNTEREXAMPLES:
                counterexamples.append(b)
            logger.error("(%d,%d,%d): %d edges disconnect with min degree >= h", n, k, h, removed)

    # The constructive cut of the applicable branch must disconnect at exactly theoremValue.
    mode = CutMode.SUB_CLIQUE if formula.branch is Branch.SMALL_H else CutMode.FULL_CLIQUE
    planted = construct_cut(g, h, mode=mode)
    return FaultTrialReport(
        n=n,
        k=k,
        h=h,
        seed=seed,
        trials=trials,
        theorem_value=formula.theorem_value,
        removed=removed,
        qualifying=qualifying,
        disconnections=disconnections,
        counterexamples=counterexamples,
        planted_disconnects=planted.valid and planted.cut_size == formula.theorem_value,
    )
