from __future__ import annotations

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from starcut.app.errors import ParameterError


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)


# ---------- Graph ----------


class GraphSpec(_Frozen):
    n: int = Field(..., ge=2)
    k: int = Field(..., ge=1)

    @classmethod
    def of(cls, n: int, k: int) -> GraphSpec:
        if n < 2:
            raise ParameterError(f"n must satisfy n >= 2, got n={n}")
        if k < 1:
            raise ParameterError(f"k must satisfy k >= 1, got k={k}")
        if k > n - 1:
            raise ParameterError(f"k must satisfy k <= n-1, got n={n}, k={k}")
        return cls(n=n, k=k)


class CrossCount(_Frozen):
    i: int
    j: int
    edges: int


class DecompositionSummary(_Frozen):
    n: int
    k: int
    t: int
    part_sizes: dict[int, int] = Field(..., alias="partSizes")
    cross_counts: List[CrossCount] = Field(..., alias="crossCounts")
    isomorphic: dict[int, bool]


# ---------- Formula ----------


class Branch(str, Enum):
    SMALL_H = "SmallH"
    OTHERWISE = "Otherwise"


class PsiArm(str, Enum):
    H_AT_MOST_K_MINUS_2 = "h<=k-2"
    H_AT_LEAST_K_MINUS_1 = "h>=k-1"


class FormulaResult(_Frozen):
    n: int
    k: int
    h: int
    clique_side_value: int = Field(..., alias="cliqueSideValue")
    split_value: int = Field(..., alias="splitValue")
    psi: int
    omega: int
    theorem_value: int = Field(..., alias="theoremValue")
    branch: Branch
    gap_band: bool = Field(False, alias="gapBand")


class PsiBranchReport(_Frozen):
    n: int
    k: int
    h: int
    arm: PsiArm
    psi: int
    arm_value: int = Field(..., alias="armValue")


class StarGraphValues(_Frozen):
    n: int
    edge_connectivity: int = Field(..., alias="edgeConnectivity")
    super_edge_connectivity_1: Optional[int] = Field(None, alias="superEdgeConnectivity1")


# ---------- Cuts ----------


class CutMode(str, Enum):
    SUB_CLIQUE = "SubClique"
    FULL_CLIQUE = "FullClique"


class CutVerification(_Frozen):
    h: int
    cut_size: int = Field(..., alias="cutSize")
    components: int
    component_sizes: List[int] = Field(..., alias="componentSizes")
    min_degree: int = Field(..., alias="minDegree")
    low_degree_vertices: List[int] = Field(default_factory=list, alias="lowDegreeVertices")
    valid: bool


class CutWitness(_Frozen):
    x: Tuple[int, ...]
    boundary: Tuple[Tuple[int, int], ...]
    h: int
    min_deg_inside: int = Field(..., alias="minDegInside")
    min_deg_outside: int = Field(..., alias="minDegOutside")
    components: int
    component_sizes: List[int] = Field(default_factory=list, alias="componentSizes")
    low_degree_vertices: List[int] = Field(default_factory=list, alias="lowDegreeVertices")
    valid: bool
    # Set when the witness was built outside the hypothesis that guarantees it.
    flagged: bool = False
    mode: Optional[CutMode] = None

    @property
    def cut_size(self) -> int:
        return len(self.boundary)


# ---------- Solver ----------


class SearchBudget(_Frozen):
    time_limit_ms: int = Field(600_000, gt=0, alias="timeLimitMs")
    node_limit: int = Field(200_000_000, gt=0, alias="nodeLimit")
    max_subset_size: Optional[int] = Field(None, gt=0, alias="maxSubsetSize")


class SolverResult(_Frozen):
    value: Optional[int]
    witness: Optional[CutWitness] = None
    nodes_explored: int = Field(0, alias="nodesExplored")
    elapsed_ms: float = Field(0.0, alias="elapsedMs")
    exact: bool
    budget: SearchBudget

    @property
    def found(self) -> bool:
        return self.value is not None


# ---------- Harness ----------


class SweepRow(_Frozen):
    n: int
    k: int
    h: int
    theorem_value: int
    solver_value: Optional[int]
    exact: bool
    match: Optional[bool]
    witness_summary: str = ""
    elapsed_ms: Optional[float] = None
    gap_band: bool = False

    @property
    def status(self) -> str:
        if not self.exact:
            return "inconclusive"
        return "match" if self.match else "mismatch"


class SweepReport(_Frozen):
    n_max: int
    rows: List[SweepRow]

    @property
    def mismatches(self) -> List[SweepRow]:
        return [r for r in self.rows if r.status == "mismatch"]

    @property
    def inconclusive(self) -> List[SweepRow]:
        return [r for r in self.rows if r.status == "inconclusive"]

    @property
    def exit_code(self) -> int:
        if self.mismatches:
            return 1
        if self.inconclusive:
            return 3
        return 0


class CrossCut(_Frozen):
    i: int
    j: int
    edges: List[Tuple[int, int]]


class CutPartAnalysis(_Frozen):
    t: int
    x_parts: dict[int, List[int]] = Field(..., alias="xParts")
    y_parts: dict[int, List[int]] = Field(..., alias="yParts")
    internal_cuts: dict[int, List[Tuple[int, int]]] = Field(..., alias="internalCuts")
    cross_cuts: List[CrossCut] = Field(..., alias="crossCuts")
    j: List[int] = Field(..., alias="J")
    j_prime: List[int] = Field(..., alias="JPrime")
    t_set: List[int] = Field(..., alias="T")


class PartVerdict(_Frozen):
    i: int
    internal_cut_size: int = Field(..., alias="internalCutSize")
    components: int
    min_degree: int = Field(..., alias="minDegree")
    valid: bool


class Lemma28Report(_Frozen):
    n: int
    k: int
    h: int
    t: int
    cut_value: Optional[int] = Field(..., alias="cutValue")
    exact: bool
    components: int
    analysis: CutPartAnalysis
    verdicts: List[PartVerdict]
    accounting_holds: bool = Field(..., alias="accountingHolds")
    recursive_bound: int = Field(..., alias="recursiveBound")
    bound_holds: bool = Field(..., alias="boundHolds")
    x_in_single_clique: bool = Field(..., alias="xInSingleClique")

    @property
    def passed(self) -> bool:
        return all(v.valid for v in self.verdicts) and self.accounting_holds and self.bound_holds


class FaultTrialReport(_Frozen):
    n: int
    k: int
    h: int
    seed: int
    trials: int
    theorem_value: int = Field(..., alias="theoremValue")
    removed: int
    qualifying: int
    disconnections: int
    counterexamples: List[List[Tuple[int, int]]] = Field(default_factory=list)
    planted_disconnects: Optional[bool] = Field(None, alias="plantedDisconnects")

    @property
    def passed(self) -> bool:
        return self.disconnections == 0 and self.planted_disconnects is not False
