"""
Closed forms for the h-super edge-connectivity of S_{n,k}.

All arithmetic is on integers; half-integer thresholds such as h <= n/2 - 1
are compared as 2h <= n - 2.
"""

from __future__ import annotations

from starcut.app.errors import OutOfTheoremRangeError, PreconditionError
from starcut.app.schemas import (Branch, FormulaResult, PsiArm, PsiBranchReport,
                                 StarGraphValues)


def f_profile(n: int, x: int) -> int:
    return (n - x) * x


def check_theorem_range(n: int, k: int, h: int) -> None:
    if k < 2:
        raise OutOfTheoremRangeError(f"requires 2 <= k, got k={k}")
    if k > n - 1:
        raise OutOfTheoremRangeError(f"requires k <= n-1, got n={n}, k={k}")
    if h < 0:
        raise OutOfTheoremRangeError(f"requires 0 <= h, got h={h}")
    if h > n - k:
        raise OutOfTheoremRangeError(f"requires h <= n-k, got n={n}, k={k}, h={h}")


def evaluate(n: int, k: int, h: int) -> FormulaResult:
    check_theorem_range(n, k, h)
    clique_side = f_profile(n, h + 1)
    split = f_profile(n, k - 1)

    small_h = h <= k - 2 and 2 * h <= n - 2
    value = clique_side if small_h else split

    return FormulaResult(
        n=n,
        k=k,
        h=h,
        clique_side_value=clique_side,
        split_value=split,
        psi=min(clique_side, split),
        omega=max(clique_side, split),
        theorem_value=value,
        branch=Branch.SMALL_H if small_h else Branch.OTHERWISE,
        # odd n with h = (n-1)/2: the clique-side bound is not constructive here.
        gap_band=(2 * h == n - 1 and h <= k - 2),
    )


def theorem_value(n: int, k: int, h: int) -> int:
    return evaluate(n, k, h).theorem_value


def psi_branch(n: int, k: int, h: int) -> PsiBranchReport:
    check_theorem_range(n, k, h)
    if 2 * h > n - 2:
        raise PreconditionError(f"requires h <= n/2 - 1 (2h <= n-2), got n={n}, h={h}")

    psi = min(f_profile(n, h + 1), f_profile(n, k - 1))
    if h <= k - 2:
        arm, arm_value = PsiArm.H_AT_MOST_K_MINUS_2, f_profile(n, h + 1)
    else:
        arm, arm_value = PsiArm.H_AT_LEAST_K_MINUS_1, f_profile(n, k - 1)

    if psi != arm_value:
        raise AssertionError(f"psi={psi} disagrees with the {arm.value} arm value {arm_value}")
    return PsiBranchReport(n=n, k=k, h=h, arm=arm, psi=psi, arm_value=arm_value)


def recursive_lower_bound(n: int, k: int, h: int, parts_cut: int) -> int:
    """`parts_cut` copies of S_{n-1,k-1}, each cut by an (h-1)-edge-cut."""
    if k < 3 or h < 1:
        raise PreconditionError(f"requires k >= 3 and h >= 1, got k={k}, h={h}")
    return parts_cut * theorem_value(n - 1, k - 1, h - 1)


def star_graph_values(n: int) -> StarGraphValues:
    if n < 2:
        raise OutOfTheoremRangeError(f"requires n >= 2, got n={n}")
    return StarGraphValues(
        n=n,
        edge_connectivity=n - 1,
        super_edge_connectivity_1=2 * n - 4 if n >= 3 else None,
    )
