"""Uniform displacement tableaux as a brute-force oracle for rho_k.

A tableau is a grid labeling t : [r+1] x [g-d+r] -> [g], strictly increasing
along rows and columns, where a label may repeat only on cells whose diagonal
index x - y agrees mod k.  The maximum number of labels omitted from [g] over
all such tableaux is an independent combinatorial computation of rho_k when
the latter is nonnegative, and detects emptiness when it is negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, OracleViolation, SearchBudgetExceeded
from .hbn import rho_k


@dataclass(frozen=True)
class Tableau:
    """Row-major grid of positive labels; first index x, second index y."""

    grid: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def cols(self) -> int:
        return len(self.grid[0]) if self.grid else 0

    def labels(self) -> set[int]:
        return {v for row in self.grid for v in row}

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.grid]

    @classmethod
    def from_list(cls, rows) -> "Tableau":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))


def _grid_shape(g: int, r: int, d: int) -> tuple[int, int]:
    if d > g - 1 or r < 0 or g - d + r < 1:
        raise DomainError(
            f"need d <= g-1, r >= 0 and g-d+r >= 1, got (g,r,d)=({g},{r},{d})",
            code="bad_grid",
        )
    return r + 1, g - d + r


def is_valid(g: int, k: int, r: int, d: int, t: Tableau, label_cap: Optional[int] = None) -> bool:
    """Both displacement conditions plus the label cap (defaults to g)."""
    rows, cols = _grid_shape(g, r, d)
    cap = g if label_cap is None else label_cap
    if t.rows != rows or any(len(row) != cols for row in t.grid):
        raise DomainError(
            f"grid shape mismatch: expected {rows}x{cols}", code="shape_mismatch"
        )
    residue: dict[int, int] = {}
    for x in range(rows):
        for y in range(cols):
            v = t.grid[x][y]
            if v < 1 or v > cap:
                return False
            if x + 1 < rows and t.grid[x + 1][y] <= v:
                return False
            if y + 1 < cols and t.grid[x][y + 1] <= v:
                return False
            if v in residue:
                if residue[v] != (x - y) % k:
                    return False
            else:
                residue[v] = (x - y) % k
    return True


@dataclass(frozen=True)
class SearchResult:
    feasible: bool
    omitted: Optional[int]
    witness: Optional[Tableau]
    nodes: int


def max_omitted(g: int, k: int, r: int, d: int, budget: Optional[int] = None) -> SearchResult:
    """Exhaustive maximum of g - #labels over valid tableaux.

    Backtracks over cells in row-major order with ascending labels, so the
    reported witness is the lexicographically least maximizer in row-major
    label order.  Infeasibility (no valid tableau at all) is an outcome, not
    an error; running out of ``budget`` nodes is an error.
    """
    rows, cols = _grid_shape(g, r, d)
    total = rows * cols
    grid = [[0] * cols for _ in range(rows)]
    residue: dict[int, int] = {}
    count: dict[int, int] = {}
    state = {"best": -1, "witness": None, "nodes": 0}

    def dfs(idx: int) -> None:
        state["nodes"] += 1
        if budget is not None and state["nodes"] > budget:
            raise SearchBudgetExceeded(budget, state["nodes"])
        if idx == total:
            omitted = g - len(residue)
            if omitted > state["best"]:
                state["best"] = omitted
                state["witness"] = Tableau(tuple(tuple(row) for row in grid))
            return
        x, y = divmod(idx, cols)
        # even with only reused labels from here on, can we beat the best?
        if g - len(residue) <= state["best"]:
            return
        lo = 1
        if x > 0:
            lo = max(lo, grid[x - 1][y] + 1)
        if y > 0:
            lo = max(lo, grid[x][y - 1] + 1)
        hi = g - (rows - 1 - x) - (cols - 1 - y)
        allow_new = g - len(residue) - 1 > state["best"]
        diag = (x - y) % k
        for v in range(lo, hi + 1):
            known = v in residue
            if known:
                if residue[v] != diag:
                    continue
                count[v] += 1
            else:
                if not allow_new:
                    continue
                residue[v] = diag
                count[v] = 1
            grid[x][y] = v
            dfs(idx + 1)
            grid[x][y] = 0
            if count[v] == 1:
                del residue[v]
                del count[v]
            else:
                count[v] -= 1

    dfs(0)
    if state["best"] < 0:
        return SearchResult(feasible=False, omitted=None, witness=None, nodes=state["nodes"])
    return SearchResult(
        feasible=True, omitted=state["best"], witness=state["witness"], nodes=state["nodes"]
    )


def max_omitted_naive(g: int, k: int, r: int, d: int) -> SearchResult:
    """Reference enumeration without pruning, for oracle-vs-oracle testing."""
    rows, cols = _grid_shape(g, r, d)
    total = rows * cols
    grid = [[0] * cols for _ in range(rows)]
    state = {"best": -1, "witness": None, "nodes": 0}

    def dfs(idx: int, used: dict[int, int]) -> None:
        state["nodes"] += 1
        if idx == total:
            omitted = g - len(used)
            if omitted > state["best"]:
                state["best"] = omitted
                state["witness"] = Tableau(tuple(tuple(row) for row in grid))
            return
        x, y = divmod(idx, cols)
        lo = 1
        if x > 0:
            lo = max(lo, grid[x - 1][y] + 1)
        if y > 0:
            lo = max(lo, grid[x][y - 1] + 1)
        for v in range(lo, g + 1):
            if v in used and used[v] != (x - y) % k:
                continue
            fresh = v not in used
            if fresh:
                used[v] = (x - y) % k
            grid[x][y] = v
            dfs(idx + 1, used)
            grid[x][y] = 0
            if fresh:
                del used[v]

    dfs(0, {})
    if state["best"] < 0:
        return SearchResult(feasible=False, omitted=None, witness=None, nodes=state["nodes"])
    return SearchResult(
        feasible=True, omitted=state["best"], witness=state["witness"], nodes=state["nodes"]
    )


@dataclass(frozen=True)
class OracleReport:
    g: int
    k: int
    r: int
    d: int
    feasible: bool
    omitted: Optional[int]
    rho_k: int
    argmax_ell: tuple[int, ...]
    equality: bool
    witness: Optional[Tableau]


def oracle_check(g: int, k: int, r: int, d: int, budget: Optional[int] = None) -> OracleReport:
    """Run the tableau search against the closed formula and cross-check.

    Hard failures: a feasible search exceeding rho_k, or an infeasible search
    with rho_k >= 0.  Equality of the two values is recorded, not enforced.
    """
    result = max_omitted(g, k, r, d, budget=budget)
    value, argmax = rho_k(g, k, r, d)
    if result.feasible:
        if result.omitted > value:
            raise OracleViolation(
                f"omitted {result.omitted} exceeds rho_k {value} at (g,k,r,d)=({g},{k},{r},{d})"
            )
    else:
        if value >= 0:
            raise OracleViolation(
                f"no valid tableau but rho_k {value} >= 0 at (g,k,r,d)=({g},{k},{r},{d})"
            )
    return OracleReport(
        g=g,
        k=k,
        r=r,
        d=d,
        feasible=result.feasible,
        omitted=result.omitted,
        rho_k=value,
        argmax_ell=tuple(argmax),
        equality=result.feasible and result.omitted == value,
        witness=result.witness,
    )
