"""Stochasticity checks and convex decompositions into 0/1 vertex matrices.

Exact inputs (ints / Fractions) are handled exactly; anything containing a
float is treated as binary64 with an explicit tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from .classical import CondProbMatrix, Undefined, format_fraction

DEFAULT_TOL = 1e-10
SUPPORT_TOL = 1e-12


class NotStochasticError(ValueError):
    pass


class MatchingError(ValueError):
    """No perfect matching inside the positive support of the residual."""


def _rows(m) -> tuple[list[list], bool]:
    """Normalise a matrix to nested lists; report whether it is exact."""
    if isinstance(m, CondProbMatrix):
        rows = [list(r) for r in m.entries]
    elif isinstance(m, np.ndarray):
        if m.dtype == object:
            rows = m.tolist()
        else:
            return [[float(x) for x in r] for r in np.atleast_2d(m)], False
    else:
        rows = [list(r) for r in m]
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows have different lengths")
    exact = all(x is Undefined or (isinstance(x, Rational) and not isinstance(x, bool))
                for r in rows for x in r)
    if exact:
        rows = [[x if x is Undefined else Fraction(x) for x in r] for r in rows]
    else:
        rows = [[x if x is Undefined else float(x) for x in r] for r in rows]
    return rows, exact


def _num(x, exact: bool) -> str | float:
    return format_fraction(x) if exact else float(x)


@dataclass(frozen=True)
class StochasticVerdict:
    row_stochastic: bool
    doubly_stochastic: bool
    partial: bool
    row_sums: tuple
    col_sums: tuple
    violations: tuple[str, ...] = ()
    exact: bool = True

    def to_dict(self) -> dict:
        fmt = lambda x: None if x is None else _num(x, self.exact)  # noqa: E731
        return {"row_stochastic": self.row_stochastic,
                "doubly_stochastic": self.doubly_stochastic,
                "partial": self.partial,
                "row_sums": [fmt(x) for x in self.row_sums],
                "col_sums": [fmt(x) for x in self.col_sums],
                "violations": list(self.violations)}


def classify_stochastic(m, tol: float = DEFAULT_TOL) -> StochasticVerdict:
    """Row/doubly stochastic classification, i.e. A J = J (and J A = J).

    Undefined rows are skipped for the row test and make the matrix partial;
    a partial matrix is never doubly stochastic.  Row sums of Undefined rows
    and column sums of partial matrices are reported as ``None``.
    """
    rows, exact = _rows(m)
    eps = 0 if exact else tol
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if x is not Undefined and not (-eps <= x <= 1 + eps):
                raise ValueError(f"entry ({i},{j}) = {x} outside [0, 1]")
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    partial = any(x is Undefined for r in rows for x in r)
    zero = Fraction(0) if exact else 0.0
    violations = []
    row_sums = []
    for i, r in enumerate(rows):
        if any(x is Undefined for x in r):
            row_sums.append(None)
            if not all(x is Undefined for x in r):
                violations.append(f"row {i} is only partly defined")
            continue
        s = sum(r, zero)
        row_sums.append(s)
        if abs(s - 1) > eps:
            violations.append(f"row {i} sums to {_num(s, exact)}")
    col_sums = []
    for j in range(n_cols):
        col = [rows[i][j] for i in range(n_rows)]
        col_sums.append(None if any(x is Undefined for x in col) else sum(col, zero))
    row_ok = not violations
    doubly = row_ok and not partial and n_rows == n_cols
    if row_ok and not partial:
        bad_cols = [j for j, s in enumerate(col_sums) if abs(s - 1) > eps]
        if bad_cols:
            doubly = False
            violations.extend(f"column {j} sums to {_num(col_sums[j], exact)}" for j in bad_cols)
        if n_rows != n_cols:
            violations.append(f"not square ({n_rows}x{n_cols})")
    elif partial:
        violations.append("partial: undefined rows present")
    return StochasticVerdict(row_ok, doubly, partial, tuple(row_sums), tuple(col_sums),
                             tuple(violations), exact)


@dataclass(frozen=True)
class Decomposition:
    """Convex combination of 0/1 matrices.

    Each vertex is stored as the column index picked in each row, so for the
    ``permutation`` kind it is the image array of the permutation.
    """

    kind: str
    shape: tuple[int, int]
    terms: tuple[tuple[Fraction | float, tuple[int, ...]], ...]
    exact: bool = True
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.terms)

    def vertex_matrix(self, k: int) -> np.ndarray:
        out = np.zeros(self.shape, dtype=int)
        for i, j in enumerate(self.terms[k][1]):
            out[i, j] = 1
        return out

    def coefficient_sum(self):
        return sum((c for c, _ in self.terms), Fraction(0) if self.exact else 0.0)

    def reconstruct(self) -> list[list]:
        zero = Fraction(0) if self.exact else 0.0
        out = [[zero] * self.shape[1] for _ in range(self.shape[0])]
        for c, cols in self.terms:
            for i, j in enumerate(cols):
                out[i][j] += c
        return out

    def to_dict(self) -> dict:
        key = "perm" if self.kind == "permutation" else "cols"
        d = {"kind": self.kind,
             "terms": [{"coeff": _num(c, self.exact), key: list(v)} for c, v in self.terms]}
        d.update(self.meta)
        return d


def perfect_matching(support: Sequence[Sequence[bool]]) -> list[int] | None:
    """Perfect matching of rows to columns by augmenting paths.

    Rows are processed in order; a row takes its smallest free column if it
    has one, otherwise it displaces owners smallest column first.  The result
    is therefore deterministic.  Returns ``match[row] = col`` or None.
    """
    n = len(support)
    adj = [[j for j, ok in enumerate(r) if ok] for r in support]
    col_owner = [-1] * n

    def augment(i: int, visited: list[bool]) -> bool:
        for j in adj[i]:
            if col_owner[j] < 0 and not visited[j]:
                visited[j] = True
                col_owner[j] = i
                return True
        for j in adj[i]:
            if visited[j]:
                continue
            visited[j] = True
            if augment(col_owner[j], visited):
                col_owner[j] = i
                return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return None
    match = [0] * n
    for j, i in enumerate(col_owner):
        match[i] = j
    return match


def birkhoff_decompose(m, tol: float = DEFAULT_TOL) -> Decomposition:
    """Birkhoff-von Neumann decomposition into permutation matrices.

    Each step finds a permutation inside the positive support of the residual,
    takes the smallest matched entry as its coefficient and subtracts it,
    which zeroes at least one entry.
    """
    rows, exact = _rows(m)
    verdict = classify_stochastic(rows, tol)
    if not verdict.doubly_stochastic:
        raise NotStochasticError("not doubly stochastic")
    n = len(rows)
    thresh = 0 if exact else min(tol, SUPPORT_TOL)
    residual = [r[:] for r in rows]
    remaining = Fraction(1) if exact else 1.0
    terms = []
    while True:
        support = [[x > thresh for x in r] for r in residual]
        if not any(any(r) for r in support):
            break
        match = perfect_matching(support)
        if match is None:
            if not exact and remaining <= max(tol, 1e-10):
                break
            raise MatchingError("matching failure on deficient support; "
                                "tolerance may be too tight")
        coeff = min(residual[i][match[i]] for i in range(n))
        for i in range(n):
            j = match[i]
            residual[i][j] = residual[i][j] - coeff
            if residual[i][j] <= thresh:
                residual[i][j] = 0 if exact else 0.0
        remaining -= coeff
        terms.append((coeff, tuple(match)))
    return Decomposition("permutation", (n, n), tuple(terms), exact)


def row_polytope_decompose(m, tol: float = SUPPORT_TOL) -> Decomposition:
    """Decompose a row-stochastic matrix over the vertices with one 1 per row.

    Every row points at its leftmost column with positive residual; the
    smallest of those residuals becomes the coefficient and is subtracted.
    """
    rows, exact = _rows(m)
    if any(x is Undefined for r in rows for x in r):
        raise NotStochasticError("undefined entries present")
    verdict = classify_stochastic(rows, DEFAULT_TOL if not exact else 0)
    if not verdict.row_stochastic:
        raise NotStochasticError("not row stochastic")
    n, k = len(rows), len(rows[0]) if rows else 0
    thresh = 0 if exact else tol
    residual = [r[:] for r in rows]
    terms = []
    while True:
        picks = []
        for r in residual:
            j = next((j for j, x in enumerate(r) if x > thresh), None)
            picks.append(j)
        if all(j is None for j in picks) or n == 0:
            break
        if any(j is None for j in picks):
            # float residue left in some rows only; it is below tolerance
            break
        coeff = min(residual[i][picks[i]] for i in range(n))
        for i, j in enumerate(picks):
            residual[i][j] = residual[i][j] - coeff
            if residual[i][j] <= thresh:
                residual[i][j] = 0 if exact else 0.0
        terms.append((coeff, tuple(picks)))
    return Decomposition("row-vertex", (n, k), tuple(terms), exact)
