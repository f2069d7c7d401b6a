"""Exact rank, determinant and maximum-subdeterminant computations.

All arithmetic is on Python ints; nothing here touches floats.  Determinants
use Bareiss fraction-free elimination, whose interior divisions are exact by
construction.  delta_of enumerates independent column subsets depth-first,
pruning any prefix that already became dependent, since a dependent column
set contributes only zero subdeterminants and the maximum is at least 1 for
every nonzero matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import DimensionError, RankZeroError
from .matrix import IntMatrix


def det_rows(rows) -> int:
    """Determinant of a square matrix given as a list of row lists."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def determinant(a: IntMatrix) -> int:
    if a.rows != a.cols:
        raise DimensionError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    return det_rows(a.row_lists())


class ColumnSpan:
    """Incremental exact rank tracker for integer column vectors.

    Pivot vectors are kept in echelon order: each stored vector is zero at
    every index before its own pivot.  Adding a vector cross-multiplies it
    against the pivots in pivot order, which preserves that invariant, then
    strips the gcd to keep entries small.  add/pop form a stack discipline
    suitable for DFS backtracking: popping the returned position restores
    the previous state exactly, because add never rewrites stored pivots.
    """

    __slots__ = ("_pivots",)

    def __init__(self):
        self._pivots: list[tuple[int, tuple[int, ...]]] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def residual(self, vec) -> list[int]:
        v = list(vec)
        for p, w in self._pivots:
            vp = v[p]
            if vp:
                wp = w[p]
                for i in range(len(v)):
                    v[i] = v[i] * wp - vp * w[i]
        return v

    def contains(self, vec) -> bool:
        return not any(self.residual(vec))

    def add(self, vec) -> int:
        """Insert vec if independent; return insertion position, or -1."""
        v = self.residual(vec)
        pivot = -1
        for i, x in enumerate(v):
            if x:
                pivot = i
                break
        if pivot < 0:
            return -1
        g = 0
        for x in v:
            g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        entry = (pivot, tuple(v))
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos][0] < pivot:
            pos += 1
        self._pivots.insert(pos, entry)
        return pos

    def pop(self, pos: int) -> None:
        del self._pivots[pos]


def rank_of_columns(a: IntMatrix, cols) -> int:
    """Rank of the submatrix on the given columns, memoized per matrix."""
    key = frozenset(cols)
    cache = a._rank_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    span = ColumnSpan()
    allc = a.columns()
    for j in sorted(key):
        span.add(allc[j])
    cache[key] = span.rank
    return span.rank


def rank(a: IntMatrix) -> int:
    return rank_of_columns(a, range(a.cols))


@dataclass(frozen=True)
class DeltaReport:
    """Outcome of a full delta computation.

    witness_rows/witness_cols name the lexicographically smallest submatrix
    (row tuple compared first, then column tuple) whose absolute determinant
    attains delta.
    """

    rank: int
    delta: int
    witness_rows: tuple[int, ...]
    witness_cols: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "delta": self.delta,
            "witness_rows": list(self.witness_rows),
            "witness_cols": list(self.witness_cols),
        }


def _scan(a: IntMatrix, rho: int, limit: int | None):
    """DFS over independent rho-subsets of columns.

    With limit None, returns (delta, (rows, cols)) for the maximum absolute
    rho x rho subdeterminant with the lex-least witness.  With a limit,
    returns a truthy violation marker as soon as some subdeterminant
    exceeds it, else (0, None).
    """
    cols = a.columns()
    m, n = a.rows, a.cols
    row_sets = list(combinations(range(m), rho))
    best = 0
    best_wit: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    span = ColumnSpan()
    chosen: list[int] = []

    def score_full() -> bool:
        nonlocal best, best_wit
        csel = tuple(chosen)
        for rsel in row_sets:
            sub = [[cols[j][i] for j in csel] for i in rsel]
            d = det_rows(sub)
            if d < 0:
                d = -d
            if limit is not None:
                if d > limit:
                    return True
            elif d > best or (d == best and d and (rsel, csel) < best_wit):
                best = d
                best_wit = (rsel, csel)
        return False

    def walk(start: int, depth: int) -> bool:
        if depth == rho:
            return score_full()
        # leave enough columns to finish the subset
        for j in range(start, n - (rho - depth) + 1):
            pos = span.add(cols[j])
            if pos < 0:
                continue
            chosen.append(j)
            if walk(j + 1, depth + 1):
                return True
            chosen.pop()
            span.pop(pos)
        return False

    violated = walk(0, 0)
    if limit is not None:
        return (1 if violated else 0), None
    return best, best_wit


def delta_of(a: IntMatrix) -> DeltaReport:
    """Maximum absolute determinant over all rank x rank submatrices.

    Raises RankZeroError on the all-zero matrix, where no nonsingular
    submatrix exists and the quantity is undefined.
    """
    rho = rank(a)
    if rho == 0:
        raise RankZeroError("rank zero, delta undefined")
    best, wit = _scan(a, rho, None)
    assert wit is not None and best >= 1
    return DeltaReport(rank=rho, delta=best, witness_rows=wit[0], witness_cols=wit[1])


def is_delta_modular(a: IntMatrix, bound: int) -> bool:
    """True iff every rank x rank subdeterminant has absolute value <= bound.

    Stops at the first violation; does not compute the exact maximum.
    """
    if bound < 1:
        raise ValueError(f"bound must be a positive integer, got {bound}")
    rho = rank(a)
    if rho == 0:
        raise RankZeroError("rank zero, delta undefined")
    violated, _ = _scan(a, rho, bound)
    return not violated
