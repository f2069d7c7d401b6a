"""Independent reference implementations used only by the tests.

Nothing here imports from deltamod's numeric internals: determinants are
cofactor expansions, ranks come from Fraction-based Gaussian elimination,
and the matroid predicates below re-derive their definitions from scratch
on top of a caller-supplied rank function.  Slow on purpose; small inputs
only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def det_cofactor(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * det_cofactor(minor)
    return total


def rank_frac(rows: list[list[int]]) -> int:
    """Row rank by exact Fraction elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][col]
        for i in range(r + 1, m):
            if work[i][col] != 0:
                f = work[i][col] / inv
                for j in range(col, n):
                    work[i][j] -= f * work[r][j]
        r += 1
        if r == m:
            break
    return r


def column_rank(a, cols=None) -> int:
    if cols is None:
        cols = range(a.cols)
    cols = list(cols)
    if not cols:
        return 0
    return rank_frac([[a.at(i, j) for j in cols] for i in range(a.rows)])


def delta_brute(a) -> tuple[int, int]:
    """(rank, max |det| over every rank x rank submatrix), by enumeration."""
    rho = column_rank(a)
    if rho == 0:
        raise ValueError("zero matrix")
    best = 0
    for cols in itertools.combinations(range(a.cols), rho):
        for rows_ in itertools.combinations(range(a.rows), rho):
            sub = [[a.at(i, j) for j in cols] for i in rows_]
            best = max(best, abs(det_cofactor(sub)))
    return rho, best


def points_brute(a) -> int:
    """Nonzero columns counted up to scalar multiples, pair rank by Fractions."""
    nonzero = [j for j in range(a.cols) if any(a.column(j))]
    reps: list[int] = []
    for j in nonzero:
        if all(column_rank(a, [j, k]) == 2 for k in reps):
            reps.append(j)
    return len(reps)


# --------------------------------------------------- matroid definitions
# These take a rank function over element subsets (frozenset -> int) so
# they can run against any minor view without touching its implementation.


def vconn_brute(elements, rank_fn, s: int) -> bool:
    elems = list(elements)
    total = rank_fn(frozenset(elems))
    for size in range(1, len(elems)):
        for a_side in itertools.combinations(elems, size):
            b_side = [e for e in elems if e not in a_side]
            ra = rank_fn(frozenset(a_side))
            rb = rank_fn(frozenset(b_side))
            lam = ra + rb - total
            for j in range(1, s):
                if lam < j <= min(ra, rb):
                    return False
    return True


def flats_rank2_brute(elements, rank_fn) -> list[frozenset]:
    """Maximal rank-2 subsets, i.e. rank-2 flats, by inclusion filtering."""
    elems = list(elements)
    rank2 = [
        frozenset(sub)
        for size in range(1, len(elems) + 1)
        for sub in itertools.combinations(elems, size)
        if rank_fn(frozenset(sub)) == 2
    ]
    return [
        s
        for s in rank2
        if all(rank_fn(s | {x}) > 2 for x in elems if x not in s)
    ]


def line_points_brute(flat, rank_fn) -> list[frozenset]:
    """Parallel classes of the non-loop elements of a rank-2 flat."""
    live = [e for e in sorted(flat) if rank_fn(frozenset([e])) == 1]
    classes: list[list[int]] = []
    for e in live:
        for cls in classes:
            if rank_fn(frozenset([cls[0], e])) == 1:
                cls.append(e)
                break
        else:
            classes.append([e])
    return [frozenset(c) for c in classes]


def critical_brute(elements, rank_fn, e: int, threshold: int) -> bool:
    long_through = [
        flat
        for flat in flats_rank2_brute(elements, rank_fn)
        if e in flat and len(line_points_brute(flat, rank_fn)) >= 3
    ]
    union: set[int] = set()
    for flat in long_through:
        union.update(flat)
    rz = rank_fn(frozenset(union)) if union else 0
    return len(long_through) > rz + threshold


def u24_brute(elements, rank_fn) -> bool:
    """Any contraction with four elements forming a simple rank-2 matroid."""
    elems = list(elements)
    for csize in range(len(elems) - 3):
        for contracted in itertools.combinations(elems, csize):
            rc = rank_fn(frozenset(contracted))
            rest = [e for e in elems if e not in contracted]
            for four in itertools.combinations(rest, 4):
                pool = frozenset(contracted)
                if rank_fn(pool | frozenset(four)) - rc != 2:
                    continue
                if any(rank_fn(pool | {x}) - rc != 1 for x in four):
                    continue
                if all(
                    rank_fn(pool | {x, y}) - rc == 2
                    for x, y in itertools.combinations(four, 2)
                ):
                    return True
    return False
