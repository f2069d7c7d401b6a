"""Generators for the explicit matrix families used throughout the toolkit.

Column orderings are fixed and documented per family so that emitted text,
witnesses and certificates are reproducible byte for byte.
"""

from __future__ import annotations

from .errors import DegenerateRankError
from .matrix import IntMatrix


def _unit(r: int, i: int, scale: int = 1) -> list[int]:
    v = [0] * r
    v[i] = scale
    return v


def clique_matrix(r: int) -> IntMatrix:
    """[I_r | D_r]: the r unit columns, then e_i - e_j for i < j in lex order.

    This is the canonical representation of the cycle matroid of the
    complete graph on r + 1 vertices; it is unimodular and has exactly
    binomial(r + 1, 2) points.
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    cols = [_unit(r, i) for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            v = [0] * r
            v[i] = 1
            v[j] = -1
            cols.append(v)
    return IntMatrix.from_columns(cols)


def conjecture_matrix(delta: int, r: int) -> IntMatrix:
    """[I_r | D_r | X_r] with X_r the columns k*e_1 - e_j, k = 2..delta, j = 2..r.

    X_r is ordered with k ascending outermost, then j ascending.  For
    delta = 1 the extra block is empty and the result equals
    clique_matrix(r).  Point count: binomial(r + 1, 2) + (delta - 1)(r - 1).
    """
    if delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta}")
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    base = clique_matrix(r)
    cols = [list(c) for c in base.columns()]
    for k in range(2, delta + 1):
        for j in range(1, r):
            v = [0] * r
            v[0] = k
            v[j] = -1
            cols.append(v)
    return IntMatrix.from_columns(cols)


def spike_tight(delta: int) -> IntMatrix:
    """The (2*delta) x (4*delta + 1) spike that stays delta-modular.

    Layout, with d = 2*delta - 1 and first row written separately:

        [ 1 | 0...0 | 1...1 | delta-1 | delta ]
        [ 0 |  I_d  |  I_d  |  1...1  | 1...1 ]

    The first column is the tip.  Rank 2*delta, so tip plus 2*rank
    further columns in d pairs plus the final pair.
    """
    if delta < 2:
        raise DegenerateRankError(
            f"spike_tight needs delta >= 2 (rank 2*delta >= 4), got {delta}"
        )
    d = 2 * delta - 1
    cols: list[list[int]] = [[1] + [0] * d]
    for top in (0, 1):
        for i in range(d):
            cols.append([top] + _unit(d, i))
    for top in (delta - 1, delta):
        cols.append([top] + [1] * d)
    return IntMatrix.from_columns(cols)


def spike_generic(n: int) -> IntMatrix:
    """A rank-n spike on 2n + 1 columns, tip first.

    Columns over (first coordinate, remaining n-1 coordinates):
    tip (1, 0), then (1, e_i) for i = 1..n-1, then (1, 1), then the
    partners (0, e_i) and (0, 1).  spike_generic(3) is the small spike
    returned by rank3_spike().
    """
    if n < 3:
        raise DegenerateRankError(f"spikes need rank >= 3, got {n}")
    d = n - 1
    cols: list[list[int]] = [[1] + [0] * d]
    for i in range(d):
        cols.append([1] + _unit(d, i))
    cols.append([1] + [1] * d)
    for i in range(d):
        cols.append([0] + _unit(d, i))
    cols.append([0] + [1] * d)
    return IntMatrix.from_columns(cols)


def rank3_spike() -> IntMatrix:
    """The smallest spike: 3 x 7, tip in column 0."""
    return IntMatrix.from_rows(
        [
            [1, 1, 1, 1, 0, 0, 0],
            [0, 1, 0, 1, 1, 0, 1],
            [0, 0, 1, 1, 0, 1, 1],
        ]
    )


def u24_matrix() -> IntMatrix:
    """Four points on a line: columns (1,0), (0,1), (1,1), (1,2); delta 2."""
    return IntMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]])


def extension_tight(delta: int, r: int) -> IntMatrix:
    """[I_r | D_r | f] with f carrying delta ones then delta minus-ones.

    f = e_1 + ... + e_delta - e_{delta+1} - ... - e_{2*delta}, requiring
    r >= 2*delta.  The result stays delta-modular and f needs exactly
    delta columns of [I_r | D_r] to be spanned.  At delta = 1, f equals
    the difference column e_1 - e_2 already present in D_r; the matrix
    then simply repeats that column.
    """
    if delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta}")
    if r < 2 * delta:
        raise ValueError(f"extension_tight needs r >= 2*delta, got r={r}, delta={delta}")
    base = clique_matrix(r)
    f = [1] * delta + [-1] * delta + [0] * (r - 2 * delta)
    cols = [list(c) for c in base.columns()] + [f]
    return IntMatrix.from_columns(cols)


def direct_sum(*mats: IntMatrix) -> IntMatrix:
    """Block-diagonal sum; delta multiplies across blocks."""
    if not mats:
        raise ValueError("direct_sum needs at least one matrix")
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    grid = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            row = m.row(i)
            for j in range(m.cols):
                grid[r0 + i][c0 + j] = row[j]
        r0 += m.rows
        c0 += m.cols
    return IntMatrix.from_rows(grid)


# CLI/service facing registry: family name -> (arity, docstring key, builder)
FAMILIES = {
    "clique": (("r",), clique_matrix),
    "conjecture": (("delta", "r"), conjecture_matrix),
    "spike_tight": (("delta",), spike_tight),
    "spike_generic": (("n",), spike_generic),
    "rank3_spike": ((), rank3_spike),
    "u24": ((), u24_matrix),
    "extension_tight": (("delta", "r"), extension_tight),
}


def construct_family(name: str, params) -> IntMatrix:
    """Build a named family from integer parameters (direct_sum excluded)."""
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES) + ["direct_sum"])
        raise ValueError(f"unknown family {name!r}; known: {known}")
    signature, builder = FAMILIES[name]
    params = [int(p) for p in params]
    if len(params) != len(signature):
        raise ValueError(
            f"family {name!r} takes {len(signature)} parameter(s) "
            f"({', '.join(signature) or 'none'}), got {len(params)}"
        )
    return builder(*params)
