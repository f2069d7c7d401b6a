"""Integer matrices with arbitrary-precision entries and their text format.

Everything downstream works on IntMatrix.  Entries are Python ints, stored
row-major in a flat tuple, so no operation here ever rounds.  The text
format is shared by the CLI, the service and the test corpus:

    line 1:            <rows> <cols>
    following lines:   one matrix row each, base-10 integers, whitespace split
    '#' lines and blank lines are ignored
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionError, MatrixParseError


class IntMatrix:
    """Immutable integer matrix. Row-major, dimensions at least 1x1."""

    __slots__ = ("rows", "cols", "entries", "_columns", "_rank_cache")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(int(e) for e in entries)
        if rows < 1 or cols < 1:
            raise DimensionError(f"matrix must be at least 1x1, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._columns: tuple[tuple[int, ...], ...] | None = None
        self._rank_cache: dict = {}

    @classmethod
    def from_rows(cls, row_lists) -> "IntMatrix":
        row_lists = [list(r) for r in row_lists]
        if not row_lists:
            raise DimensionError("matrix must have at least one row")
        width = len(row_lists[0])
        for r in row_lists:
            if len(r) != width:
                raise DimensionError("ragged rows")
        flat = [e for r in row_lists for e in r]
        return cls(len(row_lists), width, flat)

    @classmethod
    def from_columns(cls, col_lists) -> "IntMatrix":
        col_lists = [list(c) for c in col_lists]
        if not col_lists:
            raise DimensionError("matrix must have at least one column")
        height = len(col_lists[0])
        for c in col_lists:
            if len(c) != height:
                raise DimensionError("ragged columns")
        return cls.from_rows([[c[i] for c in col_lists] for i in range(height)])

    def at(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.columns()[j]

    def columns(self) -> tuple[tuple[int, ...], ...]:
        if self._columns is None:
            e, n = self.entries, self.cols
            self._columns = tuple(
                tuple(e[i * n + j] for i in range(self.rows)) for j in range(n)
            )
        return self._columns

    def row_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx, col_idx) -> "IntMatrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        for i in row_idx:
            if not 0 <= i < self.rows:
                raise IndexError(f"row {i} outside 0..{self.rows - 1}")
        for j in col_idx:
            if not 0 <= j < self.cols:
                raise IndexError(f"column {j} outside 0..{self.cols - 1}")
        return IntMatrix.from_rows(
            [[self.at(i, j) for j in col_idx] for i in row_idx]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


def parse_matrix(text: str) -> IntMatrix:
    """Parse the interchange format. Errors name the offending row and token."""
    lines = [
        ln for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixParseError("empty input, expected a header line '<rows> <cols>'")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixParseError(
            f"header must be '<rows> <cols>', got {lines[0].strip()!r}", row=0
        )
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixParseError(
            f"header must hold two integers, got {lines[0].strip()!r}", row=0
        ) from None
    if rows < 1 or cols < 1:
        raise MatrixParseError(f"dimensions must be positive, got {rows}x{cols}", row=0)
    body = lines[1:]
    if len(body) != rows:
        raise MatrixParseError(
            f"expected {rows} matrix rows, found {len(body)}", row=min(len(body), rows)
        )
    flat: list[int] = []
    for r, line in enumerate(body, start=1):
        toks = line.split()
        if len(toks) != cols:
            raise MatrixParseError(
                f"row {r}: expected {cols} entries, found {len(toks)}", row=r
            )
        for t, tok in enumerate(toks, start=1):
            try:
                flat.append(int(tok))
            except ValueError:
                raise MatrixParseError(
                    f"parse error at row {r}, token {t}: {tok!r} is not an integer",
                    row=r,
                    token=t,
                ) from None
    return IntMatrix(rows, cols, flat)


def emit_matrix(a: IntMatrix) -> str:
    """Inverse of parse_matrix: canonical single-space, newline-terminated."""
    out = [f"{a.rows} {a.cols}"]
    out.extend(" ".join(str(e) for e in a.row(i)) for i in range(a.rows))
    return "\n".join(out) + "\n"


def canonical_column(v) -> tuple[int, ...]:
    """Scale-and-sign normal form of an integer vector.

    Divides by the gcd of the entries and flips sign so the first nonzero
    entry is positive.  The zero vector is its own canonical form.  Two
    columns are parallel over Q exactly when their canonical forms agree.
    """
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return v
    if g > 1:
        v = tuple(x // g for x in v)
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


@dataclass(frozen=True)
class ParallelClasses:
    """Partition of column indices by projective equivalence.

    classes holds the non-loop classes ordered by smallest member index;
    loops collects the zero columns.
    """

    classes: tuple[tuple[int, ...], ...]
    loops: tuple[int, ...]

    @property
    def points(self) -> int:
        return len(self.classes)


def parallel_classes(a: IntMatrix) -> ParallelClasses:
    """Group columns of a by canonical form; zero columns go to the loop class."""
    by_canon: dict[tuple[int, ...], list[int]] = {}
    loops: list[int] = []
    for j, col in enumerate(a.columns()):
        c = canonical_column(col)
        if all(x == 0 for x in c):
            loops.append(j)
        else:
            by_canon.setdefault(c, []).append(j)
    classes = sorted(by_canon.values(), key=lambda idx: idx[0])
    return ParallelClasses(
        classes=tuple(tuple(idx) for idx in classes), loops=tuple(loops)
    )


def count_points(a: IntMatrix) -> int:
    """Number of pairwise non-parallel nonzero columns (matroid points)."""
    return parallel_classes(a).points
