"""Matroid minors of an integer matrix, via the rank oracle only.

A MinorView names a contraction set T and a restriction set X of column
indices and answers rank queries through the identity

    r_{(M/T)|X}(S) = rank(ground[S u T]) - rank(ground[T])

so minors are never materialized by row reduction and certificates keep
referring to the original column indices.  All the derived notions here
(closure, circuits, parallel classes, lines, connectivity) reduce to that
single oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .linalg import rank_of_columns
from .matrix import IntMatrix

U24_RANK_CAP = 8
VCONN_GROUND_CAP = 20


class MinorView:
    """The minor (M/T)|X of the column matroid of a ground matrix."""

    __slots__ = ("ground", "contracted", "restricted", "_rank_t", "_full_rank")

    def __init__(self, ground: IntMatrix, contracted=(), restricted=None):
        t = tuple(sorted(set(int(j) for j in contracted)))
        for j in t:
            if not 0 <= j < ground.cols:
                raise IndexError(f"contracted column {j} outside 0..{ground.cols - 1}")
        if restricted is None:
            x = tuple(j for j in range(ground.cols) if j not in set(t))
        else:
            x = tuple(sorted(set(int(j) for j in restricted)))
            for j in x:
                if not 0 <= j < ground.cols:
                    raise IndexError(f"restricted column {j} outside 0..{ground.cols - 1}")
            overlap = set(t) & set(x)
            if overlap:
                raise ValueError(f"contracted and restricted sets overlap: {sorted(overlap)}")
        self.ground = ground
        self.contracted = t
        self.restricted = x
        self._rank_t = rank_of_columns(ground, t) if t else 0
        self._full_rank: int | None = None

    @property
    def elements(self) -> tuple[int, ...]:
        return self.restricted

    def minor_rank(self, subset) -> int:
        """Rank of subset (of view elements) inside the minor."""
        s = set(subset)
        bad = s - set(self.restricted)
        if bad:
            raise IndexError(f"elements {sorted(bad)} not in this view")
        return rank_of_columns(self.ground, s.union(self.contracted)) - self._rank_t

    @property
    def rank(self) -> int:
        if self._full_rank is None:
            self._full_rank = self.minor_rank(self.restricted)
        return self._full_rank

    def contract_further(self, extra) -> "MinorView":
        extra = set(extra)
        bad = extra - set(self.restricted)
        if bad:
            raise IndexError(f"elements {sorted(bad)} not in this view")
        return MinorView(
            self.ground,
            contracted=set(self.contracted) | extra,
            restricted=[j for j in self.restricted if j not in extra],
        )

    def restrict_to(self, subset) -> "MinorView":
        subset = set(subset)
        bad = subset - set(self.restricted)
        if bad:
            raise IndexError(f"elements {sorted(bad)} not in this view")
        return MinorView(self.ground, contracted=self.contracted, restricted=subset)

    def is_loop(self, e: int) -> bool:
        return self.minor_rank((e,)) == 0

    def __repr__(self) -> str:
        return f"MinorView(T={self.contracted}, X={self.restricted})"


def closure(view: MinorView, subset) -> tuple[int, ...]:
    """All view elements whose addition leaves the minor rank of subset unchanged."""
    s = set(subset)
    base = view.minor_rank(s)
    out = []
    for e in view.elements:
        if e in s or view.minor_rank(s | {e}) == base:
            out.append(e)
    return tuple(sorted(out))


def is_circuit(view: MinorView, subset) -> bool:
    """True iff subset is a minimal dependent set of the minor."""
    s = sorted(set(subset))
    if not s:
        return False
    if view.minor_rank(s) >= len(s):
        return False
    for e in s:
        rest = [x for x in s if x != e]
        if rest and view.minor_rank(rest) < len(rest):
            return False
    return True


def view_parallel_classes(view: MinorView) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """(non-loop classes ordered by smallest member, loops) of the minor.

    Two non-loops are parallel in the minor iff their pair has minor rank 1,
    which contraction can create even for columns independent in the ground
    matrix, so this cannot be answered by canonical forms alone.
    """
    loops = []
    nonloops = []
    for e in view.elements:
        (loops if view.is_loop(e) else nonloops).append(e)
    classes: list[list[int]] = []
    for e in nonloops:
        for cls in classes:
            if view.minor_rank((cls[0], e)) == 1:
                cls.append(e)
                break
        else:
            classes.append([e])
    return tuple(tuple(c) for c in classes), tuple(loops)


def simplify(view: MinorView) -> tuple[int, ...]:
    """Smallest-index representative of each non-loop parallel class."""
    classes, _ = view_parallel_classes(view)
    return tuple(cls[0] for cls in classes)


@dataclass(frozen=True)
class Line:
    """A rank-2 flat of a minor, recorded as the parallel classes it holds."""

    point_classes: tuple[tuple[int, ...], ...]

    rank: int = 2

    @property
    def points(self) -> int:
        return len(self.point_classes)

    @property
    def is_long(self) -> bool:
        return self.points >= 3

    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(e for cls in self.point_classes for e in cls))

    def as_dict(self) -> dict:
        return {
            "point_classes": [list(c) for c in self.point_classes],
            "points": self.points,
            "rank": self.rank,
        }


def lines(view: MinorView) -> tuple[Line, ...]:
    """All lines (maximal rank-2 unions of point classes) of the minor.

    Seeded by pairs of point classes and closed; a view of rank below 2 has
    none.  Output is ordered by the sorted tuple of smallest class members.
    """
    if view.rank < 2:
        return ()
    classes, _ = view_parallel_classes(view)
    reps = [cls[0] for cls in classes]
    seen: set[tuple[int, ...]] = set()
    found: list[Line] = []
    for i, j in combinations(range(len(reps)), 2):
        flat = set(closure(view, (reps[i], reps[j])))
        members = tuple(k for k in range(len(reps)) if reps[k] in flat)
        if members in seen:
            continue
        seen.add(members)
        found.append(Line(point_classes=tuple(classes[k] for k in members)))
    found.sort(key=lambda ln: tuple(cls[0] for cls in ln.point_classes))
    return tuple(found)


def long_lines_through(view: MinorView, e: int) -> tuple[Line, ...]:
    """Lines with at least three points whose element set contains e."""
    if e not in set(view.elements):
        raise IndexError(f"element {e} not in this view")
    return tuple(
        ln for ln in lines(view) if ln.is_long and e in set(ln.elements())
    )


@dataclass(frozen=True)
class U24Witness:
    """Contraction set plus four elements forming a 4-point rank-2 minor."""

    contracted: tuple[int, ...]
    line: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"contracted": list(self.contracted), "line": list(self.line)}


def _four_point_line(view: MinorView) -> tuple[int, ...] | None:
    """Four pairwise non-parallel non-loops of joint minor rank 2, if any."""
    classes, _ = view_parallel_classes(view)
    reps = [cls[0] for cls in classes]
    c = len(reps)
    if c < 4:
        return None
    for i in range(c):
        for j in range(i + 1, c):
            on_line = [reps[i], reps[j]]
            for k in range(c):
                if k == i or k == j:
                    continue
                if view.minor_rank((reps[i], reps[j], reps[k])) == 2:
                    on_line.append(reps[k])
                    if len(on_line) == 4:
                        return tuple(sorted(on_line))
    return None


def find_u24_minor(view: MinorView, rank_cap: int = U24_RANK_CAP) -> U24Witness | None:
    """Search all contractions of the view for a 4-point line.

    Complete for views of rank at most rank_cap: a 4-point line in any minor
    survives in a contraction-only minor, so deletions never need to be
    branched on.  Contraction sets stay independent and below rank-1
    elements of the current minor are skipped (contracting a loop only
    deletes it).  Raises BudgetExceededError instead of ever answering
    incompletely.
    """
    if view.rank > rank_cap:
        raise BudgetExceededError(
            f"u24 search budget exceeded: view rank {view.rank} > cap {rank_cap}"
        )
    max_contract = view.rank - 2

    # element positions index the *top* view so the DFS never revisits a set
    def walk_top(v: MinorView, banned_below: int, depth: int) -> U24Witness | None:
        line = _four_point_line(v)
        if line is not None:
            extra = tuple(sorted(set(v.contracted) - set(view.contracted)))
            return U24Witness(contracted=extra, line=line)
        if depth >= max_contract:
            return None
        for pos in range(banned_below, len(view.elements)):
            e = view.elements[pos]
            if e not in set(v.elements) or v.is_loop(e):
                continue
            hit = walk_top(v.contract_further((e,)), pos + 1, depth + 1)
            if hit is not None:
                return hit
        return None

    return walk_top(view, 0, 0)


def has_u24_minor(view: MinorView, rank_cap: int = U24_RANK_CAP) -> bool:
    """True iff some contraction of the view exposes a line with 4+ points.

    For matroids of integer matrices this is exactly non-regularity.
    """
    return find_u24_minor(view, rank_cap=rank_cap) is not None


def is_vertically_s_connected(view: MinorView, s: int, ground_cap: int = VCONN_GROUND_CAP) -> bool:
    """Exhaustive vertical s-connectivity test over all 2-partitions.

    A partition (A, B) of the elements refutes it when some j < s satisfies
    r(A) + r(B) - r(M) < j <= min(r(A), r(B)); equivalently when
    r(A) + r(B) - r(M) < min(r(A), r(B), s - 1).
    """
    if s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    elems = view.elements
    n = len(elems)
    if n > ground_cap:
        raise BudgetExceededError(
            f"vertical connectivity budget exceeded: {n} elements > cap {ground_cap}"
        )
    total = view.rank
    # unordered proper 2-partitions: fix the last element on the B side
    for bits in range(1, 1 << (n - 1)) if n > 1 else ():
        a_side = [elems[i] for i in range(n - 1) if bits >> i & 1]
        b_side = [e for e in elems if e not in set(a_side)]
        ra = view.minor_rank(a_side)
        rb = view.minor_rank(b_side)
        lam = ra + rb - total
        if lam < min(ra, rb, s - 1):
            return False
    return True


def is_critical(view: MinorView, e: int, threshold: int) -> bool:
    """Whether far more long lines pass through e than the rank around them.

    Counts the long lines of the view through e and compares against
    rank(union of those lines) + threshold; strictly more means critical.
    The threshold is a caller-supplied slack (the motivating bound uses a
    constant times delta^7, far beyond desk-size inputs, so it stays
    parametric here).
    """
    if e not in set(view.elements):
        raise IndexError(f"element {e} not in this view")
    if view.is_loop(e):
        raise ValueError(f"element {e} is a loop")
    through = long_lines_through(view, e)
    count = len(through)
    z: set[int] = set()
    for ln in through:
        z.update(ln.elements())
    rz = view.minor_rank(z) if z else 0
    return count > rz + threshold
