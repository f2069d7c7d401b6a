"""Exact arithmetic toolkit for bounded-subdeterminant integer matrices.

Everything here runs on Python integers: determinants via fraction-free
elimination, matroid minors via a rank oracle on column sets, structure
certificates (spikes, stacks, spanning decompositions), explicit matrix
families, closed-form bound evaluators, and exhaustive searches for the
maximum number of pairwise non-parallel columns at small rank.
"""

from .bounds import (
    Rank2Bounds,
    bound_final,
    bound_lpsx,
    bound_main,
    rank2_bounds,
    smallest_prime_above,
)
from .certificates import (
    Rejection,
    SpanCertificate,
    SpikeCertificate,
    StackCertificate,
    Verdict,
    check_spike,
    check_stack,
    min_spanning_subset,
    span_decompose,
    verify_extension_bound,
    verify_spike_bound,
    verify_stack_bound,
)
from .errors import (
    BudgetExceededError,
    DegenerateRankError,
    DimensionError,
    DomainError,
    MatrixParseError,
    NotSpannedError,
    RankZeroError,
)
from .families import (
    FAMILIES,
    clique_matrix,
    conjecture_matrix,
    construct_family,
    direct_sum,
    extension_tight,
    rank3_spike,
    spike_generic,
    spike_tight,
    u24_matrix,
)
from .linalg import (
    ColumnSpan,
    DeltaReport,
    delta_of,
    determinant,
    is_delta_modular,
    rank,
    rank_of_columns,
)
from .matrix import (
    IntMatrix,
    ParallelClasses,
    canonical_column,
    count_points,
    emit_matrix,
    parallel_classes,
    parse_matrix,
)
from .matroid import (
    Line,
    MinorView,
    U24Witness,
    closure,
    find_u24_minor,
    has_u24_minor,
    is_circuit,
    is_critical,
    is_vertically_s_connected,
    lines,
    long_lines_through,
    simplify,
)
from .search import SearchResult, exact_maximum, hnf_bases, rank2_maximum

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ColumnSpan",
    "DegenerateRankError",
    "DeltaReport",
    "DimensionError",
    "DomainError",
    "FAMILIES",
    "IntMatrix",
    "Line",
    "MatrixParseError",
    "MinorView",
    "NotSpannedError",
    "ParallelClasses",
    "Rank2Bounds",
    "RankZeroError",
    "Rejection",
    "SearchResult",
    "SpanCertificate",
    "SpikeCertificate",
    "StackCertificate",
    "U24Witness",
    "Verdict",
    "bound_final",
    "bound_lpsx",
    "bound_main",
    "canonical_column",
    "check_spike",
    "check_stack",
    "clique_matrix",
    "closure",
    "conjecture_matrix",
    "construct_family",
    "count_points",
    "delta_of",
    "determinant",
    "direct_sum",
    "emit_matrix",
    "exact_maximum",
    "extension_tight",
    "find_u24_minor",
    "has_u24_minor",
    "hnf_bases",
    "is_circuit",
    "is_critical",
    "is_delta_modular",
    "is_vertically_s_connected",
    "lines",
    "long_lines_through",
    "min_spanning_subset",
    "parallel_classes",
    "parse_matrix",
    "rank",
    "rank2_bounds",
    "rank2_maximum",
    "rank3_spike",
    "rank_of_columns",
    "simplify",
    "smallest_prime_above",
    "span_decompose",
    "spike_generic",
    "spike_tight",
    "u24_matrix",
    "verify_extension_bound",
    "verify_spike_bound",
    "verify_stack_bound",
]
