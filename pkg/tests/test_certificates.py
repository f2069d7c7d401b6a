import pytest

from deltamod.certificates import (
    Rejection,
    SpanCertificate,
    SpikeCertificate,
    StackCertificate,
    check_spike,
    check_stack,
    min_spanning_subset,
    span_decompose,
    verify_extension_bound,
    verify_spike_bound,
    verify_stack_bound,
)
from deltamod.errors import (
    BudgetExceededError,
    DegenerateRankError,
    NotSpannedError,
)
from deltamod.families import (
    clique_matrix,
    direct_sum,
    extension_tight,
    rank3_spike,
    spike_generic,
    spike_tight,
    u24_matrix,
)
from deltamod.linalg import ColumnSpan
from deltamod.matrix import IntMatrix, parse_matrix
from deltamod.matroid import MinorView


def test_check_spike_rank3():
    cert = check_spike(rank3_spike(), 0)
    assert isinstance(cert, SpikeCertificate)
    assert cert.tip == 0
    assert cert.partner_pairs == ((1, 4), (2, 5), (3, 6))
    assert cert.circuit_witness == (1, 2, 3)
    assert cert.rank == 3


def test_check_spike_tight_families():
    for delta in (2, 3):
        cert = check_spike(spike_tight(delta), 0)
        assert isinstance(cert, SpikeCertificate)
        assert cert.rank == 2 * delta


def test_check_spike_generic_families():
    for n in (3, 4, 5):
        cert = check_spike(spike_generic(n), 0)
        assert isinstance(cert, SpikeCertificate)
        assert cert.rank == n


def test_check_spike_tip_out_of_range():
    with pytest.raises(IndexError):
        check_spike(rank3_spike(), 99)


def test_check_spike_degenerate_rank():
    with pytest.raises(DegenerateRankError):
        check_spike(u24_matrix(), 0)


def test_check_spike_rejects_non_simple():
    a = parse_matrix("3 7\n1 1 0 0 1 1 0\n0 0 1 0 1 0 1\n0 0 0 1 0 1 1\n")
    result = check_spike(a, 0)
    assert isinstance(result, Rejection)
    assert not result.as_dict()["verified"]
    assert "parallel" in result.reason


def test_check_spike_rejects_wrong_tip():
    # a clique matrix is simple but no column acts as a spike tip
    result = check_spike(clique_matrix(3), 0)
    assert isinstance(result, Rejection)
    assert result.reason


def test_check_stack_u24_tower():
    for h in (1, 2, 3):
        a = direct_sum(*([u24_matrix()] * h))
        parts = [list(range(4 * i, 4 * i + 4)) for i in range(h)]
        cert = check_stack(MinorView(a), parts, 2)
        assert isinstance(cert, StackCertificate)
        assert cert.height == h
        assert all(r <= 2 for r, _ in cert.per_part)
        for _, witness in cert.per_part:
            assert len(witness.line) == 4


def test_check_stack_rejects_regular_part():
    result = check_stack(MinorView(clique_matrix(4)), [list(range(10))], 4)
    assert isinstance(result, Rejection)
    assert "regular" in result.reason


def test_check_stack_rejects_rank_above_m():
    a = direct_sum(u24_matrix(), u24_matrix())
    result = check_stack(MinorView(a), [list(range(8))], 2)
    assert isinstance(result, Rejection)
    assert "rank" in result.reason


def test_check_stack_rejects_non_spanning():
    a = direct_sum(u24_matrix(), u24_matrix())
    result = check_stack(MinorView(a), [[0, 1, 2, 3]], 2)
    assert isinstance(result, Rejection)
    assert "span" in result.reason


def test_check_stack_validates_parts():
    view = MinorView(u24_matrix())
    with pytest.raises(ValueError):
        check_stack(view, [[0, 1], [1, 2]], 2)     # overlap
    with pytest.raises(ValueError):
        check_stack(view, [], 2)                   # no parts
    with pytest.raises(ValueError):
        check_stack(view, [[0, 1, 2, 3]], 0)       # m < 1
    with pytest.raises(IndexError):
        check_stack(view, [[0, 99]], 2)


def test_span_decompose_example():
    cert = span_decompose((2, -1, -1))
    assert isinstance(cert, SpanCertificate)
    assert cert.chosen == ((1, -1, 0), (1, 0, -1))
    assert cert.k == 2


def test_span_decompose_zero_vector():
    cert = span_decompose((0, 0, 0))
    assert cert.chosen == ()
    assert cert.k == 0


def test_span_decompose_membership_and_bound():
    cases = [
        (3, 0, 0),
        (1, 1, 1),
        (-2, 1, 0, 1),
        (5, -5),
        (2, -3, 1, 0, -1, 1),
    ]
    for f in cases:
        cert = span_decompose(f)
        plus = sum(x for x in f if x > 0)
        minus = -sum(x for x in f if x < 0)
        assert len(cert.chosen) <= max(plus, minus)
        span = ColumnSpan()
        for col in cert.chosen:
            span.add(col)
        assert span.contains(f)


def test_span_decompose_columns_are_unit_or_difference():
    cert = span_decompose((4, -2, 3, -5, 0, 1))
    for col in cert.chosen:
        nz = [(i, x) for i, x in enumerate(col) if x]
        assert sorted(x for _, x in nz) in ([1], [-1, 1])


def test_min_spanning_subset_tight_extension():
    a = extension_tight(2, 5)
    assert min_spanning_subset(a, range(15), a.column(15)) == (6, 10)


def test_min_spanning_subset_prefers_single_column():
    a = extension_tight(1, 4)
    f = a.column(a.cols - 1)       # equals column 4 of the clique block
    assert min_spanning_subset(a, range(a.cols - 1), f) == (4,)


def test_min_spanning_subset_not_spanned():
    a = clique_matrix(3)
    with pytest.raises(NotSpannedError):
        min_spanning_subset(a, [0, 1], (0, 0, 1))


def test_min_spanning_subset_ground_cap():
    a = extension_tight(3, 7)
    with pytest.raises(BudgetExceededError):
        min_spanning_subset(a, range(a.cols - 1), a.column(a.cols - 1))
    got = min_spanning_subset(
        a, range(a.cols - 1), a.column(a.cols - 1), ground_cap=a.cols
    )
    assert len(got) == 3


def test_verify_spike_bound_passes():
    for delta in (2, 3):
        verdict = verify_spike_bound(delta)
        assert verdict.passed and not verdict.skipped
        assert all(c.passed for c in verdict.checks)
        assert verdict.certificates


def test_verify_spike_bound_delta1_skips_tightness():
    verdict = verify_spike_bound(1)
    assert verdict.passed and verdict.skipped
    assert "tight" in verdict.reason


def test_verify_stack_bound_passes():
    verdict = verify_stack_bound(4)
    assert verdict.passed
    assert verdict.certificates
    labels = [c.label for c in verdict.checks]
    assert any("height" in lab for lab in labels)


def test_verify_extension_bound_passes():
    for delta in (1, 2, 3):
        verdict = verify_extension_bound(delta)
        assert verdict.passed, verdict.as_dict()


def test_verdict_dict_shape():
    d = verify_spike_bound(2).as_dict()
    assert set(d) == {"name", "passed", "skipped", "reason", "checks", "certificates"}
    assert all(set(c) == {"label", "passed", "observed"} for c in d["checks"])
