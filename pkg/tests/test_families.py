import math

import pytest

import oracles
from deltamod.errors import DegenerateRankError
from deltamod.families import (
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
from deltamod.linalg import delta_of
from deltamod.matrix import count_points, emit_matrix


def test_clique_shape_and_content():
    assert emit_matrix(clique_matrix(2)) == "2 3\n1 0 1\n0 1 -1\n"
    for r in range(1, 6):
        a = clique_matrix(r)
        assert (a.rows, a.cols) == (r, r + r * (r - 1) // 2)


def test_clique_is_unimodular_with_full_point_count():
    for r in range(2, 6):
        a = clique_matrix(r)
        rep = delta_of(a)
        assert (rep.rank, rep.delta) == (r, 1)
        assert count_points(a) == math.comb(r + 1, 2)


def test_clique_rejects_nonpositive_rank():
    with pytest.raises(ValueError):
        clique_matrix(0)


def test_conjecture_extends_clique():
    a = conjecture_matrix(3, 4)
    assert (a.rows, a.cols) == (4, 16)
    # scaled first-coordinate differences appended after the clique block
    assert a.column(10) == (2, -1, 0, 0)
    assert a.column(15) == (3, 0, 0, -1)


def test_conjecture_delta_and_points():
    for delta in (1, 2, 3):
        for r in (2, 3, 4):
            a = conjecture_matrix(delta, r)
            rep = delta_of(a)
            assert (rep.rank, rep.delta) == (r, delta)
            assert count_points(a) == math.comb(r + 1, 2) + (delta - 1) * (r - 1)


def test_conjecture_delta1_is_clique():
    assert conjecture_matrix(1, 4) == clique_matrix(4)


def test_spike_tight_shape_and_delta():
    a = spike_tight(2)
    assert (a.rows, a.cols) == (4, 9)
    rep = delta_of(a)
    assert (rep.rank, rep.delta) == (4, 2)
    assert oracles.delta_brute(a) == (4, 2)


def test_spike_tight_degenerate():
    with pytest.raises(DegenerateRankError):
        spike_tight(1)


def test_spike_generic_shape():
    for n in (3, 4, 5, 7):
        a = spike_generic(n)
        assert (a.rows, a.cols) == (n, 2 * n + 1)
    with pytest.raises(DegenerateRankError):
        spike_generic(2)


def test_spike_generic_3_is_the_literal_rank3_spike():
    assert spike_generic(3) == rank3_spike()


def test_u24_matrix_values():
    a = u24_matrix()
    assert a.row_lists() == [[1, 0, 1, 1], [0, 1, 1, 2]]


def test_extension_tight_column():
    a = extension_tight(2, 5)
    assert (a.rows, a.cols) == (5, 16)
    assert a.column(15) == (1, 1, -1, -1, 0)
    assert delta_of(a).delta == 2
    with pytest.raises(ValueError):
        extension_tight(3, 5)       # needs r >= 2*delta


def test_direct_sum_block_structure():
    a = direct_sum(clique_matrix(2), u24_matrix())
    assert (a.rows, a.cols) == (4, 7)
    assert a.column(0) == (1, 0, 0, 0)
    assert a.column(3) == (0, 0, 1, 0)
    assert a.column(6) == (0, 0, 1, 2)


def test_direct_sum_delta_multiplies():
    a, b = u24_matrix(), spike_tight(2)
    assert delta_of(direct_sum(a, b)).delta == delta_of(a).delta * delta_of(b).delta


def test_registry_covers_all_builders():
    assert set(FAMILIES) == {
        "clique",
        "conjecture",
        "spike_tight",
        "spike_generic",
        "rank3_spike",
        "u24",
        "extension_tight",
    }


def test_construct_family_dispatch_and_arity():
    assert construct_family("clique", ["3"]) == clique_matrix(3)
    assert construct_family("u24", []) == u24_matrix()
    with pytest.raises(ValueError):
        construct_family("clique", [])
    with pytest.raises(ValueError):
        construct_family("clique", ["3", "4"])
    with pytest.raises(ValueError):
        construct_family("no_such_family", [])
