import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linear_sum_assignment

from conftest import graph_and_perm, graphs, random_graph
from pipekit.encode import (PEMatrix, distance_pe, fix_signs, hop_distances, lap_pe, lap_pe_admissible,
                            matches_published, pe_multiset_equal, rows_multiset_equal, rw_pe, trivial_vector)
from pipekit.graphcore import build_graph, cycle, disjoint_union, path, permute
from pipekit.rng import Xoshiro256


def assignment_equal(a, b, tol):
    """Oracle: a perfect matching of rows within tol exists."""
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    cost = (np.abs(a[:, None, :] - b[None, :, :]).max(axis=2) > tol).astype(float)
    r, c = linear_sum_assignment(cost)
    return cost[r, c].sum() == 0


def test_multiset_matches_assignment_oracle():
    rng = Xoshiro256(17)
    for trial in range(200):
        n, k = 1 + trial % 7, 1 + trial % 3
        a = np.round(rng.uniform(0, 1, (n, k)) * 4) / 4
        b = a[rng.permutation(n)].copy()
        if trial % 2:
            i, j = rng.integers(n), rng.integers(k)
            b[i, j] += 0.25
        assert rows_multiset_equal(a, b, 1e-8) == assignment_equal(a, b, 1e-8)


def test_multiset_shape_mismatch():
    assert not rows_multiset_equal(np.zeros((2, 1)), np.zeros((3, 1)), 0.1)
    assert rows_multiset_equal(np.zeros((0, 2)), np.zeros((0, 2)), 0.0)


def test_rw_pe_cycle_pair_exact():
    a, b = rw_pe(cycle(10), 4), rw_pe(disjoint_union([cycle(5), cycle(5)]), 4)
    assert np.array_equal(a.rows * 16, np.tile([0, 8, 0, 6], (10, 1)))
    assert pe_multiset_equal(a, b, tol=0.0)
    assert matches_published(a, np.tile([0, 0.50, 0, 0.37], (10, 1)))


@given(graph_and_perm())
def test_rw_pe_equivariant(gp):
    g, p = gp
    a, b = rw_pe(g, 3), rw_pe(permute(g, p), 3)
    assert np.allclose(b.rows[p], a.rows)


@given(graph_and_perm(min_n=2))
def test_projection_pe_is_permutation_invariant_multiset(gp):
    g, p = gp
    k = min(3, g.n)
    a = lap_pe(g, k, "eigenspace_projection")
    b = lap_pe(permute(g, p), k, "eigenspace_projection")
    assert pe_multiset_equal(a, b, 1e-7)


@given(graphs(min_n=2, max_n=8))
def test_raw_lap_pe_is_admissible(g):
    k = min(3, g.n)
    pe = lap_pe(g, k)
    assert lap_pe_admissible(g, pe)
    # the same columns with one sign flipped stay admissible
    flipped = PEMatrix("lap", k, pe.rows * np.r_[-1.0, np.ones(k - 1)], "raw", pe.groups, pe.meta)
    assert lap_pe_admissible(g, flipped)


def test_inadmissible_columns_are_rejected():
    g = cycle(6)
    pe = lap_pe(g, 2)
    bad = PEMatrix("lap", 2, np.eye(6)[:, :2], "raw", (), pe.meta)
    assert not lap_pe_admissible(g, bad)


def test_trivial_column_and_skip():
    g = path(4)
    pe = lap_pe(g, 1)
    assert np.allclose(pe.rows[:, 0], trivial_vector(g))
    assert lap_pe(g, 3, skip_trivial=True).meta["eigenvalues"][0] > 1e-8
    with pytest.raises(ValueError):
        lap_pe(g, 4, skip_trivial=True)
    with pytest.raises(ValueError):
        lap_pe(g, 2, policy="bogus")


def test_projection_rows_sum_to_one_over_full_spectrum():
    g = random_graph(Xoshiro256(4), 7, 0.5)
    pe = lap_pe(g, g.n, "eigenspace_projection")
    assert np.allclose(pe.rows.sum(axis=1), 1.0)


def test_fix_signs():
    u = np.array([[0.1, -0.5], [-0.9, 0.5]])
    out = fix_signs(u)
    assert out[1, 0] > 0 and out[0, 1] > 0


def test_hop_distances_and_distance_pe():
    g = disjoint_union([path(3), build_graph(1, [])])
    d = hop_distances(g)
    assert d[0, 2] == 2 and d[0, 3] == 4
    pe = distance_pe(g, [0], k=2, phi="onehot")
    assert pe.rows.tolist() == [[0, 0], [1, 0], [0, 1], [0, 0]]
    assert np.all(distance_pe(cycle(6), "self").rows == 0)
    with pytest.raises(ValueError):
        distance_pe(g, [])
    with pytest.raises(ValueError):
        distance_pe(g, [9])
    with pytest.raises(ValueError):
        distance_pe(g, [0], mode="pagerank")


@given(st.integers(1, 6))
def test_rw_vector_anchor_sum(k):
    g = cycle(7)
    pe = distance_pe(g, range(g.n), k, mode="rw_vector")
    assert np.allclose(pe.rows, 1.0)


def test_pe_comparison_rejects_mismatched_kinds():
    with pytest.raises(ValueError):
        pe_multiset_equal(rw_pe(cycle(4), 2), rw_pe(cycle(4), 3))
