from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given

from conftest import graph_and_perm, random_graph
from pipekit.graphcore import build_graph, cycle, disjoint_union, permute
from pipekit.pipe import (PiPEConfig, embedding_gaps, gap_verdict, grad_check, group_mean, init_params, lspe_forward,
                          pair_seeds, pipe_forward, tie_groups, value_clusters, zero_psi)
from pipekit.rng import Xoshiro256

CFG = PiPEConfig(layers=2, hidden=6, base_pe="rw", base_k=3, psi_dim=3, out_dim=4)


def test_config_validation():
    with pytest.raises(ValueError):
        PiPEConfig(base_pe="spin")
    with pytest.raises(ValueError):
        PiPEConfig(hidden=0)
    with pytest.raises(ValueError):
        PiPEConfig(base_k=3, pe_dim=2)


def test_init_is_deterministic_and_bounded():
    a, b = init_params(CFG), init_params(CFG)
    for la, lb in zip(a.layers, b.layers):
        for k in la:
            assert np.array_equal(la[k], lb[k])
    wf = a.layers[0]["wf"]
    assert np.abs(wf).max() <= 1 / np.sqrt(wf.shape[0])
    assert not np.array_equal(init_params(CFG, seed=1).wr, a.wr)


def test_forward_shapes():
    g = cycle(5)
    tr = pipe_forward(g, None, init_params(CFG))
    assert tr.embedding.shape == (CFG.out_dim,)
    assert len(tr.layers) == CFG.layers


@given(graph_and_perm(min_n=2, max_n=8))
def test_embedding_permutation_invariant(gp):
    g, p = gp
    prm = init_params(CFG)
    e1 = pipe_forward(g, None, prm).embedding
    e2 = pipe_forward(permute(g, p), None, prm).embedding
    assert np.max(np.abs(e1 - e2)) <= 1e-9


def test_lspe_equals_pipe_with_zero_psi():
    g = random_graph(Xoshiro256(2), 7, 0.4)
    prm = init_params(CFG)
    a = lspe_forward(g, None, prm).embedding
    b = pipe_forward(g, None, zero_psi(prm)).embedding
    # masked topology and zero psi weights differ only through tanh(0) = 0
    assert np.allclose(a, b, atol=1e-12)


def test_pipe_separates_cycle_pair_lspe_does_not():
    c6, c33 = cycle(6), disjoint_union([cycle(3), cycle(3)])
    # two-step return probabilities agree on both graphs, so the base encoding is blind
    cfg = replace(CFG, base_k=2, pe_dim=2)
    seeds = pair_seeds(0)
    assert gap_verdict(embedding_gaps(c6, c33, cfg, seeds)) == "distinguished"
    assert gap_verdict(embedding_gaps(c6, c33, cfg, seeds, masked=True)) == "undistinguished"


def test_gap_verdicts():
    assert gap_verdict([0.0, 2e-6]) == "distinguished"
    assert gap_verdict([0.0, 1e-10]) == "undistinguished"
    assert gap_verdict([0.0, 1e-7]) == "inconclusive"
    assert len(set(pair_seeds(3))) == 5


def test_grad_check_random_graphs():
    rng = Xoshiro256(99)
    for i in range(5):
        g = random_graph(rng, 7, 0.4)
        res = grad_check(g, CFG, seed=i)
        assert res.max_rel_error <= 1e-4


def test_tie_group_helpers():
    a = np.array([0.0, 1e-12, 1.0, 1.0 + 1e-12])
    cid = value_clusters(a, 1e-9)
    assert cid[0] == cid[1] and cid[2] == cid[3] and cid[0] != cid[2]
    x = np.array([[1.0], [3.0], [5.0], [7.0]])
    assert group_mean(x, cid).ravel().tolist() == [2.0, 2.0, 6.0, 6.0]
    g = build_graph(4, [(0, 1), (2, 3)])
    gv, ge = tie_groups(g, a, 1e-9)
    assert gv.tolist() == [0, 0, 1, 1] and ge.tolist() == [0, 1]
