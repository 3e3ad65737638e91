import json

import numpy as np
import pytest

from conftest import random_graph
from pipekit.encode import matches_published, rw_pe
from pipekit.graph6 import write_graph6
from pipekit.graphcore import are_isomorphic, cycle, disjoint_union, permute
from pipekit.harness import (REGISTRY, Entry, Report, SearchError, SearchSpace, UnknownConstruction, construction,
                             cospectral_pairs, emit, ids, load_pairs, pair_suite, pair_suite_file, parse_json,
                             reconstruct_from_matrix, reproduce, reproduce_all, unlabeled_classes)
from pipekit.harness import cache
from pipekit.harness.reconstruct import expected_labelings
from pipekit.harness.registry import sub_seed
from pipekit.rng import Xoshiro256

C10, C55 = cycle(10), disjoint_union([cycle(5), cycle(5)])


# --- search oracle ---------------------------------------------------------------

@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_class_counts_match_known_graph_counts(n, count):
    assert len(unlabeled_classes(SearchSpace(n))) == count


def test_degree_constrained_counts():
    assert len(unlabeled_classes(SearchSpace(10, (2,) * 10))) == 5
    assert len(unlabeled_classes(SearchSpace(10, (3, 3) + (2,) * 8, connected=True))) == 18


def test_class_labelings_sum_to_all_labeled_graphs():
    classes = unlabeled_classes(SearchSpace(5))
    assert sum(c.labelings for c in classes) == 2 ** 10
    for c in classes:
        assert c.labelings == expected_labelings(c.graph, SearchSpace(5))


def test_cycle_target_recovers_exactly_both_graphs():
    space = SearchSpace(10, (2,) * 10)
    hits = reconstruct_from_matrix(np.tile([0, 0.5, 0, 0.37], (10, 1)), space, lambda g: rw_pe(g, 4),
                                   matches_published, expect=None)
    assert len(hits) == 2
    assert any(are_isomorphic(h, C10) for h in hits) and any(are_isomorphic(h, C55) for h in hits)
    with pytest.raises(SearchError, match="ambiguous"):
        reconstruct_from_matrix(np.tile([0, 0.5, 0, 0.37], (10, 1)), space, lambda g: rw_pe(g, 4),
                                matches_published)


def test_search_errors():
    with pytest.raises(SearchError, match="unbounded"):
        unlabeled_classes(SearchSpace())
    with pytest.raises(SearchError):
        unlabeled_classes(SearchSpace(3, (1, 1, 1)))
    with pytest.raises(SearchError):
        unlabeled_classes(SearchSpace(9))
    with pytest.raises(SearchError, match="no graph"):
        reconstruct_from_matrix(np.ones((4, 1)), SearchSpace(4), lambda g: rw_pe(g, 1), matches_published)


def test_cospectral_pairs_small():
    # the smallest adjacency-cospectral pair: K1,4 against C4 + K1
    pairs = cospectral_pairs(unlabeled_classes(SearchSpace(5)))
    assert len(pairs) == 1
    degs = sorted(sorted(g.degrees().tolist()) for g in pairs[0])
    assert degs == [[0, 2, 2, 2, 2], [1, 1, 1, 1, 4]]


def test_cache_regenerates_fast_entries():
    stored = cache.load()["entries"]
    for name, fn in (("theta", cache.regenerate_theta), ("bridge", cache.regenerate_bridge)):
        g1, g2 = fn()
        assert (write_graph6(g1), write_graph6(g2)) == (stored[name]["g1"], stored[name]["g2"])


@pytest.mark.slow
def test_cache_regenerates_identically():
    assert cache.dumps(cache.regenerate()) == cache.dumps(cache.load())


# --- registry and reproduction ---------------------------------------------------

def test_registry_ids_and_lookup():
    assert ids() == list(REGISTRY)
    assert "prop36" in ids()
    with pytest.raises(UnknownConstruction):
        construction("prop99")
    with pytest.raises(ValueError):
        construction("prop34_rw", 0)
    g1, g2, claims = construction("prop34_rw", 2)
    assert (g1.n, g2.n) == (20, 20) and claims


def test_sub_seeds_are_deterministic_and_label_dependent():
    assert sub_seed(0, "a") == sub_seed(0, "a")
    assert sub_seed(0, "a") != sub_seed(0, "b") != sub_seed(1, "a")


def test_scaled_construction_holds():
    entries = reproduce("prop34_rw", n=3, seed=1)
    assert all(e.holds for e in entries if e.gating)


def test_reproduce_all_subset_summary():
    rep = reproduce_all(["prop32_s23", "prop41"], n=1, seed=0)
    assert set(rep.summary["constructions"]) == {"prop32_s23", "prop41"}
    assert rep.passed
    assert all("seconds" in e.measured for e in rep.entries)


# --- reports ------------------------------------------------------------------------

def sample_report():
    return Report("repro", 3, [Entry("a", "x holds", True, True, {"v": [1.0, float("inf")]}),
                               Entry("a", "y holds", False, False, {})], {"n": 1})


def test_json_round_trip():
    rep = sample_report()
    text = emit(rep)
    back = parse_json(text)
    assert back.to_dict() == rep.to_dict()
    assert emit(back) == text
    assert json.loads(text)["entries"][0]["measured"]["v"] == [1.0, "inf"]


def test_tsv_has_one_row_per_claim():
    lines = emit(sample_report(), "tsv").splitlines()
    assert lines[0].startswith("# format=1")
    assert len(lines) == 2 + 2
    assert lines[3].split("\t")[2] == "noted"


def test_empty_report():
    rep = Report()
    assert rep.passed
    assert parse_json(emit(rep)).entries == []
    assert len(emit(rep, "tsv").splitlines()) == 2
    with pytest.raises(ValueError):
        emit(rep, "xml")
    with pytest.raises(ValueError):
        parse_json('{"format": 99}')


# --- pair suite ---------------------------------------------------------------------

def write_corpus(path, graphs):
    path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    return path


def test_isomorphic_pairs_are_never_distinguished(tmp_path):
    rng = Xoshiro256(8)
    gs = []
    for _ in range(6):
        g = random_graph(rng, 5 + rng.integers(4), 0.4)
        gs += [g, permute(g, rng.permutation(g.n))]
    rep = pair_suite_file(write_corpus(tmp_path / "iso.g6", gs))
    assert rep.summary["fraction"] == {"ph_only": 0.0, "ph_lpe": 0.0, "pipe": 0.0}
    assert rep.passed


def test_cycle_pair_distinguished_by_degree_persistence():
    rep = pair_suite([(cycle(6), disjoint_union([cycle(3), cycle(3)]))], ["ph_only"])
    assert rep.summary["fraction"]["ph_only"] == 1.0


def test_verdicts_symmetric_and_relabeling_invariant():
    rng = Xoshiro256(21)
    pairs = [(cycle(6), permute(disjoint_union([cycle(3), cycle(3)]), rng.permutation(6))),
             (C10, C55),
             (permute(cycle(7), rng.permutation(7)), cycle(7))]
    base = pair_suite(pairs).summary["distinguished"]
    swapped = pair_suite([(b, a) for a, b in pairs]).summary["distinguished"]
    relabeled = pair_suite([(permute(a, rng.permutation(a.n)), permute(b, rng.permutation(b.n)))
                            for a, b in pairs]).summary["distinguished"]
    assert base == swapped == relabeled


def test_corpus_errors(tmp_path):
    f = write_corpus(tmp_path / "odd.g6", [cycle(4), cycle(4), cycle(5)])
    with pytest.raises(ValueError, match="odd"):
        load_pairs(f)
    bad = tmp_path / "bad.g6"
    bad.write_text("Dhc\nD h\n")
    with pytest.raises(ValueError, match="line 2"):
        load_pairs(bad)
    with pytest.raises(ValueError):
        pair_suite([], ["nope"])
