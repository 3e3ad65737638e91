"""Committed cache of graphs recovered by exhaustive search, and the oracle that rebuilds it.

Regenerate with ``python3 -m pipekit.harness.cache`` (about two minutes; the
4-regular search dominates).
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..encode import lap_pe, matches_published, rw_pe
from ..graph6 import parse_graph6, write_graph6
from . import published as pub
from .reconstruct import SearchError, SearchSpace, cospectral_pairs, reconstruct_from_matrix, unlabeled_classes

CACHE_FORMAT = 1
CACHE_FILE = "constructions.json"

THETA_SPACE = SearchSpace(6)
BRIDGE_SPACE = SearchSpace(10, (3, 3) + (2,) * 8, connected=True)
QUARTIC_SPACE = SearchSpace(10, (4,) * 10)


def _lap2(g):
    return lap_pe(g, 2, skip_trivial=True)


def _rw(k):
    return lambda g: rw_pe(g, k)


def _search_pair(space, encoder, t1, t2, check_encoder, c1, c2):
    classes = unlabeled_classes(space)
    g1 = reconstruct_from_matrix(t1, space, encoder, matches_published, classes=classes)[0]
    g2 = reconstruct_from_matrix(t2, space, encoder, matches_published, classes=classes)[0]
    if not (matches_published(check_encoder(g1), c1) and matches_published(check_encoder(g2), c2)):
        raise SearchError("recovered pair fails the second published encoding")
    return g1, g2


def regenerate_theta():
    return _search_pair(THETA_SPACE, _lap2, pub.THETA_LAP_K, pub.THETA_LAP_KP,
                        _rw(2), pub.THETA_RW_K, pub.THETA_RW_KP)


def regenerate_bridge():
    return _search_pair(BRIDGE_SPACE, _lap2, pub.BRIDGE_LAP_G, pub.BRIDGE_LAP_GP,
                        _rw(5), pub.BRIDGE_RW_G, pub.BRIDGE_RW_GP)


def regenerate_quartic():
    """Cospectral 4-regular pairs whose RW rows match the (rescaled) published rows."""
    t1 = pub.quartic_rescaled(pub.QUARTIC_RW_K)
    t2 = pub.quartic_rescaled(pub.QUARTIC_RW_KP)
    hits = []
    for a, b in cospectral_pairs(unlabeled_classes(QUARTIC_SPACE)):
        pa, pb = rw_pe(a, 4), rw_pe(b, 4)
        if matches_published(pa, t1) and matches_published(pb, t2):
            hits.append((a, b))
        elif matches_published(pb, t1) and matches_published(pa, t2):
            hits.append((b, a))
    if len(hits) != 1:
        raise SearchError(f"expected one cospectral pair, found {len(hits)}")
    return hits[0]


def regenerate() -> dict:
    out = {"format": CACHE_FORMAT, "entries": {}}
    for name, fn, space, target in (
        ("theta", regenerate_theta, THETA_SPACE, "LapPE k=2 (trivial skipped), checked with RW k=2"),
        ("bridge", regenerate_bridge, BRIDGE_SPACE, "LapPE k=2 (trivial skipped), checked with RW k=5"),
        ("quartic", regenerate_quartic, QUARTIC_SPACE, "adjacency-cospectral, RW k=4 with rescaled third column"),
    ):
        g1, g2 = fn()
        out["entries"][name] = {"g1": write_graph6(g1), "g2": write_graph6(g2),
                                "search_space": space.describe(), "target": target}
    return out


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


@lru_cache(maxsize=None)
def load() -> dict:
    text = resources.files("pipekit.data").joinpath(CACHE_FILE).read_text()
    data = json.loads(text)
    if data.get("format") != CACHE_FORMAT:
        raise SearchError("construction cache has an unknown format")
    return data


def cached_pair(name: str):
    e = load()["entries"][name]
    return parse_graph6(e["g1"]), parse_graph6(e["g2"])


def main():
    path = Path(__file__).resolve().parent.parent / "data" / CACHE_FILE
    path.write_text(dumps(regenerate()))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
