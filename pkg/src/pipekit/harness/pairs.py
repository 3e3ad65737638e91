"""Pair-suite evaluation: which methods tell apart each consecutive pair of a graph6 corpus.

ph_only   dim-0 and dim-1 diagrams under f = +deg and f = -deg.
ph_lpe    the same with f = +-deg + eps * rank(LapPE color), eps * rank < 1. Rounding
          every diagram value down recovers the degree diagrams, so any pair
          split by ph_only is also split here.
pipe      seeded PiPE embeddings (LapPE base), K seeds, gap > 1e-6 on any seed.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from ..encode import lap_pe
from ..graph6 import Graph6Error, corpus_lines, parse_graph6
from ..graphcore import Graph
from ..persist import dedup_colors, diagrams_equal, persistence
from ..pipe import PiPEConfig, embedding_gaps, gap_verdict, pair_seeds
from .report import Entry, Report

METHODS = ("ph_only", "ph_lpe", "pipe")
LPE_K = 2
PIPE_CFG = dict(base_pe="lap", base_k=LPE_K, lap_policy="eigenspace_projection", hidden=16, psi_dim=8)


class CorpusError(ValueError):
    pass


def load_pairs(path) -> list[tuple[Graph, Graph]]:
    lines = corpus_lines(path)
    if len(lines) % 2:
        raise CorpusError(f"{path}: odd number of graphs ({len(lines)}); pairs need consecutive lines")
    gs = []
    for i, line in enumerate(lines, 1):
        try:
            gs.append(parse_graph6(line))
        except Graph6Error as exc:
            raise CorpusError(f"{path}: line {i}: {exc}") from exc
    return [(gs[i], gs[i + 1]) for i in range(0, len(gs), 2)]


def lpe_rows(g: Graph, k: int = LPE_K) -> np.ndarray:
    out = np.zeros((g.n, k))
    kk = min(k, g.n)
    if kk:
        out[:, :kk] = lap_pe(g, kk, "eigenspace_projection").rows
    return out


def _diagrams_differ(g1, f1, g2, f2) -> bool:
    a, b = persistence(g1, f1), persistence(g2, f2)
    return not (diagrams_equal(a[0], b[0]) and diagrams_equal(a[1], b[1]))


def ph_only(g1: Graph, g2: Graph) -> bool:
    d1, d2 = g1.degrees().astype(float), g2.degrees().astype(float)
    return any(_diagrams_differ(g1, s * d1, g2, s * d2) for s in (1.0, -1.0))


def ph_lpe(g1: Graph, g2: Graph) -> bool:
    ids1, ids2 = dedup_colors([lpe_rows(g1), lpe_rows(g2)])
    eps = 1.0 / (len(set(ids1) | set(ids2)) + 1)
    r1, r2 = eps * np.array(ids1, float), eps * np.array(ids2, float)
    d1, d2 = g1.degrees().astype(float), g2.degrees().astype(float)
    return any(_diagrams_differ(g1, s * d1 + r1, g2, s * d2 + r2) for s in (1.0, -1.0))


def pipe(g1: Graph, g2: Graph, seed: int = 0) -> tuple[str, list]:
    gaps = embedding_gaps(g1, g2, PiPEConfig(**PIPE_CFG), pair_seeds(seed))
    return gap_verdict(gaps), gaps


def pair_suite(pairs, methods=METHODS, seed: int = 0, name: str = "pairs") -> Report:
    """Per-pair verdicts (recorded) and gating inclusion checks between methods."""
    unknown = set(methods) - set(METHODS)
    methods = [m for m in METHODS if m in set(methods)]
    if not methods or unknown:
        raise ValueError(f"methods must be drawn from {METHODS}")
    rep = Report("pairs", seed)
    hit = {m: set() for m in methods}
    inconclusive = []
    for i, (g1, g2) in enumerate(pairs):
        for m in methods:
            if m == "pipe":
                verdict, gaps = pipe(g1, g2, seed)
                got, measured = verdict == "distinguished", {"verdict": verdict, "gaps": gaps}
                if verdict == "inconclusive":
                    inconclusive.append(i)
            else:
                got, measured = (ph_only if m == "ph_only" else ph_lpe)(g1, g2), {}
            if got:
                hit[m].add(i)
            rep.entries.append(Entry(f"{name}#{i}", f"distinguished by {m}", got, False, measured))
    for lo, hi in (("ph_only", "ph_lpe"), ("ph_lpe", "pipe")):
        if lo in hit and hi in hit:
            missing = sorted(hit[lo] - hit[hi])
            rep.entries.append(Entry(name, f"{lo} distinguished set is contained in {hi}", not missing, True,
                                     {"missing": missing}))
    total = len(pairs)
    rep.summary = {"pairs": total, "inconclusive": inconclusive,
                   "fraction": {m: (len(hit[m]) / total if total else 0.0) for m in methods},
                   "distinguished": {m: sorted(hit[m]) for m in methods}}
    return rep


def pair_suite_file(path, methods=METHODS, seed: int = 0) -> Report:
    return pair_suite(load_pairs(path), methods, seed, Path(path).name)
