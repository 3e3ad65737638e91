"""1-WL color refinement and folklore k-WL (k = 2, 3) with node projection.

Colors are content-addressed: a color is a short blake2b digest of a sorted
serialization of what produced it, so ids from separate graphs are comparable
as long as both were refined for the same number of rounds. Joint helpers
below guarantee that.
"""
from __future__ import annotations

import hashlib
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .graphcore import Graph, GraphTooLarge

KFWL_BUDGET = {2: 12, 3: 10}


def chash(obj) -> str:
    return hashlib.blake2b(repr(obj).encode(), digest_size=10).hexdigest()


ColorHistogram = Counter


@dataclass(frozen=True)
class TupleColoring:
    k: int
    n: int
    colors: tuple  # color of tuple index sum(v_i * n**(k-1-i))
    rounds: int

    def color(self, tup: Sequence[int]) -> str:
        idx = 0
        for v in tup:
            idx = idx * self.n + v
        return self.colors[idx]

    def histogram(self) -> Counter:
        return Counter(self.colors)


def _init_node_colors(g: Graph, init):
    if init is None:
        return [chash(("wl-init",))] * g.n
    return [chash(("wl-init", _plain(c))) for c in init]


def _plain(c):
    if hasattr(c, "tolist"):
        return c.tolist()
    return c


def wl1_joint(gs: Sequence[Graph], inits=None):
    """Refine all graphs in lockstep until no partition changes."""
    inits = inits or [None] * len(gs)
    cols = [_init_node_colors(g, i) for g, i in zip(gs, inits)]
    rounds = 0
    limit = max((g.n for g in gs), default=0)
    while rounds < limit:
        new = [[chash((c[v], tuple(sorted(c[u] for u in g.adjacency[v])))) for v in range(g.n)]
               for g, c in zip(gs, cols)]
        rounds += 1
        stable = all(len(set(a)) == len(set(b)) for a, b in zip(new, cols))
        cols = new
        if stable:
            break
    return cols, rounds


def wl1(g: Graph, init=None):
    """Stable 1-WL colors and their histogram."""
    (cols,), _ = wl1_joint([g], [init])
    return cols, Counter(cols)


def wl1_distinguish(g1: Graph, g2: Graph, init1=None, init2=None) -> bool:
    (c1, c2), _ = wl1_joint([g1, g2], [init1, init2])
    return Counter(c1) != Counter(c2)


def _check_budget(g: Graph, k: int, budget=None):
    if k not in KFWL_BUDGET:
        raise ValueError("k-FWL supports k = 2 or 3")
    limit = (budget or KFWL_BUDGET)[k]
    if g.n > limit:
        raise GraphTooLarge(f"{k}-FWL budget is n <= {limit}, got n={g.n}")


def _atomic_type(g: Graph, tup) -> tuple:
    k = len(tup)
    eq = tuple(tup[i] == tup[j] for i in range(k) for j in range(i + 1, k))
    adj = tuple(g.has_edge(tup[i], tup[j]) for i in range(k) for j in range(i + 1, k))
    return eq, adj


def kfwl_joint(gs: Sequence[Graph], k: int, budget=None) -> list[TupleColoring]:
    """Folklore k-WL on several graphs in lockstep (shared color vocabulary)."""
    for g in gs:
        _check_budget(g, k, budget)
    tuples = [list(itertools.product(range(g.n), repeat=k)) for g in gs]
    cols = [[chash(("fwl-init", _atomic_type(g, t))) for t in tl] for g, tl in zip(gs, tuples)]
    rounds = 0
    while True:
        new = []
        for g, tl, c in zip(gs, tuples, cols):
            n = g.n
            pw = [n ** (k - 1 - i) for i in range(k)]
            nc = []
            for idx, t in enumerate(tl):
                ms = []
                for w in range(n):
                    # phi_j(t, w): replace position j by w
                    ms.append(tuple(c[idx + (w - t[j]) * pw[j]] for j in range(k)))
                ms.sort()
                nc.append(chash((c[idx], tuple(ms))))
            new.append(nc)
        rounds += 1
        stable = all(len(set(a)) == len(set(b)) for a, b in zip(new, cols))
        cols = new
        if stable:
            break
    return [TupleColoring(k, g.n, tuple(c), rounds) for g, c in zip(gs, cols)]


def kfwl(g: Graph, k: int, budget=None) -> TupleColoring:
    return kfwl_joint([g], k, budget)[0]


def kfwl_distinguish(g1: Graph, g2: Graph, k: int, budget=None) -> bool:
    if g1.n != g2.n:
        return True
    t1, t2 = kfwl_joint([g1, g2], k, budget)
    return t1.histogram() != t2.histogram()


def kfwl_node_projection(g: Graph, tc: TupleColoring) -> list[str]:
    """Node u gets the hash of the set of stable colors of tuples containing u."""
    sets = [set() for _ in range(g.n)]
    for idx, t in enumerate(itertools.product(range(g.n), repeat=tc.k)):
        for u in set(t):
            sets[u].add(tc.colors[idx])
    return [chash(("proj", tuple(sorted(s)))) for s in sets]
