"""Simple undirected graphs, standard families, Betti numbers and small-graph isomorphism."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    pass


class GraphTooLarge(GraphError):
    """Raised when an exact search would exceed its configured size limit."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of pairs (u, v) with u < v. ``adjacency`` holds
    sorted neighbor tuples. Build instances with :func:`build_graph`.
    """

    n: int
    edges: tuple
    adjacency: tuple = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def bitmasks(self) -> list[int]:
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BettiPair:
    beta0: int
    beta1: int


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the canonical Graph.

    >>> build_graph(3, [(0, 1), (1, 2), (2, 0)]).m
    3
    """
    n = int(n)
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"self-loop {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in {pair!r} for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {pair!r}")
        seen.add(key)
    edges = tuple(sorted(seen))
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in adj))


def from_adjacency(a) -> Graph:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError("adjacency matrix must be square")
    if not np.array_equal(a, a.T):
        raise GraphError("adjacency matrix must be symmetric")
    if np.any(np.diag(a) != 0):
        raise GraphError("adjacency matrix has self-loops")
    iu = np.argwhere(np.triu(a, 1) != 0)
    return build_graph(a.shape[0], [tuple(p) for p in iu])


def from_bitmasks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1])


FAMILY_MINIMUM = {"cycle": 3, "path": 1, "complete": 1, "hypercube": 0, "empty": 1}


def family(name: str, param: int) -> Graph:
    """Standard families: cycle, path, complete, hypercube (param = dimension), empty."""
    if name not in FAMILY_MINIMUM:
        raise GraphError(f"unknown family {name!r}")
    param = int(param)
    if param < FAMILY_MINIMUM[name]:
        raise GraphError(f"{name} needs param >= {FAMILY_MINIMUM[name]}, got {param}")
    if name == "cycle":
        return build_graph(param, [(i, (i + 1) % param) for i in range(param)])
    if name == "path":
        return build_graph(param, [(i, i + 1) for i in range(param - 1)])
    if name == "complete":
        return build_graph(param, [(i, j) for i in range(param) for j in range(i + 1, param)])
    if name == "empty":
        return build_graph(param, [])
    # hypercube: bit strings adjacent when they differ in one bit
    n = 1 << param
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(param) if v < v ^ (1 << b)])


def cycle(n):
    return family("cycle", n)


def path(n):
    return family("path", n)


def complete(n):
    return family("complete", n)


def hypercube(d):
    return family("hypercube", d)


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    gs = list(gs)
    if not gs:
        raise GraphError("disjoint_union needs at least one graph")
    if len(gs) == 1:
        return gs[0]
    edges, off = [], 0
    for g in gs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return build_graph(off, edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def betti(g: Graph) -> BettiPair:
    b0 = len(components(g))
    return BettiPair(b0, g.m - g.n + b0)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex v as perm[v]."""
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a bijection on 0..n-1")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    keep = sorted(set(int(v) for v in keep))
    idx = {v: i for i, v in enumerate(keep)}
    return build_graph(len(keep), [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx])


# --- isomorphism -------------------------------------------------------------

ISO_N_MAX = 12


def _refine_joint(gs: Sequence[Graph]) -> list[list[int]]:
    """Stable 1-WL colors computed jointly so ids are comparable across graphs."""
    cols = [list(g.degrees()) for g in gs]
    while True:
        sigs = [[(c[v], tuple(sorted(c[u] for u in g.adjacency[v]))) for v in range(g.n)] for g, c in zip(gs, cols)]
        table = {s: i for i, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        new = [[table[s] for s in sg] for sg in sigs]
        if all(len(set(a)) == len(set(b)) for a, b in zip(new, cols)):
            return new
        cols = new


def _spectrum(g: Graph) -> np.ndarray:
    # pruning only; eigvalsh is fine here since no eigenvectors are consumed
    return np.sort(np.linalg.eigvalsh(g.adjacency_matrix())) if g.n else np.zeros(0)


def _isomorphisms(g1: Graph, g2: Graph, c1, c2, count_all: bool):
    n = g1.n
    order = sorted(range(n), key=lambda v: (sum(1 for x in c1 if x == c1[v]), -len(g1.adjacency[v]), v))
    # prefer vertices adjacent to already-placed ones to prune early
    placed, seq = set(), []
    while len(seq) < n:
        best = None
        for v in order:
            if v in placed:
                continue
            links = sum(1 for u in g1.adjacency[v] if u in placed)
            if best is None or links > best[0]:
                best = (links, v)
        seq.append(best[1])
        placed.add(best[1])
    m1, m2 = g1.bitmasks(), g2.bitmasks()
    mapping = [-1] * n
    used = [False] * n
    found = 0

    def rec(i):
        nonlocal found
        if i == n:
            found += 1
            return not count_all
        v = seq[i]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for u in seq[:i]:
                if (m1[v] >> u & 1) != (m2[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if rec(i + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    rec(0)
    return found


def are_isomorphic(g1: Graph, g2: Graph, n_max: int = ISO_N_MAX) -> bool:
    """Exact isomorphism test by backtracking over 1-WL-refined candidates.

    Rejects graphs above ``n_max`` vertices with GraphTooLarge.
    """
    if max(g1.n, g2.n) > n_max:
        raise GraphTooLarge(f"are_isomorphic limited to n <= {n_max}")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if not np.array_equal(np.sort(g1.degrees()), np.sort(g2.degrees())):
        return False
    if not np.allclose(_spectrum(g1), _spectrum(g2), atol=1e-6):
        return False
    c1, c2 = _refine_joint([g1, g2])
    if sorted(c1) != sorted(c2):
        return False
    return _isomorphisms(g1, g2, c1, c2, count_all=False) > 0


def count_automorphisms(g: Graph, n_max: int = ISO_N_MAX) -> int:
    if g.n > n_max:
        raise GraphTooLarge(f"count_automorphisms limited to n <= {n_max}")
    (c,) = _refine_joint([g])
    return _isomorphisms(g, g, c, c, count_all=True)
