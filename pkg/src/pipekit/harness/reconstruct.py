"""Exhaustive small-graph search used to recover graphs known only by their encodings.

Labeled graphs are generated with vertex 0's neighborhood pinned to the lowest
labels of each degree class, bucketed by exact invariants, and every bucket is
certified by an orbit count: the number of generated labelings of a graph H is

    sum over u with deg(u) = deg(0) of  prod_c t_c(u)! (m_c - t_c(u))!  / |Aut(H)|

where c runs over degree classes, m_c counts class-c vertices other than u and
t_c(u) counts u's neighbors in class c. A bucket whose size disagrees with its
certificate is split by exact isomorphism tests.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..graphcore import Graph, are_isomorphic, count_automorphisms, from_bitmasks, is_connected


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchSpace:
    """Finite family of graphs: n vertices, optionally a fixed degree sequence."""

    n: int | None = None
    degree_sequence: tuple | None = None
    connected: bool = False
    free_n_max: int = 7

    def validate(self):
        if self.n is None:
            raise SearchError("search space unbounded: vertex count required")
        if self.degree_sequence is not None:
            if len(self.degree_sequence) != self.n:
                raise SearchError("degree sequence length differs from n")
            if sum(self.degree_sequence) % 2:
                raise SearchError("degree sequence has odd sum")
        elif self.n > self.free_n_max:
            raise SearchError(f"unconstrained search limited to n <= {self.free_n_max}")

    def describe(self) -> dict:
        return {"n": self.n, "degree_sequence": list(self.degree_sequence) if self.degree_sequence else None,
                "connected": self.connected}


def _sorted_degrees(space: SearchSpace) -> list[int]:
    return sorted(space.degree_sequence, reverse=True)


def _degree_classes(degs: Sequence[int]) -> dict:
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(degs):
        classes.setdefault(d, []).append(v)
    return classes


def _gen_degree_sequence(degs: list[int]):
    """All labeled graphs with deg(v) = degs[v] and vertex 0's neighborhood pinned."""
    n = len(degs)
    classes = _degree_classes(degs)
    others = {d: [v for v in vs if v != 0] for d, vs in classes.items()}
    d0 = degs[0]
    keys = sorted(others)
    out = []
    adj = [0] * n
    rem = list(degs)

    def rec(i):
        while i < n and rem[i] == 0:
            i += 1
        if i == n:
            out.append(tuple(adj))
            return
        need = rem[i]
        cand = [j for j in range(i + 1, n) if rem[j] > 0 and not adj[i] >> j & 1]
        if len(cand) < need:
            return
        for comb in itertools.combinations(cand, need):
            for j in comb:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                rem[j] -= 1
            rem[i] = 0
            rec(i + 1)
            rem[i] = need
            for j in comb:
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)
                rem[j] += 1

    for split in itertools.product(*[range(len(others[d]) + 1) for d in keys]):
        if sum(split) != d0:
            continue
        nbrs = [v for d, t in zip(keys, split) for v in others[d][:t]]
        if any(degs[v] < 1 for v in nbrs):
            continue
        for j in nbrs:
            adj[0] |= 1 << j
            adj[j] |= 1
            rem[j] -= 1
        rem[0] = 0
        rec(1)
        rem[0] = d0
        for j in nbrs:
            adj[0] &= ~(1 << j)
            adj[j] &= ~1
            rem[j] += 1
    return out


def _gen_all(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = []
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        out.append(tuple(adj))
    return out


def enumerate_labeled(space: SearchSpace) -> list[tuple]:
    """Labeled graphs (as adjacency bitmasks) covering every isomorphism class."""
    space.validate()
    if space.degree_sequence is None:
        return _gen_all(space.n)
    return _gen_degree_sequence(_sorted_degrees(space))


def expected_labelings(g: Graph, space: SearchSpace) -> int:
    """Orbit-count certificate: how often the generator emits a copy of g."""
    aut = count_automorphisms(g)
    if space.degree_sequence is None:
        return math.factorial(g.n) // aut
    deg = g.degrees()
    d0 = max(space.degree_sequence)
    total = 0
    for u in range(g.n):
        if deg[u] != d0:
            continue
        term = 1
        for d in set(deg.tolist()):
            m_c = int(np.sum(deg == d)) - (1 if d == d0 else 0)
            t_c = sum(1 for w in g.adjacency[u] if deg[w] == d)
            term *= math.factorial(t_c) * math.factorial(m_c - t_c)
        total += term
    if total % aut:
        raise SearchError("certificate is not an integer; generator assumption broken")
    return total // aut


def _invariant_keys(masks: list[tuple], n: int, chunk: int = 40000) -> list[bytes]:
    """Exact integer invariants: characteristic polynomial and sorted closed-walk profile."""
    keys = []
    bits = np.arange(n, dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for s in range(0, len(masks), chunk):
        arr = np.array(masks[s:s + chunk], dtype=np.int64)
        a = (arr[:, :, None] >> bits[None, None, :]) & 1
        nb = a.shape[0]
        # Faddeev-LeVerrier in exact int64 arithmetic (entries stay small for n <= 12)
        m = np.zeros_like(a)
        c = np.ones(nb, dtype=np.int64)
        coeffs = [c]
        for k in range(1, n + 1):
            m = np.einsum("bij,bjk->bik", a, m) + c[:, None, None] * eye
            am = np.einsum("bij,bjk->bik", a, m)
            c = -np.trace(am, axis1=1, axis2=2) // k
            coeffs.append(c)
        cp = np.stack(coeffs, 1)
        walks = [a.sum(axis=2)]
        p = a.copy()
        for _ in range(2, 7):
            p = np.einsum("bij,bjk->bik", p, a)
            walks.append(np.einsum("bii->bi", p))
        prof = np.stack(walks, axis=2)  # nb, n, 6
        for b in range(nb):
            rows = sorted(map(tuple, prof[b].tolist()))
            keys.append(cp[b].tobytes() + repr(rows).encode())
    return keys


@dataclass
class IsoClass:
    graph: Graph
    labelings: int
    automorphisms: int


def unlabeled_classes(space: SearchSpace) -> list[IsoClass]:
    """Certified isomorphism classes of the search space, in first-seen order."""
    masks = enumerate_labeled(space)
    keys = _invariant_keys(masks, space.n)
    buckets: dict[bytes, list[int]] = {}
    for i, k in enumerate(keys):
        buckets.setdefault(k, []).append(i)
    out = []
    for members in buckets.values():
        rep = from_bitmasks(masks[members[0]])
        if space.connected and not is_connected(rep):
            continue
        if len(members) == expected_labelings(rep, space):
            out.append(IsoClass(rep, len(members), count_automorphisms(rep)))
            continue
        reps: list[list] = []
        for i in members:
            g = from_bitmasks(masks[i])
            for r in reps:
                if are_isomorphic(r[0], g):
                    r[1] += 1
                    break
            else:
                reps.append([g, 1])
        for g, cnt in reps:
            if cnt != expected_labelings(g, space):
                raise SearchError("orbit-count certificate failed after splitting a bucket")
            out.append(IsoClass(g, cnt, count_automorphisms(g)))
    return out


def reconstruct_from_matrix(target, space: SearchSpace, encoder: Callable, match: Callable,
                            expect: int | None = 1, classes: list | None = None) -> list[Graph]:
    """Every class whose encoding matches ``target``.

    ``encoder(g)`` builds the encoding and ``match(enc, target)`` compares it
    (typically within 0.02 of published, rounded values). Raises SearchError
    if the match count differs from ``expect`` (None accepts any nonzero count).
    """
    classes = unlabeled_classes(space) if classes is None else classes
    hits = []
    for c in classes:
        try:
            enc = encoder(c.graph)
        except ValueError:
            continue
        if match(enc, target):
            hits.append(c.graph)
    if not hits:
        raise SearchError("no graph in the search space matches the target")
    if expect is not None and len(hits) != expect:
        raise SearchError(f"ambiguous match: {len(hits)} classes, expected {expect}")
    return hits


def adjacency_spectrum(g: Graph) -> np.ndarray:
    from ..spectral import eigh

    return eigh(g.adjacency_matrix()).eigenvalues


def cospectral_pairs(classes: list[IsoClass], tol: float = 1e-8) -> list[tuple[Graph, Graph]]:
    """Unordered pairs of non-isomorphic classes with equal adjacency spectra."""
    specs = [adjacency_spectrum(c.graph) for c in classes]
    out = []
    for i, j in itertools.combinations(range(len(classes)), 2):
        if np.allclose(specs[i], specs[j], atol=tol):
            out.append((classes[i].graph, classes[j].graph))
    return out
