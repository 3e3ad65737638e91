"""Vertex-color sublevel filtrations and their 0/1-dimensional persistence diagrams."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .encode import rows_multiset_equal
from .graphcore import Graph, components, induced_subgraph

INF = np.inf
FILTRATION_KINDS = ("identity", "tabulated", "affine_sigmoid")


@dataclass(frozen=True)
class FiltrationSpec:
    kind: str = "identity"
    table: dict | None = None
    weights: np.ndarray | None = None
    bias: float = 0.0

    def __post_init__(self):
        if self.kind not in FILTRATION_KINDS:
            raise ValueError(f"unknown filtration kind {self.kind!r}")
        if self.kind == "tabulated":
            if not self.table:
                raise ValueError("tabulated filtration needs a table")
            vals = list(self.table.values())
            if len(set(vals)) != len(vals):
                raise ValueError("tabulated filtration is not injective")
        if self.kind == "affine_sigmoid" and self.weights is None:
            raise ValueError("affine_sigmoid needs weights")


def sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * np.asarray(x, dtype=float)))


def _color_key(c):
    if isinstance(c, np.ndarray):
        return tuple(c.tolist())
    if isinstance(c, (list, tuple)):
        return tuple(c)
    return c.item() if isinstance(c, np.generic) else c


def filtration_values(colors, spec: FiltrationSpec) -> np.ndarray:
    """Map per-node colors to filtration values a_v = f(c_v)."""
    if spec.kind == "identity":
        return np.asarray(colors, dtype=float).reshape(-1)
    if spec.kind == "tabulated":
        out = []
        for c in colors:
            key = _color_key(c)
            if key not in spec.table:
                raise KeyError(f"color {key!r} missing from filtration table")
            out.append(spec.table[key])
        return np.array(out, dtype=float)
    x = np.asarray(colors, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    return sigmoid(x @ np.asarray(spec.weights, dtype=float).reshape(-1) + spec.bias)


def dedup_colors(color_lists: Sequence, tol: float = 1e-8) -> list[list[int]]:
    """Jointly map (vector) colors to integer ids, merging colors within ``tol``.

    Ids follow lexicographic order of the representative colors, so a rank table
    built from them is injective and shared across all inputs.
    """
    rows = []
    for gi, cols in enumerate(color_lists):
        arr = np.asarray(cols, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None]
        for v, r in enumerate(arr):
            rows.append((tuple(r), gi, v))
    rows.sort()
    reps: list[np.ndarray] = []
    cid = {}
    for r, gi, v in rows:
        r = np.array(r)
        hit = None
        # reps are sorted, so only recent ones can be within tol on the first coordinate
        for j in range(len(reps) - 1, -1, -1):
            if reps[j][0] < r[0] - tol:
                break
            if np.max(np.abs(reps[j] - r)) <= tol:
                hit = j
                break
        if hit is None:
            reps.append(r)
            hit = len(reps) - 1
        cid[(gi, v)] = hit
    return [[cid[(gi, v)] for v in range(len(np.asarray(cols)))] for gi, cols in enumerate(color_lists)]


def rank_table(ids: Sequence[Sequence[int]], values=None) -> FiltrationSpec:
    """Injective tabulated filtration over integer color ids (default value = id)."""
    keys = sorted({c for lst in ids for c in lst})
    if values is None:
        table = {c: float(c) for c in keys}
    else:
        table = {c: float(values[i]) for i, c in enumerate(keys)}
    return FiltrationSpec("tabulated", table)


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of (birth, death) with provenance.

    dim 0: one tuple per vertex; ``source`` is the creating vertex.
    dim 1: one tuple per edge; ``source`` is the edge index into g.edges.
    ``birth_vertex``/``death_vertex`` name the vertex whose value realises the
    birth/death (-1 for an infinite death).
    """

    dim: int
    births: np.ndarray
    deaths: np.ndarray
    source: np.ndarray
    birth_vertex: np.ndarray
    death_vertex: np.ndarray

    def __len__(self):
        return len(self.births)

    @property
    def essential(self) -> int:
        return int(np.sum(np.isinf(self.deaths)))

    def pairs(self) -> list[tuple[float, float]]:
        return sorted(zip(self.births.tolist(), self.deaths.tolist()))


def edge_order(g: Graph, values) -> list[int]:
    """Edge processing order: (max endpoint value, min endpoint value, edge index)."""
    a = np.asarray(values, dtype=float)
    keys = [(max(a[u], a[v]), min(a[u], a[v]), i) for i, (u, v) in enumerate(g.edges)]
    return [k[2] for k in sorted(keys)]


def _max_endpoint(a, u, v):
    if a[u] > a[v] or (a[u] == a[v] and u > v):
        return u
    return v


def persistence(g: Graph, values) -> tuple[PersistenceDiagram, PersistenceDiagram]:
    """Both diagrams from one union-find sweep (elder rule, older = smaller (birth, vertex))."""
    a = np.asarray(values, dtype=float).reshape(-1)
    if a.shape[0] != g.n:
        raise ValueError("one value per vertex required")
    n, m = g.n, g.m
    parent = list(range(n))  # roots are always the oldest vertex of their component

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    d0 = np.full(n, INF)
    dv0 = np.full(n, -1, dtype=np.int64)
    b1 = np.zeros(m)
    d1 = np.zeros(m)
    bv1 = np.zeros(m, dtype=np.int64)
    dv1 = np.zeros(m, dtype=np.int64)
    for ei in edge_order(g, a):
        u, v = g.edges[ei]
        val = max(a[u], a[v])
        top = _max_endpoint(a, u, v)
        b1[ei], bv1[ei] = val, top
        ru, rv = find(u), find(v)
        if ru == rv:
            d1[ei], dv1[ei] = INF, -1
            continue
        d1[ei], dv1[ei] = val, top
        young, old = (ru, rv) if (a[ru], ru) > (a[rv], rv) else (rv, ru)
        d0[young], dv0[young] = val, top
        parent[young] = old
    verts = np.arange(n)
    dg0 = PersistenceDiagram(0, a.copy(), d0, verts, verts.copy(), dv0)
    dg1 = PersistenceDiagram(1, b1, d1, np.arange(m), bv1, dv1)
    return dg0, dg1


def diagram0(g: Graph, values) -> PersistenceDiagram:
    return persistence(g, values)[0]


def diagram1(g: Graph, values) -> PersistenceDiagram:
    return persistence(g, values)[1]


def diagrams_equal(d1: PersistenceDiagram, d2: PersistenceDiagram, tol: float = 1e-8) -> bool:
    """Multiset equality of (birth, death) pairs within ``tol``; inf only matches inf."""
    if d1.dim != d2.dim:
        raise ValueError("diagram dimensions differ")
    if len(d1) != len(d2):
        return False
    i1, i2 = np.isinf(d1.deaths), np.isinf(d2.deaths)
    if i1.sum() != i2.sum():
        return False
    if not rows_multiset_equal(d1.births[i1][:, None], d2.births[i2][:, None], tol):
        return False
    f1 = np.column_stack([d1.births[~i1], d1.deaths[~i1]])
    f2 = np.column_stack([d2.births[~i2], d2.deaths[~i2]])
    return rows_multiset_equal(f1, f2, tol)


def component_wise_colors(g: Graph, colors) -> Counter:
    """Multiset (Counter) of per-component color sets."""
    keys = [_color_key(c) for c in colors]
    return Counter(frozenset(keys[v] for v in comp) for comp in components(g))


def is_color_separating(g1: Graph, c1, g2: Graph, c2, q=()) -> bool:
    """Delete vertices colored in q, then compare component-wise colors."""
    q = {_color_key(c) for c in q}

    def strip(g, c):
        keys = [_color_key(x) for x in c]
        keep = [v for v in range(g.n) if keys[v] not in q]
        return induced_subgraph(g, keep), [keys[v] for v in keep]

    h1, k1 = strip(g1, c1)
    h2, k2 = strip(g2, c2)
    return component_wise_colors(h1, k1) != component_wise_colors(h2, k2)
