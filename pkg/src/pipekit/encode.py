"""Laplacian, random-walk and distance positional encodings, plus multiset comparison."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .graphcore import Graph
from .spectral import combinatorial_laplacian, eigh, group_eigenvalues, normalized_laplacian, rw_powers

METHODS = ("lap", "rw", "distance")
POLICIES = ("raw", "eigenspace_projection")
SIGN_TIE = 1e-9


@dataclass(frozen=True)
class PEMatrix:
    """Per-node encoding rows plus what is needed to compare them fairly.

    ``groups`` lists column-index tuples that share an eigenvalue (lap/raw only);
    the comparison may permute columns inside a group and flip column signs.
    """

    method: str
    k: int
    rows: np.ndarray
    policy: str = "raw"
    groups: tuple = ()
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def n(self):
        return self.rows.shape[0]

    def sorted_rows(self):
        return sorted(map(tuple, self.rows))


def _laplacian(g: Graph, kind: str):
    if kind == "normalized":
        return normalized_laplacian(g)
    if kind == "combinatorial":
        return combinatorial_laplacian(g)
    raise ValueError(f"unknown laplacian {kind!r}")


def trivial_vector(g: Graph, laplacian: str = "normalized") -> np.ndarray:
    """Unit kernel vector: D^1/2 1 for the normalized Laplacian, constant otherwise.

    An edgeless graph has the zero matrix, so the constant vector is used.
    """
    d = g.degrees().astype(float)
    if laplacian == "normalized" and d.sum() > 0:
        t = np.sqrt(d)
    else:
        t = np.ones(g.n)
    return t / np.linalg.norm(t)


def fix_signs(u: np.ndarray, tie: float = SIGN_TIE) -> np.ndarray:
    """Flip each column so its largest-magnitude entry is positive (lowest index wins ties)."""
    u = u.copy()
    for j in range(u.shape[1]):
        col = np.abs(u[:, j])
        top = col.max()
        if top == 0:
            continue
        i = int(np.flatnonzero(col >= top - tie)[0])
        if u[i, j] < 0:
            u[:, j] = -u[:, j]
    return u


def canonical_eigenbasis(g: Graph, laplacian: str = "normalized"):
    """Eigendecomposition whose first kernel column is the trivial vector.

    The rest of the kernel block is re-orthonormalised against it.
    """
    dec = eigh(_laplacian(g, laplacian))
    w, u = dec.eigenvalues.copy(), dec.eigenvectors.copy()
    if g.n == 0:
        return w, u, dec.groups
    zero = [i for i in range(g.n) if abs(w[i]) <= 1e-8]
    t = trivial_vector(g, laplacian)
    if zero:
        block = u[:, zero]
        rest = block - np.outer(t, t @ block)
        # keep the len(zero)-1 strongest directions of the remainder
        q, s, _ = np.linalg.svd(rest, full_matrices=False)
        basis = np.column_stack([t, q[:, : len(zero) - 1]])
        u[:, zero] = basis
        w[zero] = 0.0
    return w, u, group_eigenvalues(w)


def lap_pe(g: Graph, k: int, policy: str = "raw", skip_trivial: bool = False,
           laplacian: str = "normalized") -> PEMatrix:
    """Laplacian PE from the k smallest eigenpairs.

    raw: eigenvector entries with canonical signs.
    eigenspace_projection: per selected eigenvalue group, squared norm of the
    projection of e_v onto the group's span (sign and basis free).
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    lo = 1 if skip_trivial else 0
    if not 1 <= k <= g.n - lo:
        raise ValueError(f"k={k} out of range for n={g.n} (skip_trivial={skip_trivial})")
    w, u, groups = canonical_eigenbasis(g, laplacian)
    sel = list(range(lo, lo + k))
    meta = {"eigenvalues": w[sel].tolist(), "skip_trivial": skip_trivial, "laplacian": laplacian}
    if policy == "raw":
        rows = fix_signs(u[:, sel])
        return PEMatrix("lap", k, rows, "raw", group_eigenvalues(w[sel]), meta)
    cols = []
    for grp in groups:
        idx = [i for i in grp if i >= lo]
        if not any(i in sel for i in idx):
            continue
        cols.append(np.sum(u[:, idx] ** 2, axis=1))
    rows = np.zeros((g.n, k))
    rows[:, : len(cols)] = np.column_stack(cols)
    meta["group_count"] = len(cols)
    return PEMatrix("lap", k, rows, "eigenspace_projection", (), meta)


def lap_pe_admissible(g: Graph, pe: PEMatrix, tol: float = 1e-8) -> bool:
    """True if ``pe``'s columns are a valid raw LapPE for ``g`` (up to eigenbasis choice).

    Checks orthonormal columns, eigenvector residuals, and that the eigenvalues
    are the k smallest of ``g`` (after the trivial one when skipped).
    """
    if pe.method != "lap" or pe.policy != "raw" or pe.n != g.n:
        return False
    lapl = _laplacian(g, pe.meta.get("laplacian", "normalized"))
    u = pe.rows
    if not np.allclose(u.T @ u, np.eye(u.shape[1]), atol=tol):
        return False
    lam = np.einsum("ij,ij->j", u, lapl @ u)
    if np.max(np.abs(lapl @ u - u * lam), initial=0.0) > tol:
        return False
    lo = 1 if pe.meta.get("skip_trivial") else 0
    ref = eigh(lapl).eigenvalues[lo: lo + pe.k]
    return bool(np.allclose(np.sort(lam), ref, atol=tol))


def rw_pe(g: Graph, k: int) -> PEMatrix:
    """Row v holds the return probabilities (R^1)_vv .. (R^k)_vv with R = D^-1 A."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = np.column_stack([np.diag(p) for p in rw_powers(g, k)])
    return PEMatrix("rw", k, rows, "raw")


def hop_distances(g: Graph) -> np.ndarray:
    """All-pairs BFS distances, unreachable pairs set to n."""
    n = g.n
    out = np.full((n, n), n, dtype=np.int64)
    for s in range(n):
        out[s, s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.adjacency[u]:
                    if out[s, v] == n and v != s:
                        out[s, v] = out[s, u] + 1
                        nxt.append(v)
            frontier = nxt
    return out


DISTANCE_MODES = ("rw_vector", "pagerank", "shortest_path")


def distance_pe(g: Graph, anchors, k: int = 1, mode: str = "shortest_path", gammas=None,
                phi: str = "identity") -> PEMatrix:
    """Sum over anchors s of phi(d(v, s)).

    ``anchors`` is a vertex collection, or "self" to anchor each row at its own
    vertex. ``phi="onehot"`` turns a hop distance into an indicator over 1..k.
    """
    if mode not in DISTANCE_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    self_anchor = isinstance(anchors, str) and anchors == "self"
    if not self_anchor:
        anchors = sorted(set(int(a) for a in anchors))
        if not anchors:
            raise ValueError("anchor set is empty")
        if anchors[0] < 0 or anchors[-1] >= n:
            raise ValueError("anchor out of range")
    if mode == "rw_vector":
        feats = np.stack(rw_powers(g, k), axis=-1)  # [v, s, i]
    elif mode == "pagerank":
        if gammas is None:
            raise ValueError("pagerank mode needs gammas")
        gammas = np.asarray(gammas, dtype=float)
        mats = rw_powers(g, len(gammas))
        feats = sum(c * m for c, m in zip(gammas, mats))[..., None]
    else:
        d = hop_distances(g)
        if phi == "onehot":
            feats = np.stack([(d == i).astype(float) for i in range(1, k + 1)], axis=-1)
        else:
            feats = d.astype(float)[..., None]
    if self_anchor:
        rows = feats[np.arange(n), np.arange(n)]
    else:
        rows = feats[:, anchors].sum(axis=1)
    return PEMatrix("distance", k, rows, "raw", (), {"mode": mode, "phi": phi,
                                                      "anchors": "self" if self_anchor else anchors})


# --- multiset comparison ------------------------------------------------------

def rows_multiset_equal(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """Greedy first-fit pairing of lexicographically sorted rows within ``tol``."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    ra = sorted(map(tuple, a))
    rb = sorted(map(tuple, b))
    rb = np.array(rb)
    used = np.zeros(len(rb), dtype=bool)
    for row in ra:
        diff = np.max(np.abs(rb - np.array(row)), axis=1)
        cand = np.flatnonzero((diff <= tol) & ~used)
        if cand.size == 0:
            return False
        used[cand[0]] = True
    return True


def _column_variants(p: PEMatrix, limit: int = 1 << 14):
    """Yield copies of p.rows under sign flips and within-group column permutations."""
    k = p.rows.shape[1]
    groups = p.groups or tuple((j,) for j in range(k))
    perms = [list(itertools.permutations(grp)) for grp in groups]
    total = 2 ** k
    for pp in perms:
        total *= len(pp)
    if total > limit:
        raise ValueError(f"too many sign/permutation variants ({total})")
    for choice in itertools.product(*perms):
        order = [j for grp in choice for j in grp]
        base = p.rows[:, order]
        for signs in itertools.product((1.0, -1.0), repeat=k):
            yield base * np.array(signs)


def pe_multiset_equal(p1: PEMatrix, p2: PEMatrix, tol: float = 1e-8) -> bool:
    """Row-multiset equality; lap/raw also quantifies over column signs and tied columns."""
    if (p1.method, p1.k, p1.policy) != (p2.method, p2.k, p2.policy):
        raise ValueError("PE matrices differ in method, k or policy")
    if p1.rows.shape[1] != p2.rows.shape[1]:
        raise ValueError("PE matrices differ in width")
    if p1.n != p2.n:
        return False
    if p1.method == "lap" and p1.policy == "raw":
        return any(rows_multiset_equal(v, p2.rows, tol) for v in _column_variants(p1))
    return rows_multiset_equal(p1.rows, p2.rows, tol)


def matches_published(pe: PEMatrix, target, tol: float = 0.02) -> bool:
    """Compare computed rows to a rounded published matrix (tolerance 0.02 by default)."""
    target = np.asarray(target, dtype=float)
    ref = PEMatrix(pe.method, pe.k, target, pe.policy, pe.groups, {})
    return pe_multiset_equal(pe, ref, tol)

