"""Laplacians, a cyclic Jacobi eigensolver, and random-walk matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphcore import Graph

TAU_EIG = 1e-8


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns
    groups: tuple  # tuples of column indices with equal eigenvalue

    def group_of(self, i: int) -> tuple:
        for grp in self.groups:
            if i in grp:
                return grp
        raise IndexError(i)


def sym_matrix(entries) -> np.ndarray:
    m = np.array(entries, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not exactly symmetric")
    return m


def normalized_laplacian(g: Graph) -> np.ndarray:
    """I - D^-1/2 A D^-1/2 with zero rows and columns at isolated vertices."""
    d = g.degrees().astype(float)
    s = np.zeros(g.n)
    s[d > 0] = 1.0 / np.sqrt(d[d > 0])
    lap = np.diag((d > 0).astype(float))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -s[u] * s[v]
    return lap


def combinatorial_laplacian(g: Graph) -> np.ndarray:
    return np.diag(g.degrees().astype(float)) - g.adjacency_matrix()


def group_eigenvalues(w: np.ndarray, tau: float = TAU_EIG) -> tuple:
    """Chain consecutive sorted eigenvalues whose gap is at most ``tau``."""
    groups, cur = [], [0] if len(w) else []
    for i in range(1, len(w)):
        if w[i] - w[i - 1] <= tau:
            cur.append(i)
        else:
            groups.append(tuple(cur))
            cur = [i]
    if cur:
        groups.append(tuple(cur))
    return tuple(groups)


def eigh(m, max_sweeps: int = 100, tau: float = TAU_EIG) -> EigenDecomposition:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Sweeps until the off-diagonal Frobenius norm is at most 1e-12 * ||M||_F.
    Eigenvalues come back ascending, ties kept in original diagonal order.
    """
    a = sym_matrix(m)
    n = a.shape[0]
    v = np.eye(n)
    if n == 0:
        return EigenDecomposition(np.zeros(0), v, ())
    target = 1e-12 * np.linalg.norm(a)

    def off(x):
        return np.linalg.norm(x - np.diag(np.diag(x)))

    for _ in range(max_sweeps):
        if off(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # rotation angle chosen to zero a[p, q] (Golub & Van Loan 8.4)
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                elif theta != 0:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                else:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        if off(a) > target:
            raise ConvergenceError(f"Jacobi did not converge, residual off-norm {off(a):.3e}")
    w = np.diag(a).copy()
    order = sorted(range(n), key=lambda i: (w[i], i))
    w, v = w[order], v[:, order]
    return EigenDecomposition(w, v, group_eigenvalues(w, tau))


def rw_matrix(g: Graph) -> np.ndarray:
    """D^-1 A, zero rows for isolated vertices."""
    a = g.adjacency_matrix()
    d = a.sum(axis=1)
    out = np.zeros_like(a)
    nz = d > 0
    out[nz] = a[nz] / d[nz, None]
    return out


def rw_powers(g: Graph, k: int) -> list[np.ndarray]:
    """[R, R^2, ..., R^k] by repeated multiplication."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r = rw_matrix(g)
    out = [r]
    for _ in range(k - 1):
        out.append(out[-1] @ r)
    return out


def rw_power_entry(g: Graph, k: int, u: int, v: int) -> float:
    return float(rw_powers(g, k)[-1][u, v])
