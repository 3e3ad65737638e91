"""scikit-learn style wrappers: each transforms a list of graphs into a 2-D feature array."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .encode import distance_pe, lap_pe, rw_pe
from .graph6 import parse_graph6
from .graphcore import Graph
from .persist import persistence
from .pipe import PiPEConfig, init_params, lspe_forward, pipe_forward


def check_graphs(X) -> list[Graph]:
    """Accept Graph objects or graph6 strings; reject anything else."""
    if isinstance(X, (Graph, str)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    out = []
    for i, g in enumerate(X):
        if isinstance(g, Graph):
            out.append(g)
        elif isinstance(g, str):
            out.append(parse_graph6(g))
        else:
            raise TypeError(f"item {i}: expected Graph or graph6 string, got {type(g).__name__}")
    if not out:
        raise ValueError("empty graph collection")
    return out


def _pool(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return np.zeros(2 * rows.shape[1])
    return np.concatenate([rows.mean(axis=0), rows.max(axis=0)])


class PETransformer(BaseEstimator, TransformerMixin):
    """Mean and max pooled positional encodings (lap, rw or distance)."""

    def __init__(self, method="rw", k=4, policy="eigenspace_projection", skip_trivial=False):
        self.method = method
        self.k = k
        self.policy = policy
        self.skip_trivial = skip_trivial

    def _rows(self, g):
        if self.method == "lap":
            out = np.zeros((g.n, self.k))
            kk = min(self.k, g.n - int(self.skip_trivial))
            if kk >= 1:
                out[:, :kk] = lap_pe(g, kk, self.policy, self.skip_trivial).rows
            return out
        if self.method == "rw":
            return rw_pe(g, self.k).rows
        if self.method == "distance":
            return distance_pe(g, range(g.n), self.k, phi="onehot").rows
        raise ValueError(f"unknown method {self.method!r}")

    def fit(self, X, y=None):
        check_graphs(X)
        if self.k < 1:
            raise ValueError("k must be >= 1")
        self.n_features_out_ = 2 * self.k
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        return np.vstack([_pool(self._rows(g)) for g in check_graphs(X)])


class PersistenceFeaturizer(BaseEstimator, TransformerMixin):
    """Summary statistics of dim-0 / dim-1 diagrams under a degree filtration."""

    def __init__(self, sign=1.0):
        self.sign = sign

    def fit(self, X, y=None):
        check_graphs(X)
        self.n_features_out_ = 6
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        feats = []
        for g in check_graphs(X):
            d0, d1 = persistence(g, self.sign * g.degrees().astype(float))
            fin0 = ~np.isinf(d0.deaths)
            pers0 = d0.deaths[fin0] - d0.births[fin0]
            feats.append([d0.essential, d1.essential, pers0.sum(),
                          pers0.max(initial=0.0), d0.births.mean() if g.n else 0.0, g.n])
        return np.array(feats, dtype=float)


class PiPEEmbedder(BaseEstimator, TransformerMixin):
    """Graph-level PiPE readout with seeded random parameters (``masked`` gives LSPE)."""

    def __init__(self, layers=2, hidden=8, base_pe="rw", base_k=4, filtration_count=2,
                 psi_dim=4, out_dim=8, seed=0, masked=False):
        self.layers = layers
        self.hidden = hidden
        self.base_pe = base_pe
        self.base_k = base_k
        self.filtration_count = filtration_count
        self.psi_dim = psi_dim
        self.out_dim = out_dim
        self.seed = seed
        self.masked = masked

    def fit(self, X, y=None):
        check_graphs(X)
        cfg = PiPEConfig(layers=self.layers, hidden=self.hidden, base_pe=self.base_pe, base_k=self.base_k,
                         filtration_count=self.filtration_count, psi_dim=self.psi_dim,
                         out_dim=self.out_dim, seed=self.seed)
        self.params_ = init_params(cfg)
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        fwd = lspe_forward if self.masked else pipe_forward
        return np.vstack([fwd(g, None, self.params_).embedding for g in check_graphs(X)])
