"""PiPE layer: persistence of learned filtrations fed back into positional updates.

Per layer l and filtration j:
    a_j = sigmoid(p @ wf[:, j] + bf[j])
    D0, D1 = persistence(g, a_j)
    r0_v = Psi0(tuple created by v),  r1_v = sum_{e ni v} Psi1(tuple of e)
    Psi(z) = tanh(z @ W + b) with z = (birth, death or 0, is_inf)
    p' = relu([q, A q] @ Wp + bp),          q = [r0, r1, p]
    x' = relu((h + A h) @ Wx + bx),         h = [x, p, r0, r1]
Readout: [sum_v x^L, sum_v p^L, mean_{l,v}(r0, r1)] @ Wr + br.

Tuples whose creators tie in value inside one component are exchangeable, so
Psi outputs are averaged over such tie groups before assignment. With distinct
values this is exactly the vertex/edge bijection.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .encode import distance_pe, lap_pe, rw_pe
from .graphcore import Graph, components
from .persist import PersistenceDiagram, persistence, sigmoid
from .rng import MASK, Xoshiro256

BASE_PES = ("lap", "rw", "distance")
LAYER_KEYS = ("wf", "bf", "w0", "b0", "w1", "b1", "wp", "bp", "wx", "bx")


class DegenerateFiltration(RuntimeError):
    pass


@dataclass(frozen=True)
class PiPEConfig:
    layers: int = 2
    pe_dim: int | None = None
    hidden: int = 8
    base_pe: str = "rw"
    base_k: int = 4
    filtration_count: int = 2
    seed: int = 0
    psi_dim: int = 4
    in_dim: int = 1
    out_dim: int = 8
    lap_policy: str = "eigenspace_projection"
    laplacian: str = "normalized"
    skip_trivial: bool = False
    include_dummies: bool = True
    tie_tol: float = 1e-9

    def __post_init__(self):
        if self.pe_dim is None:
            object.__setattr__(self, "pe_dim", self.base_k)
        if self.base_pe not in BASE_PES:
            raise ValueError(f"unknown base_pe {self.base_pe!r}")
        for name in ("layers", "pe_dim", "hidden", "base_k", "filtration_count", "psi_dim", "in_dim", "out_dim"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.pe_dim != self.base_k:
            raise ValueError("pe_dim must equal base_k (the base PE width)")


@dataclass
class PiPEParams:
    cfg: PiPEConfig
    layers: list  # dicts keyed by LAYER_KEYS
    wr: np.ndarray
    br: np.ndarray

    def copy(self):
        return PiPEParams(self.cfg, [{k: v.copy() for k, v in lp.items()} for lp in self.layers],
                          self.wr.copy(), self.br.copy())


def _shapes(cfg: PiPEConfig, layer: int):
    d, F, P, h = cfg.pe_dim, cfg.filtration_count, cfg.psi_dim, cfg.hidden
    topo = 2 * F * P
    hx = cfg.in_dim if layer == 0 else h
    return [("wf", (d, F)), ("bf", (F,)), ("w0", (3, P)), ("b0", (P,)), ("w1", (3, P)), ("b1", (P,)),
            ("wp", (2 * (topo + d), d)), ("bp", (d,)), ("wx", (hx + d + topo, h)), ("bx", (h,))]


def init_params(cfg: PiPEConfig, seed: int | None = None) -> PiPEParams:
    """Uniform(-s, s), s = 1/sqrt(fan_in), drawn in a fixed order from xoshiro256**.

    Order: for each layer wf, bf, w0, b0, w1, b1, wp, bp, wx, bx; then wr, br.
    Each array is filled row-major; a bias uses its weight's fan_in.
    """
    if cfg.layers < 1:
        raise ValueError("need at least one layer")
    rng = Xoshiro256(cfg.seed if seed is None else seed)
    layers = []
    for ell in range(cfg.layers):
        lp, fan = {}, 1
        for name, shape in _shapes(cfg, ell):
            if name.startswith("w"):
                fan = shape[0]
            s = 1.0 / np.sqrt(fan)
            lp[name] = rng.uniform(-s, s, shape)
        layers.append(lp)
    rin = cfg.hidden + cfg.pe_dim + 2 * cfg.filtration_count * cfg.psi_dim
    s = 1.0 / np.sqrt(rin)
    wr = rng.uniform(-s, s, (rin, cfg.out_dim))
    br = rng.uniform(-s, s, (cfg.out_dim,))
    return PiPEParams(cfg, layers, wr, br)


def base_encoding(g: Graph, cfg: PiPEConfig) -> np.ndarray:
    """Base PE rows, zero-padded to width base_k on graphs too small for k columns."""
    k = cfg.base_k
    out = np.zeros((g.n, k))
    if g.n == 0:
        return out
    if cfg.base_pe == "rw":
        return rw_pe(g, k).rows
    if cfg.base_pe == "distance":
        return distance_pe(g, range(g.n), k, "shortest_path", phi="onehot").rows
    lo = 1 if cfg.skip_trivial else 0
    kk = min(k, g.n - lo)
    if kk >= 1:
        out[:, :kk] = lap_pe(g, kk, cfg.lap_policy, cfg.skip_trivial, cfg.laplacian).rows
    return out


def incidence(g: Graph) -> np.ndarray:
    inc = np.zeros((g.n, g.m))
    for i, (u, v) in enumerate(g.edges):
        inc[u, i] = inc[v, i] = 1.0
    return inc


def value_clusters(a: np.ndarray, tol: float) -> np.ndarray:
    """Chain sorted values whose gaps are within tol * (1 + |value|); returns cluster ids."""
    order = np.argsort(a, kind="stable")
    cid = np.zeros(len(a), dtype=np.int64)
    c = 0
    for i in range(1, len(order)):
        prev, cur = a[order[i - 1]], a[order[i]]
        if cur - prev > tol * (1.0 + abs(cur)):
            c += 1
        cid[order[i]] = c
    return cid


def tie_groups(g: Graph, a: np.ndarray, tol: float):
    """Group ids for vertices and edges that are exchangeable under relabeling."""
    comp = np.zeros(g.n, dtype=np.int64)
    for ci, vs in enumerate(components(g)):
        comp[vs] = ci
    vc = value_clusters(a, tol)
    vkeys = list(zip(comp.tolist(), vc.tolist()))
    ekeys = [(int(comp[u]), int(max(vc[u], vc[v])), int(min(vc[u], vc[v]))) for u, v in g.edges]

    def index(keys):
        table = {k: i for i, k in enumerate(sorted(set(keys)))}
        return np.array([table[k] for k in keys], dtype=np.int64)

    return index(vkeys), index(ekeys)


def group_mean(x: np.ndarray, gid: np.ndarray) -> np.ndarray:
    if len(gid) == 0:
        return x
    ng = int(gid.max()) + 1
    sums = np.zeros((ng,) + x.shape[1:])
    np.add.at(sums, gid, x)
    counts = np.bincount(gid, minlength=ng).astype(float)
    return sums[gid] / counts[gid].reshape((-1,) + (1,) * (x.ndim - 1))


def tuple_features(dg: PersistenceDiagram) -> np.ndarray:
    inf = np.isinf(dg.deaths)
    return np.column_stack([dg.births, np.where(inf, 0.0, dg.deaths), inf.astype(float)])


@dataclass
class LayerTrace:
    p: np.ndarray
    x: np.ndarray
    values: np.ndarray | None = None
    diagrams: list = field(default_factory=list)  # [(D0, D1)] per filtration
    r0: np.ndarray | None = None
    r1: np.ndarray | None = None
    cache: dict = field(default_factory=dict, repr=False)


@dataclass
class ForwardTrace:
    layers: list
    x_final: np.ndarray
    p_final: np.ndarray
    embedding: np.ndarray
    masked: bool = False


def _prepare_x0(g: Graph, x0, cfg: PiPEConfig) -> np.ndarray:
    if x0 is None:
        x = np.ones((g.n, cfg.in_dim))
    else:
        x = np.asarray(x0, dtype=float)
        if x.ndim == 1:
            x = x[:, None]
    if x.shape != (g.n, cfg.in_dim):
        raise ValueError(f"x0 shape {x.shape} does not match (n, in_dim)=({g.n}, {cfg.in_dim})")
    return x


def _check_params(params: PiPEParams):
    cfg = params.cfg
    if len(params.layers) != cfg.layers:
        raise ValueError("parameter layer count does not match config")
    for ell, lp in enumerate(params.layers):
        for name, shape in _shapes(cfg, ell):
            if lp[name].shape != shape:
                raise ValueError(f"layer {ell} {name} has shape {lp[name].shape}, expected {shape}")


def _forward(g: Graph, x0, params: PiPEParams, masked: bool, p0=None) -> ForwardTrace:
    _check_params(params)
    cfg = params.cfg
    n, F, P = g.n, cfg.filtration_count, cfg.psi_dim
    adj = g.adjacency_matrix()
    inc = incidence(g)
    x = _prepare_x0(g, x0, cfg)
    p = base_encoding(g, cfg) if p0 is None else np.asarray(p0, dtype=float)
    trace = []
    for lp in params.layers:
        lt = LayerTrace(p=p, x=x)
        r0 = np.zeros((n, F * P))
        r1 = np.zeros((n, F * P))
        if not masked:
            s = p @ lp["wf"] + lp["bf"]
            a = sigmoid(s)
            lt.values = a
            for j in range(F):
                dg0, dg1 = persistence(g, a[:, j])
                gid0, gid1 = tie_groups(g, a[:, j], cfg.tie_tol)
                t0 = np.tanh(tuple_features(dg0) @ lp["w0"] + lp["b0"])
                t1 = np.tanh(tuple_features(dg1) @ lp["w1"] + lp["b1"])
                keep = np.ones(g.m) if cfg.include_dummies else np.isinf(dg1.deaths).astype(float)
                r0[:, j * P:(j + 1) * P] = group_mean(t0, gid0)
                r1[:, j * P:(j + 1) * P] = inc @ group_mean(t1 * keep[:, None], gid1)
                lt.diagrams.append((dg0, dg1))
                lt.cache[j] = (gid0, gid1, t0, t1, keep)
        lt.r0, lt.r1 = r0, r1
        q = np.hstack([r0, r1, p])
        zp = np.hstack([q, adj @ q]) @ lp["wp"] + lp["bp"]
        hcat = np.hstack([x, p, r0, r1])
        zx = (hcat + adj @ hcat) @ lp["wx"] + lp["bx"]
        lt.cache.update(zp=zp, zx=zx)
        p, x = np.maximum(zp, 0.0), np.maximum(zx, 0.0)
        trace.append(lt)
    rbar = np.zeros(2 * F * P)
    if n:
        rbar = np.mean([np.hstack([lt.r0, lt.r1]).mean(axis=0) for lt in trace], axis=0)
    feat = np.concatenate([x.sum(axis=0), p.sum(axis=0), rbar])
    emb = feat @ params.wr + params.br
    return ForwardTrace(trace, x, p, emb, masked)


def pipe_forward(g: Graph, x0, params: PiPEParams, p0=None) -> ForwardTrace:
    return _forward(g, x0, params, masked=False, p0=p0)


def lspe_forward(g: Graph, x0, params: PiPEParams, p0=None) -> ForwardTrace:
    """Same pipeline with every topological embedding masked to zero."""
    return _forward(g, x0, params, masked=True, p0=p0)


def zero_psi(params: PiPEParams) -> PiPEParams:
    out = params.copy()
    for lp in out.layers:
        for k in ("w0", "b0", "w1", "b1"):
            lp[k][...] = 0.0
    return out


# --- gradients ----------------------------------------------------------------

def diagram_value_grads(g: Graph, values, upstream, dim: int = 0, diagram: PersistenceDiagram | None = None):
    """Scatter per-tuple (d_birth, d_death) cotangents onto the vertices realising them.

    Infinite deaths receive nothing. Tied values follow the recorded provenance.
    """
    dg = diagram if diagram is not None else persistence(g, values)[dim]
    up = np.asarray(upstream, dtype=float).reshape(len(dg), 2)
    grad = np.zeros(g.n)
    np.add.at(grad, dg.birth_vertex, up[:, 0])
    fin = ~np.isinf(dg.deaths)
    np.add.at(grad, dg.death_vertex[fin], up[fin, 1])
    return grad


def filtration_grads(g: Graph, trace: ForwardTrace, params: PiPEParams):
    """Gradient of sum(embedding**2) with respect to every layer's wf and bf."""
    cfg = params.cfg
    n, F, P, L = g.n, cfg.filtration_count, cfg.psi_dim, cfg.layers
    FP, d = F * P, cfg.pe_dim
    adj = g.adjacency_matrix()
    inc = incidence(g)
    dy = 2.0 * trace.embedding
    dfeat = params.wr @ dy
    h = cfg.hidden
    dx = np.tile(dfeat[:h], (n, 1))
    dp = np.tile(dfeat[h:h + d], (n, 1))
    dr_read = np.tile(dfeat[h + d:] / (L * max(n, 1)), (n, 1))
    grads = [None] * L
    for ell in range(L - 1, -1, -1):
        lp, lt = params.layers[ell], trace.layers[ell]
        hx = lt.x.shape[1]
        dzx = dx * (lt.cache["zx"] > 0)
        dh = dzx @ lp["wx"].T
        dh = dh + adj @ dh
        dx_prev = dh[:, :hx]
        dp_new = dh[:, hx:hx + d]
        dr0 = dh[:, hx + d:hx + d + FP] + dr_read[:, :FP]
        dr1 = dh[:, hx + d + FP:] + dr_read[:, FP:]
        dzp = dp * (lt.cache["zp"] > 0)
        dq2 = dzp @ lp["wp"].T
        width = 2 * FP + d
        dq = dq2[:, :width] + adj @ dq2[:, width:]
        dr0 = dr0 + dq[:, :FP]
        dr1 = dr1 + dq[:, FP:2 * FP]
        dp_new = dp_new + dq[:, 2 * FP:]
        gwf = np.zeros_like(lp["wf"])
        gbf = np.zeros_like(lp["bf"])
        if not trace.masked:
            a = lt.values
            for j in range(F):
                gid0, gid1, t0, t1, keep = lt.cache[j]
                dg0, dg1 = lt.diagrams[j]
                dt0 = group_mean(dr0[:, j * P:(j + 1) * P], gid0)
                dz0 = (dt0 * (1.0 - t0 ** 2)) @ lp["w0"].T
                ds1 = inc.T @ dr1[:, j * P:(j + 1) * P]
                dt1 = group_mean(ds1, gid1) * keep[:, None]
                dz1 = (dt1 * (1.0 - t1 ** 2)) @ lp["w1"].T
                da = diagram_value_grads(g, None, dz0[:, :2], diagram=dg0)
                da += diagram_value_grads(g, None, dz1[:, :2], diagram=dg1)
                ds = da * a[:, j] * (1.0 - a[:, j])
                gwf[:, j] = lt.p.T @ ds
                gbf[j] = ds.sum()
                dp_new = dp_new + np.outer(ds, lp["wf"][:, j])
        grads[ell] = {"wf": gwf, "bf": gbf}
        dx, dp = dx_prev, dp_new
    return grads


def loss(g: Graph, params: PiPEParams, x0=None) -> float:
    return float(np.sum(pipe_forward(g, x0, params).embedding ** 2))


def _degenerate(g: Graph, trace: ForwardTrace, eps: float, kink: float, tie_tol: float) -> bool:
    """True if a weight perturbation of size eps could reorder values or cross a ReLU kink.

    One weight step moves a sigmoid value by at most eps * max|p| / 4, so a gap
    of 3 * eps * (1 + max|p|) leaves room for the knock-on effect in later layers.
    """
    for lt in trace.layers:
        scale = 1.0 + np.max(np.abs(lt.p), initial=0.0)
        for j in range(lt.values.shape[1]):
            a = lt.values[:, j]
            cid = value_clusters(a, tie_tol)
            reps = np.sort([a[cid == c].mean() for c in np.unique(cid)])
            if len(reps) > 1 and np.min(np.diff(reps)) <= 3 * eps * scale:
                return True
        for key in ("zp", "zx"):
            if np.any(np.abs(lt.cache[key]) < kink):
                return True
    return False


@dataclass
class GradCheckResult:
    max_rel_error: float
    analytic: np.ndarray
    numeric: np.ndarray
    seed: int
    reseeds: int


def grad_check(g: Graph, cfg: PiPEConfig, seed: int | None = None, eps: float = 1e-5,
               floor: float = 1e-6, kink: float = 1e-4, max_reseeds: int = 50, params: PiPEParams | None = None):
    """Central differences vs the analytic filtration-weight gradient.

    Relative error per coordinate is |fd - an| / max(|fd|, |an|, floor).
    """
    seed = cfg.seed if seed is None else seed
    reseeds = 0
    while True:
        prm = params if params is not None else init_params(cfg, seed)
        trace = pipe_forward(g, None, prm)
        if params is not None or not _degenerate(g, trace, eps, kink, cfg.tie_tol):
            break
        reseeds += 1
        if reseeds > max_reseeds:
            raise DegenerateFiltration(f"tied filtration values after {max_reseeds} reseeds")
        seed = (seed + 0x9E3779B97F4A7C15) & MASK
    an_parts = filtration_grads(g, trace, prm)
    an, fd = [], []
    for ell in range(cfg.layers):
        for key in ("wf", "bf"):
            arr = prm.layers[ell][key]
            for idx in np.ndindex(arr.shape):
                old = arr[idx]
                arr[idx] = old + eps
                lp_ = loss(g, prm)
                arr[idx] = old - eps
                lm_ = loss(g, prm)
                arr[idx] = old
                fd.append((lp_ - lm_) / (2 * eps))
                an.append(an_parts[ell][key][idx])
    an, fd = np.array(an), np.array(fd)
    denom = np.maximum(np.maximum(np.abs(an), np.abs(fd)), floor)
    rel = np.abs(an - fd) / denom
    return GradCheckResult(float(rel.max(initial=0.0)), an, fd, seed, reseeds)


# --- pair comparison ----------------------------------------------------------

DIST_GAP = 1e-6
SAME_GAP = 1e-9


def embedding_gaps(g1: Graph, g2: Graph, cfg: PiPEConfig, seeds, masked: bool = False, x1=None, x2=None):
    fwd = lspe_forward if masked else pipe_forward
    gaps = []
    for s in seeds:
        prm = init_params(replace(cfg, seed=s))
        e1 = fwd(g1, x1, prm).embedding
        e2 = fwd(g2, x2, prm).embedding
        gaps.append(float(np.max(np.abs(e1 - e2))))
    return gaps


def gap_verdict(gaps) -> str:
    if any(x > DIST_GAP for x in gaps):
        return "distinguished"
    if all(x <= SAME_GAP for x in gaps):
        return "undistinguished"
    return "inconclusive"


def pair_seeds(seed: int, count: int = 5) -> list[int]:
    """Derived seeds for the K-seed protocol, from one master seed."""
    rng = Xoshiro256(seed)
    return [rng.next_u64() for _ in range(count)]
