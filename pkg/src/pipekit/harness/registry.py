"""Registry of expressivity constructions: graph pairs plus machine-checkable claims."""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..encode import distance_pe, lap_pe, lap_pe_admissible, matches_published, pe_multiset_equal, rw_pe
from ..graphcore import (Graph, are_isomorphic, betti, build_graph, complete, cycle, disjoint_union,
                         hypercube, path)
from ..persist import (dedup_colors, diagram0, diagram1, diagrams_equal, filtration_values,
                       is_color_separating, rank_table)
from ..pipe import PiPEConfig, embedding_gaps, gap_verdict, pair_seeds
from ..rng import Xoshiro256
from ..wl import kfwl_distinguish, kfwl_joint, kfwl_node_projection, wl1_distinguish
from . import published as pub
from .cache import cached_pair
from .reconstruct import adjacency_spectrum

TOL = 1e-8
PUB_TOL = 0.02


class UnknownConstruction(KeyError):
    pass


@dataclass
class Ctx:
    n: int
    seed: int

    def rng(self, label: str) -> Xoshiro256:
        return Xoshiro256(sub_seed(self.seed, label))


def sub_seed(seed: int, label: str) -> int:
    h = hashlib.blake2b(f"{seed}:{label}".encode(), digest_size=8).digest()
    return int.from_bytes(h, "little")


@dataclass(frozen=True)
class Claim:
    name: str
    check: Callable  # (g1, g2, ctx) -> (holds, measured)
    gating: bool = True


@dataclass(frozen=True)
class Construction:
    id: str
    builder: Callable  # n -> (g1, g2)
    claims: tuple
    provenance: str
    scalable: bool = False


# --- helpers shared by claims --------------------------------------------------

def copies(g: Graph, n: int) -> Graph:
    return disjoint_union([g] * n)


def joint_ids(rows1, rows2):
    return dedup_colors([rows1, rows2], tol=TOL)


def tabulated_values(ids1, ids2, ranks=None):
    spec = rank_table([ids1, ids2], ranks)
    return filtration_values(ids1, spec), filtration_values(ids2, spec)


def random_ranks(rng: Xoshiro256, m: int):
    return [float(r) for r in rng.permutation(m)]


def color_count(ids1, ids2) -> int:
    return len(set(ids1) | set(ids2))


def diagrams_differ_for_tables(g1, g2, rows1, rows2, rng, trials=5, dims=(0,)):
    """True if diagrams differ under the rank table and ``trials`` random injective tables."""
    ids1, ids2 = joint_ids(rows1, rows2)
    m = color_count(ids1, ids2)
    tables = [None] + [random_ranks(rng, m) for _ in range(trials)]
    outcomes = []
    for ranks in tables:
        f1, f2 = tabulated_values(ids1, ids2, ranks)
        diff = False
        for dim in dims:
            dg = diagram0 if dim == 0 else diagram1
            diff |= not diagrams_equal(dg(g1, f1), dg(g2, f2))
        outcomes.append(diff)
    return outcomes


def pair_summary(g1, g2):
    b1, b2 = betti(g1), betti(g2)
    return {"betti_g1": [b1.beta0, b1.beta1], "betti_g2": [b2.beta0, b2.beta1]}


def theta_pair(n=1):
    return cached_pair("theta")


def bridge_pair(n=1):
    return cached_pair("bridge")


def quartic_pair(n=1):
    return cached_pair("quartic")


def triangle_vs_isolated(n):
    g1 = copies(disjoint_union([complete(1), complete(3)]), n)
    return g1, build_graph(4 * n, [])


def cycle_pair(n):
    return copies(cycle(10), n), copies(disjoint_union([cycle(5), cycle(5)]), n)


def hypercube_pair(n):
    return copies(hypercube(3), n), copies(disjoint_union([hypercube(2), hypercube(2)]), n)


def square_vs_hexagon(n):
    return copies(disjoint_union([cycle(4)] * 3), n), copies(disjoint_union([cycle(6)] * 2), n)


def square_vs_path(n):
    return copies(cycle(4), n), copies(path(4), n)


# --- generic claims ------------------------------------------------------------

def c_betti_equal(g1, g2, ctx):
    m = pair_summary(g1, g2)
    return m["betti_g1"] == m["betti_g2"], m


def c_betti_differ(which):
    def check(g1, g2, ctx):
        m = pair_summary(g1, g2)
        return m["betti_g1"][which] != m["betti_g2"][which], m
    return check


def c_not_isomorphic(g1, g2, ctx):
    return not are_isomorphic(g1, g2), {}


def c_matches(encoder, t1, t2):
    def check(g1, g2, ctx):
        a, b = matches_published(encoder(g1), t1, PUB_TOL), matches_published(encoder(g2), t2, PUB_TOL)
        return a and b, {"g1_matches": a, "g2_matches": b}
    return check


def c_pe_equal(encoder, ks, expect=True):
    def check(g1, g2, ctx):
        res = {k: pe_multiset_equal(encoder(g1, k), encoder(g2, k), TOL) for k in ks}
        return all(v == expect for v in res.values()), {"equal_by_k": {str(k): v for k, v in res.items()}}
    return check


def c_color_diagrams_differ(encoder, dims=(0,)):
    def check(g1, g2, ctx):
        out = diagrams_differ_for_tables(g1, g2, encoder(g1), encoder(g2), ctx.rng("tables"), dims=dims)
        return all(out), {"differ_per_table": out}
    return check


def c_wl1_equal(g1, g2, ctx):
    return not wl1_distinguish(g1, g2), {}


def c_fwl2_distinguishes(g1, g2, ctx):
    return kfwl_distinguish(g1, g2, 2), {}


def pipe_cfg(**kw):
    return PiPEConfig(**kw)


def c_gap(cfg_kw, masked, want):
    def check(g1, g2, ctx):
        gaps = embedding_gaps(g1, g2, pipe_cfg(**cfg_kw), pair_seeds(sub_seed(ctx.seed, "pipe")), masked=masked)
        verdict = gap_verdict(gaps)
        return verdict == want, {"gaps": gaps, "verdict": verdict}
    return check


# --- construction-specific claims ----------------------------------------------

def lap2(g):
    return lap_pe(g, 2, skip_trivial=True)


def lap_raw(g, k):
    return lap_pe(g, k)


def rw(g, k):
    return rw_pe(g, k)


def c_lap_differs_above_beta0(g1, g2, ctx):
    b0 = betti(g1).beta0
    ks = range(b0 + 1, g1.n + 1)
    res = {str(k): pe_multiset_equal(lap_pe(g1, k), lap_pe(g2, k), TOL) for k in ks}
    skip = pe_multiset_equal(lap2(g1), lap2(g2), TOL)
    return not any(res.values()) and not skip, {"equal_by_k": res, "skip_trivial_k2_equal": skip}


def c_shared_lap_witness(g1, g2, ctx):
    """lap_pe(g1, k) is a valid LapPE of g2 as well, for every k up to beta0(g1)."""
    b0 = betti(g1).beta0
    res = {}
    for k in range(1, b0 + 1):
        pe = lap_pe(g1, k)
        res[str(k)] = lap_pe_admissible(g1, pe) and lap_pe_admissible(g2, pe)
    return all(res.values()), {"admissible_by_k": res}


def c_witness_diagrams_differ(g1, g2, ctx):
    """Both graphs colored with the shared encoding rows: dim-0 diagrams differ."""
    pe = lap_pe(g1, betti(g1).beta0)
    out = diagrams_differ_for_tables(g1, g2, pe.rows, pe.rows, ctx.rng("tables"))
    return all(out), {"differ_per_table": out}


def c_lemma_property(g1, g2, ctx):
    """Random pairs with unequal PE multisets give unequal dim-0 birth multisets."""
    rng = ctx.rng("lemma")
    tested = unequal = bad = 0
    encoders = [("rw3", lambda g: rw_pe(g, 3)),
                ("lap_proj2", lambda g: lap_pe(g, 2, "eigenspace_projection"))]
    for _ in range(40):
        n = 4 + rng.integers(6)
        gs = []
        for _ in range(2):
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35]
            gs.append(build_graph(n, edges))
        for _, enc in encoders:
            p1, p2 = enc(gs[0]), enc(gs[1])
            tested += 1
            if pe_multiset_equal(p1, p2, TOL):
                continue
            unequal += 1
            ids1, ids2 = joint_ids(p1.rows, p2.rows)
            f1, f2 = tabulated_values(ids1, ids2, random_ranks(rng, color_count(ids1, ids2)))
            b1 = np.sort(diagram0(gs[0], f1).births)
            b2 = np.sort(diagram0(gs[1], f2).births)
            if np.array_equal(b1, b2):
                bad += 1
    return bad == 0 and unequal > 0, {"tested": tested, "unequal_pe": unequal, "violations": bad}


def c_de_self_equal(g1, g2, ctx):
    p1 = distance_pe(g1, "self", 1, "shortest_path")
    p2 = distance_pe(g2, "self", 1, "shortest_path")
    return pe_multiset_equal(p1, p2, TOL), {}


def c_de_modes(g1, g2, ctx):
    """Which distance-encoding readings agree on the pair (recorded, not asserted)."""
    res = {}
    res["self_shortest_path"] = pe_multiset_equal(distance_pe(g1, "self", 1), distance_pe(g2, "self", 1), TOL)
    res["self_rw_vector_k2"] = pe_multiset_equal(distance_pe(g1, "self", 2, "rw_vector"),
                                                 distance_pe(g2, "self", 2, "rw_vector"), TOL)
    res["single_anchor0_shortest_path"] = pe_multiset_equal(distance_pe(g1, [0], 1), distance_pe(g2, [0], 1), TOL)
    res["all_anchors_onehot_k3"] = pe_multiset_equal(
        distance_pe(g1, range(g1.n), 3, phi="onehot"), distance_pe(g2, range(g2.n), 3, phi="onehot"), TOL)
    return res["self_shortest_path"], res


def degree_values(g, gamma, alpha):
    """f(2) = gamma, f(3) = alpha, other degrees mapped far above both."""
    table = {2: gamma, 3: alpha}
    return np.array([table.get(int(d), 10.0 + d) for d in g.degrees()])


GAMMA_ALPHA = {"gamma>alpha": (2.0, 1.0), "gamma<alpha": (1.0, 2.0)}


def published_shape(case, gamma, alpha):
    inf = float("inf")
    if case == "gamma>alpha":
        return sorted([(alpha, alpha), (alpha, inf)] + [(gamma, gamma)] * 8)
    return sorted([(alpha, alpha)] * 8 + [(gamma, inf), (gamma, gamma)])


def c_degree_diagrams_equal(g1, g2, ctx):
    res = {}
    for case, (gm, al) in GAMMA_ALPHA.items():
        res[case] = diagrams_equal(diagram0(g1, degree_values(g1, gm, al)), diagram0(g2, degree_values(g2, gm, al)))
    rng = ctx.rng("degree")
    trials = []
    for _ in range(20):
        gm, al = rng.uniform(-1, 1), rng.uniform(-1, 1)
        trials.append(diagrams_equal(diagram0(g1, degree_values(g1, gm, al)),
                                     diagram0(g2, degree_values(g2, gm, al))))
    return all(res.values()) and all(trials), {"cases": res, "random_f_equal": sum(trials)}


def c_degree_multisets_equal(g1, g2, ctx):
    return sorted(g1.degrees().tolist()) == sorted(g2.degrees().tolist()), {}


def c_shape(case):
    def check(g1, g2, ctx):
        gm, al = GAMMA_ALPHA[case]
        want = published_shape(case, gm, al)
        got1 = diagram0(g1, degree_values(g1, gm, al)).pairs()
        got2 = diagram0(g2, degree_values(g2, gm, al)).pairs()
        return got1 == want and got2 == want, {"g1": _fmt_pairs(got1), "g2": _fmt_pairs(got2),
                                               "published": _fmt_pairs(want)}
    return check


def _fmt_pairs(pairs):
    return [[b, "inf" if np.isinf(d) else d] for b, d in pairs]


def c_lap_k1_equal(laplacian):
    def check(g1, g2, ctx):
        p1, p2 = lap_pe(g1, 1, laplacian=laplacian), lap_pe(g2, 1, laplacian=laplacian)
        return pe_multiset_equal(p1, p2, TOL), {"laplacian": laplacian}
    return check


def c_lap_k1_diagrams_equal(laplacian):
    def check(g1, g2, ctx):
        p1, p2 = lap_pe(g1, 1, laplacian=laplacian), lap_pe(g2, 1, laplacian=laplacian)
        out = diagrams_differ_for_tables(g1, g2, p1.rows, p2.rows, ctx.rng("tables"))
        return not any(out), {"differ_per_table": out}
    return check


def c_projection_k1(laplacian):
    def check(g1, g2, ctx):
        p1 = lap_pe(g1, 1, "eigenspace_projection", laplacian=laplacian)
        p2 = lap_pe(g2, 1, "eigenspace_projection", laplacian=laplacian)
        return pe_multiset_equal(p1, p2, TOL), {"g1_values": sorted(set(np.round(p1.rows[:, 0], 6).tolist())),
                                                 "g2_values": sorted(set(np.round(p2.rows[:, 0], 6).tolist()))}
    return check


def c_dim1_differ(encoder):
    def check(g1, g2, ctx):
        out = diagrams_differ_for_tables(g1, g2, encoder(g1), encoder(g2), ctx.rng("tables"), dims=(1,))
        return all(out), {"differ_per_table": out}
    return check


def c_cospectral(g1, g2, ctx):
    s1, s2 = adjacency_spectrum(g1), adjacency_spectrum(g2)
    return bool(np.allclose(s1, s2, atol=TOL)), {"spectrum": np.round(s1, 6).tolist()}


def c_regular(d):
    def check(g1, g2, ctx):
        return bool(np.all(g1.degrees() == d) and np.all(g2.degrees() == d)), {}
    return check


def _layer0_orderings(g1, g2, k):
    """Diagram equality (dims 0 and 1) for every ordering of the joint RW colors."""
    ids1, ids2 = joint_ids(rw_pe(g1, k).rows, rw_pe(g2, k).rows)
    m = color_count(ids1, ids2)
    res = []
    for perm in itertools.permutations(range(m)):
        f1, f2 = tabulated_values(ids1, ids2, [float(x) for x in perm])
        eq0 = diagrams_equal(diagram0(g1, f1), diagram0(g2, f2))
        eq1 = diagrams_equal(diagram1(g1, f1), diagram1(g2, f2))
        res.append({"ranks": list(perm), "dim0_equal": eq0, "dim1_equal": eq1})
    return res


def c_layer0_some(g1, g2, ctx):
    res = _layer0_orderings(g1, g2, 4)
    return any(r["dim0_equal"] and r["dim1_equal"] for r in res), {"orderings": res}


def c_layer0_every(g1, g2, ctx):
    res = _layer0_orderings(g1, g2, 4)
    return all(r["dim0_equal"] and r["dim1_equal"] for r in res), {"orderings": res}


def c_rw_equal_range(g1, g2, ctx):
    res = {str(k): pe_multiset_equal(rw_pe(g1, k), rw_pe(g2, k), TOL) for k in range(1, 9)}
    return res["4"], {"equal_by_k": res}


def c_quartic_literal(g1, g2, ctx):
    a = matches_published(rw_pe(g1, 4), pub.QUARTIC_RW_K, PUB_TOL)
    b = matches_published(rw_pe(g2, 4), pub.QUARTIC_RW_KP, PUB_TOL)
    col3 = sorted(set(np.round(rw_pe(g1, 4).rows[:, 2], 6).tolist()))
    return a and b, {"computed_third_column": col3, "printed_third_column": [0.62, 0.93]}


def c_pipe_gaps_recorded(cfg_kw):
    def check(g1, g2, ctx):
        gaps = embedding_gaps(g1, g2, pipe_cfg(**cfg_kw), pair_seeds(sub_seed(ctx.seed, "pipe")))
        return gap_verdict(gaps) == "undistinguished", {"gaps": gaps, "verdict": gap_verdict(gaps)}
    return check


def random_pair(rng: Xoshiro256, lo=5, hi=9, p=0.4):
    n = lo + rng.integers(hi - lo + 1)
    gs = []
    for _ in range(2):
        gs.append(build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return gs[0], gs[1]


def projection_check(g1, g2):
    """For a 2-FWL-distinguished pair: projected colors separate and dim-0 diagrams differ."""
    t1, t2 = kfwl_joint([g1, g2], 2)
    c1, c2 = kfwl_node_projection(g1, t1), kfwl_node_projection(g2, t2)
    sep = is_color_separating(g1, c1, g2, c2, ())
    keys = sorted(set(c1) | set(c2))
    table = {c: float(i) for i, c in enumerate(keys)}
    f1 = np.array([table[c] for c in c1])
    f2 = np.array([table[c] for c in c2])
    differ = not diagrams_equal(diagram0(g1, f1), diagram0(g2, f2))
    return sep, differ


def corpus_pairs(ctx, random_count=20):
    pairs = [theta_pair(), bridge_pair(), quartic_pair(), cycle_pair(1), hypercube_pair(1),
             square_vs_hexagon(1), square_vs_path(1), triangle_vs_isolated(1),
             (cycle(6), disjoint_union([cycle(3), cycle(3)]))]
    rng = ctx.rng("corpus")
    pairs += [random_pair(rng) for _ in range(random_count)]
    return pairs


def c_projection_separates(g1, g2, ctx):
    checked = ok = 0
    fails = []
    for i, (a, b) in enumerate(corpus_pairs(ctx)):
        if a.n != b.n or not kfwl_distinguish(a, b, 2):
            continue
        checked += 1
        sep, differ = projection_check(a, b)
        if sep and differ:
            ok += 1
        else:
            fails.append(i)
    return checked > 0 and ok == checked, {"distinguished_pairs": checked, "separated": ok, "failures": fails}


# --- the registry --------------------------------------------------------------

LAP41 = dict(base_pe="lap", base_k=1, lap_policy="raw", hidden=8, psi_dim=4)
LAP42 = dict(base_pe="lap", base_k=1, lap_policy="raw", laplacian="combinatorial", hidden=8, psi_dim=4)
RW43 = dict(base_pe="rw", base_k=4, hidden=8, psi_dim=4)

REGISTRY: dict[str, Construction] = {}


def register(c: Construction):
    REGISTRY[c.id] = c
    return c


register(Construction("prop31_s1", theta_pair, (
    Claim("graphs are not isomorphic", c_not_isomorphic),
    Claim("betti numbers equal", c_betti_equal),
    Claim("raw LapPE (k=2, trivial skipped) matches published rows", c_matches(lap2, pub.THETA_LAP_K, pub.THETA_LAP_KP)),
    Claim("LapPE multisets differ for every k > beta0", c_lap_differs_above_beta0),
), "six-vertex pair recovered from its published LapPE rows"))

register(Construction("prop31_s23", triangle_vs_isolated, (
    Claim("beta0 differ", c_betti_differ(0)),
    Claim("beta1 differ", c_betti_differ(1)),
    Claim("one LapPE is valid for both graphs for every k <= beta0", c_shared_lap_witness),
), "n copies of K1+K3 against 4n isolated vertices", scalable=True))

register(Construction("prop32_s1", theta_pair, (
    Claim("betti numbers equal", c_betti_equal),
    Claim("RW-PE (k=2) matches published rows", c_matches(lambda g: rw_pe(g, 2), pub.THETA_RW_K, pub.THETA_RW_KP)),
    Claim("RW-PE multisets differ for k = beta0 + 1", c_pe_equal(rw, [2], expect=False)),
), "six-vertex pair recovered from its published LapPE rows, RW encoding"))

register(Construction("prop32_s23", cycle_pair, (
    Claim("beta0 differ", c_betti_differ(0)),
    Claim("beta1 differ", c_betti_differ(1)),
    Claim("RW-PE multisets equal for k = 1..4", c_pe_equal(rw, range(1, 5))),
    Claim("RW-PE (k=4) matches published rows", c_matches(lambda g: rw_pe(g, 4), pub.CYCLE_RW, pub.CYCLE_RW)),
), "C10 against C5+C5", scalable=True))

register(Construction("lemma33", triangle_vs_isolated, (
    Claim("unequal PE multisets give unequal dim-0 birth multisets on random pairs", c_lemma_property),
), "property run over seeded random pairs"))

register(Construction("prop34_rw", cycle_pair, (
    Claim("RW-PE multisets equal (k=4)", c_pe_equal(rw, [4])),
    Claim("beta0 differ", c_betti_differ(0)),
    Claim("dim-0 diagrams of RW colors differ under injective filtrations", c_color_diagrams_differ(lambda g: rw_pe(g, 4).rows)),
), "C10 against C5+C5", scalable=True))

register(Construction("prop34_lap", triangle_vs_isolated, (
    Claim("one LapPE is valid for both graphs for every k <= beta0", c_shared_lap_witness),
    Claim("beta0 differ", c_betti_differ(0)),
    Claim("dim-0 diagrams of the shared LapPE colors differ under injective filtrations", c_witness_diagrams_differ),
), "n copies of K1+K3 against 4n isolated vertices", scalable=True))

register(Construction("prop35_de", hypercube_pair, (
    Claim("self-anchored shortest-path distance encodings equal", c_de_self_equal),
    Claim("beta0 differ", c_betti_differ(0)),
    Claim("dim-0 diagrams of distance colors differ under injective filtrations",
          c_color_diagrams_differ(lambda g: distance_pe(g, "self", 1).rows)),
    Claim("distance-encoding readings that agree on the pair", c_de_modes, gating=False),
), "cube Q3 against two squares Q2+Q2", scalable=True))

register(Construction("prop36", bridge_pair, (
    Claim("graphs are not isomorphic", c_not_isomorphic),
    Claim("degree multisets equal", c_degree_multisets_equal),
    Claim("degree-filtration dim-0 diagrams equal for both orderings and random f", c_degree_diagrams_equal),
    Claim("degree diagram has the published shape when gamma > alpha", c_shape("gamma>alpha")),
    Claim("degree diagram has the published shape when gamma < alpha", c_shape("gamma<alpha"), gating=False),
    Claim("raw LapPE (k=2, trivial skipped) matches published rows", c_matches(lap2, pub.BRIDGE_LAP_G, pub.BRIDGE_LAP_GP)),
    Claim("LapPE multisets differ (k=2)", c_pe_equal(lambda g, k: lap_pe(g, k, skip_trivial=True), [2], expect=False)),
    Claim("dim-0 diagrams of LapPE colors differ", c_color_diagrams_differ(lambda g: lap2(g).rows)),
    Claim("RW-PE (k=5) matches published rows", c_matches(lambda g: rw_pe(g, 5), pub.BRIDGE_RW_G, pub.BRIDGE_RW_GP)),
    Claim("RW-PE multisets differ (k=5)", c_pe_equal(rw, [5], expect=False)),
    Claim("dim-0 diagrams of RW colors differ", c_color_diagrams_differ(lambda g: rw_pe(g, 5).rows)),
), "ten-vertex pair recovered from its published LapPE rows"))

register(Construction("prop41", square_vs_hexagon, (
    Claim("raw LapPE multisets equal (k=1)", c_lap_k1_equal("normalized")),
    Claim("1-WL does not distinguish", c_wl1_equal),
    Claim("LSPE embeddings agree on all seeds", c_gap(LAP41, True, "undistinguished")),
    Claim("PiPE embeddings differ on some seed", c_gap(LAP41, False, "distinguished")),
    Claim("eigenspace-projection LapPE (k=1) agrees", c_projection_k1("normalized"), gating=False),
), "3n squares against 2n hexagons", scalable=True))

register(Construction("prop42", square_vs_path, (
    Claim("combinatorial LapPE multisets equal (k=1)", c_lap_k1_equal("combinatorial")),
    Claim("dim-0 diagrams of LapPE colors equal under injective filtrations", c_lap_k1_diagrams_equal("combinatorial")),
    Claim("PiPE embeddings differ on some seed", c_gap(LAP42, False, "distinguished")),
    Claim("LSPE embeddings agree on all seeds", c_gap(LAP42, True, "undistinguished"), gating=False),
    Claim("normalized LapPE multisets equal (k=1)", c_lap_k1_equal("normalized"), gating=False),
    Claim("dim-1 diagrams of LapPE colors differ", c_dim1_differ(lambda g: lap_pe(g, 1, laplacian="combinatorial").rows),
          gating=False),
), "n squares against n paths P4", scalable=True))

register(Construction("prop43", quartic_pair, (
    Claim("graphs are not isomorphic", c_not_isomorphic),
    Claim("both graphs 4-regular", c_regular(4)),
    Claim("adjacency spectra equal", c_cospectral),
    Claim("1-WL does not distinguish", c_wl1_equal),
    Claim("2-FWL distinguishes", c_fwl2_distinguishes),
    Claim("RW-PE multisets equal (k=4)", c_rw_equal_range),
    Claim("RW-PE (k=4) matches published rows after rescaling the third column",
          c_matches(lambda g: rw_pe(g, 4), pub.quartic_rescaled(pub.QUARTIC_RW_K), pub.quartic_rescaled(pub.QUARTIC_RW_KP))),
    Claim("RW-PE (k=4) matches published rows as printed", c_quartic_literal, gating=False),
    Claim("layer-0 diagrams equal for some injective filtration of RW colors", c_layer0_some),
    Claim("layer-0 diagrams equal for every injective filtration of RW colors", c_layer0_every),
    Claim("RW-based PiPE embeddings agree on all seeds", c_pipe_gaps_recorded(RW43), gating=False),
), "cospectral 4-regular pair recovered by exhaustive search"))

register(Construction("prop44", theta_pair, (
    Claim("2-FWL node projection is color separating and splits dim-0 diagrams on every distinguished pair",
          c_projection_separates),
), "registry pairs plus seeded random pairs"))


def ids() -> list[str]:
    return list(REGISTRY)


def construction(cid: str, n: int = 1):
    if cid not in REGISTRY:
        raise UnknownConstruction(f"unknown construction {cid!r}")
    if n < 1:
        raise ValueError("scale n must be >= 1")
    c = REGISTRY[cid]
    g1, g2 = c.builder(n)
    return g1, g2, list(c.claims)
