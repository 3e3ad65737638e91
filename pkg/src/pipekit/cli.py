"""Command-line entry point: ``pipekit <command> ...``. Exit code 0 iff all evaluated claims pass."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .encode import distance_pe, lap_pe, rw_pe
from .graph6 import Graph6Error, corpus_lines, parse_graph6, read_graph6_file, write_graph6
from .graphcore import GraphError
from .harness.pairs import CorpusError, pair_suite_file
from .harness.registry import REGISTRY, UnknownConstruction
from .harness.report import emit
from .harness.reproduce import reproduce_all
from .persist import diagram0, diagram1
from .wl import chash, kfwl_joint, wl1_joint

METHOD_ALIASES = {"ph": "ph_only", "ph_only": "ph_only", "ph_lpe": "ph_lpe", "pipe": "pipe"}


def _fmt(x: float) -> str:
    return "inf" if np.isinf(x) else f"{x:.6g}"


def cmd_repro(args) -> int:
    ids = None if args.prop_id == "all" else [args.prop_id]
    if ids and ids[0] not in REGISTRY:
        raise UnknownConstruction(f"unknown construction {args.prop_id!r}; known: {', '.join(REGISTRY)}")
    rep = reproduce_all(ids, n=args.n, seed=args.seed)
    sys.stdout.write(emit(rep, args.format))
    return 0 if rep.passed else 1


def cmd_pairs(args) -> int:
    methods = []
    for m in args.methods.split(","):
        if m.strip() not in METHOD_ALIASES:
            raise ValueError(f"unknown method {m!r}")
        methods.append(METHOD_ALIASES[m.strip()])
    rep = pair_suite_file(args.file, methods, args.seed)
    sys.stdout.write(emit(rep, args.format))
    return 0 if rep.passed else 1


def cmd_pe(args) -> int:
    for i, g in enumerate(read_graph6_file(args.file)):
        if args.method == "lap":
            pe = lap_pe(g, args.k, args.policy, args.skip_trivial)
        elif args.method == "rw":
            pe = rw_pe(g, args.k)
        else:
            pe = distance_pe(g, range(g.n), args.k, phi="onehot")
        print(f"# graph {i} n={g.n} method={args.method} k={args.k}")
        for row in pe.rows:
            print("\t".join(f"{x:.6g}" for x in row))
    return 0


def _filtration(g, kind, k):
    if kind == "degree":
        return g.degrees().astype(float)
    rows = lap_pe(g, min(k, g.n), "eigenspace_projection").rows if kind == "lap" else rw_pe(g, k).rows
    # lexicographic rank of the row among the graph's distinct rows
    keys = sorted(set(map(tuple, np.round(rows, 9))))
    rank = {r: i for i, r in enumerate(keys)}
    return np.array([rank[tuple(r)] for r in np.round(rows, 9)], dtype=float)


def cmd_ph(args) -> int:
    for i, g in enumerate(read_graph6_file(args.file)):
        f = _filtration(g, args.filtration, args.k)
        print(f"# graph {i} n={g.n} filtration={args.filtration}")
        for dim, dg in ((0, diagram0(g, f)), (1, diagram1(g, f))):
            print(f"dim{dim}\t" + " ".join(f"({_fmt(b)},{_fmt(d)})" for b, d in dg.pairs()))
    return 0


def cmd_wl(args) -> int:
    gs = read_graph6_file(args.file)
    if args.k == 1:
        cols, _ = wl1_joint(gs)
        hists = [sorted(c) for c in cols]
    else:
        hists = [sorted(tc.colors) for tc in kfwl_joint(gs, args.k)]
    for i, h in enumerate(hists):
        print(f"{i}\t{chash(tuple(h))}\t{len(set(h))}")
    return 0


def cmd_g6(args) -> int:
    bad = 0
    lines = corpus_lines(args.file)
    for i, line in enumerate(lines, 1):
        if write_graph6(parse_graph6(line)) != line:
            print(f"line {i}: round-trip mismatch", file=sys.stderr)
            bad += 1
    print(f"{len(lines) - bad}/{len(lines)} lines round-trip")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pipekit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("repro", help="evaluate registered constructions")
    r.add_argument("prop_id")
    r.add_argument("--n", type=int, default=1, help="scale of parameterized constructions")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--format", choices=("json", "tsv"), default="json")
    r.set_defaults(func=cmd_repro)

    q = sub.add_parser("pairs", help="pair-suite evaluation of consecutive graph6 lines")
    q.add_argument("file")
    q.add_argument("--methods", default="ph,ph_lpe,pipe")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--format", choices=("json", "tsv"), default="json")
    q.set_defaults(func=cmd_pairs)

    e = sub.add_parser("pe", help="print positional encodings")
    e.add_argument("file")
    e.add_argument("--method", choices=("lap", "rw", "distance"), required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--policy", choices=("raw", "eigenspace_projection"), default="raw")
    e.add_argument("--skip-trivial", action="store_true")
    e.set_defaults(func=cmd_pe)

    h = sub.add_parser("ph", help="print persistence diagrams")
    h.add_argument("file")
    h.add_argument("--filtration", choices=("degree", "lap", "rw"), default="degree")
    h.add_argument("--k", type=int, default=2)
    h.set_defaults(func=cmd_ph)

    w = sub.add_parser("wl", help="joint color histograms: 1-WL for k=1, folklore k-WL for k=2,3")
    w.add_argument("file")
    w.add_argument("--k", type=int, choices=(1, 2, 3), default=1)
    w.set_defaults(func=cmd_wl)

    g = sub.add_parser("g6", help="graph6 utilities")
    g.add_argument("action", choices=("roundtrip",))
    g.add_argument("file")
    g.set_defaults(func=cmd_g6)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, CorpusError, GraphError, UnknownConstruction, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pipekit: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
