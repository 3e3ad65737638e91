"""Evaluate registered claims into a Report."""
from __future__ import annotations

import time

from .registry import REGISTRY, Ctx, construction
from .report import Entry, Report


def reproduce(cid: str, n: int = 1, seed: int = 0) -> list[Entry]:
    """Entries for every claim of one construction; failures are verdicts, not errors."""
    g1, g2, claims = construction(cid, n)
    ctx = Ctx(n, seed)
    out = []
    for c in claims:
        t0 = time.perf_counter()
        try:
            holds, measured = c.check(g1, g2, ctx)
        except Exception as exc:  # a crashing check is a failed claim
            holds, measured = False, {"error": f"{type(exc).__name__}: {exc}"}
        measured = dict(measured)
        measured["seconds"] = round(time.perf_counter() - t0, 3)
        out.append(Entry(cid, c.name, bool(holds), c.gating, measured))
    return out


def reproduce_all(ids=None, n: int = 1, seed: int = 0) -> Report:
    ids = list(REGISTRY) if ids in (None, "all") else list(ids)
    rep = Report("repro", seed)
    for cid in ids:
        scale = n if REGISTRY[cid].scalable else 1
        rep.entries.extend(reproduce(cid, scale, seed))
    by = {}
    for e in rep.entries:
        s = by.setdefault(e.construction, {"claims": 0, "failed": 0})
        s["claims"] += 1
        s["failed"] += int(e.gating and not e.holds)
    rep.summary = {"n": n, "constructions": by}
    return rep
