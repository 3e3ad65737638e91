"""Report container and its json / tsv serializations."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

REPORT_FORMAT = 1
ENTRY_FIELDS = ("construction", "claim", "holds", "gating", "measured")


def tool_version() -> str:
    try:
        from importlib.metadata import version

        return version("artifact")
    except Exception:
        return "0+unknown"


@dataclass
class Entry:
    construction: str
    claim: str
    holds: bool
    gating: bool = True
    measured: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.holds:
            return "pass"
        return "fail" if self.gating else "noted"


@dataclass
class Report:
    kind: str = "repro"
    seed: int = 0
    entries: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    version: str = field(default_factory=tool_version)
    format: int = REPORT_FORMAT

    @property
    def passed(self) -> bool:
        return all(e.holds for e in self.entries if e.gating)

    def failures(self) -> list:
        return [e for e in self.entries if e.gating and not e.holds]

    def to_dict(self) -> dict:
        return {
            "format": self.format,
            "kind": self.kind,
            "seed": self.seed,
            "version": self.version,
            "passed": self.passed,
            "summary": _plain(self.summary),
            "entries": [{k: _plain(getattr(e, k)) for k in ENTRY_FIELDS} for e in self.entries],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("format") != REPORT_FORMAT:
            raise ValueError(f"unsupported report format {d.get('format')!r}")
        entries = [Entry(**{k: e[k] for k in ENTRY_FIELDS}) for e in d["entries"]]
        return cls(d["kind"], d["seed"], entries, d.get("summary", {}), d["version"], d["format"])


def _plain(x):
    """Make values JSON-safe and deterministic (inf as a string, numpy to python)."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "tolist"):
        return _plain(x.tolist())
    if isinstance(x, float) and x in (float("inf"), float("-inf")):
        return "inf" if x > 0 else "-inf"
    return x


def emit(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "tsv":
        lines = [f"# format={report.format}\tkind={report.kind}\tseed={report.seed}\tversion={report.version}",
                 "\t".join(("construction", "claim", "verdict", "gating", "measured"))]
        for e in report.entries:
            measured = json.dumps(_plain(e.measured), separators=(",", ":"))
            lines.append("\t".join((e.construction, e.claim, e.verdict, str(e.gating).lower(), measured)))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))
