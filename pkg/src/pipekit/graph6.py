"""graph6 reader and writer (short and long size forms)."""
from __future__ import annotations

from typing import Iterable

from .graphcore import Graph, GraphError, build_graph

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise Graph6Error(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    """Encode ``g``; bits are the upper triangle in column-major order."""
    vals = _encode_n(g.n)
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        vals.append(x)
    return "".join(chr(v + 63) for v in vals)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    data = []
    for pos, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"byte {o} at position {pos} outside 63..126")
        data.append(o - 63)
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n, rest = (data[1] << 12) | (data[2] << 6) | data[3], data[4:]
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    else:
        raise Graph6Error("truncated size field")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(rest) < need:
        raise Graph6Error(f"truncated bit stream: need {need} bytes, got {len(rest)}")
    if len(rest) > need:
        raise Graph6Error(f"trailing garbage: {len(rest) - need} extra bytes")
    pad = need * 6 - nbits
    if pad and rest[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse a corpus; blank lines are skipped, a leading header is allowed."""
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    return out


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return read_graph6_lines(fh)


def corpus_lines(path) -> list[str]:
    """Non-blank lines with any ``>>graph6<<`` header prefix removed."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln[len(HEADER):] if ln.startswith(HEADER) else ln for ln in lines]
    return [ln for ln in lines if ln]
