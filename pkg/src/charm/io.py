"""graph6 and adjacency-list text formats.

Only the short graph6 header is supported (n <= 62), which covers every
graph this package deals with.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import MalformedGraph6, GraphError
from .graph import CubicGraph, from_adjacency, from_edges

_HEADER = ">>graph6<<"


def write_graph6(g: CubicGraph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("graph6 short form only supports n <= 62")
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> CubicGraph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedGraph6(f"character outside graph6 range in {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise MalformedGraph6("long-form graph6 headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def read_graph6_file(path) -> Iterator[CubicGraph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_graph6(line)


def write_adjacency_text(g: CubicGraph) -> str:
    lines = [str(g.n)]
    lines += [f"{v}: {a} {b} {c}" for v, (a, b, c) in enumerate(g.adj)]
    return "\n".join(lines) + "\n"


def parse_adjacency_text(text: str) -> CubicGraph:
    """Parse ``n`` followed by ``n`` lines of the form ``v: a b c``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty adjacency text")
    try:
        n = int(lines[0])
        lists: list = [None] * n
        for ln in lines[1:]:
            head, _, rest = ln.partition(":")
            v = int(head)
            lists[v] = [int(x) for x in rest.split()]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed adjacency text: {exc}") from None
    if len(lines) - 1 != n or any(x is None for x in lists):
        raise GraphError(f"expected {n} adjacency lines")
    return from_adjacency(lists)


def load_graphs(path) -> list[CubicGraph]:
    """Load graphs from a file holding either graph6 lines or adjacency text."""
    text = Path(path).read_text()
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.isdigit():
        return [parse_adjacency_text(text)]
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
