"""Graph file formats: whitespace edge lists and graph6.

Edge list: one ``u v`` pair per line, 0-based, ``#`` starts a comment.  An
optional first line ``n m`` is treated as a header exactly when ``m`` equals
the number of edge lines that follow and the line is not itself a plausible
edge (so ``0 0`` alone is a self-loop, not an empty graph).  Without a
header, ``n`` is one more than the largest vertex id.

graph6: the standard printable encoding for graphs on up to 62 vertices.
The size byte is ``63 + n``; the upper triangle is then read column by
column (pairs (0,1), (0,2), (1,2), (0,3), ...) six bits per byte, most
significant bit first, zero-padded.  Multi-byte sizes (n > 62) are
rejected.
"""

from __future__ import annotations

from pathlib import Path

from .errors import (
    DuplicateEdgeError,
    MalformedGraph6Error,
    ParseError,
    SelfLoopError,
    UnsupportedSizeError,
    VertexOutOfRangeError,
)
from .graphs import Graph, make_graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph; errors carry 1-based line numbers."""
    data: list[tuple[int, tuple[int, int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", line=lineno) from None
        data.append((lineno, (a, b)))
    if not data:
        raise ParseError("no edges or header found")

    (_, (a, b)), rest = data[0], data[1:]
    is_header = b == len(rest) and (b >= 1 or a >= 1) and (a, b) != (0, 0)
    pairs = rest if is_header else data

    seen: set[tuple[int, int]] = set()
    for lineno, (x, y) in pairs:
        if x == y:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {x}")
        u, v = (x, y) if x < y else (y, x)
        if u < 0 or (is_header and v >= a):
            raise VertexOutOfRangeError(f"line {lineno}: edge ({x}, {y}) out of range")
        if (u, v) in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge ({x}, {y})")
        seen.add((u, v))
    n = a if is_header else 1 + max(v for _, v in seen)
    return Graph(n, tuple(sorted(seen)))


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _pair_order(n: int):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    try:
        raw = s.encode("ascii")
    except UnicodeEncodeError:
        raise MalformedGraph6Error(f"non-ascii byte in {s!r}") from None
    if any(byte < 63 or byte > 126 for byte in raw):
        raise MalformedGraph6Error(f"byte outside graph6 range in {s!r}")
    if raw[0] == 126:
        raise UnsupportedSizeError("multi-byte graph6 sizes (n > 62) are not supported")
    n = raw[0] - 63
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = raw[1:]
    if len(body) != expected:
        raise MalformedGraph6Error(
            f"expected {expected} data bytes for n={n}, got {len(body)}"
        )
    bits: list[int] = []
    for byte in body:
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6Error("non-zero padding bits")
    edges = [pair for pair, bit in zip(_pair_order(n), bits) if bit]
    return make_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph with n <= 62 as a single graph6 line."""
    if g.n > 62:
        raise UnsupportedSizeError(f"graph6 emission limited to n <= 62, got n={g.n}")
    present = g.edge_set()
    bits = [1 if pair in present else 0 for pair in _pair_order(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i : i + 6]:
            value = (value << 1) | bit
        out.append(chr(63 + value))
    return "".join(out)


def read_graph(path: str | Path) -> Graph:
    """Load a graph file; '.g6' selects graph6, anything else edge list."""
    path = Path(path)
    text = path.read_text(encoding="ascii")
    if path.suffix == ".g6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise MalformedGraph6Error(f"no graph6 line found in {path}")
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    path = Path(path)
    if fmt == "graph6":
        path.write_text(emit_graph6(g) + "\n", encoding="ascii")
    elif fmt == "edgelist":
        path.write_text(emit_edge_list(g), encoding="ascii")
    else:
        raise ValueError(f"unknown format {fmt!r}")
