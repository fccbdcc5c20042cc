"""Text formats: graph6 (short form), edge lists, and comma-separated colorings."""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


def _upper_triangle(n):
    # graph6 bit order: column-major over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line (short form only, ``n <= 62``)."""
    line = text.strip()
    base = 0
    if line.startswith(_HEADER):
        line = line[len(_HEADER) :]
        base = len(_HEADER)
    if not line:
        raise ParseError("empty graph6 string", base)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside the graph6 range 63..126", base + pos)
    head = ord(line[0])
    if head == 126:
        raise ParseError("long-form graph6 (n > 62) is not supported", base)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated bit vector: expected {nbytes} data bytes, got {len(body)}", base + 1 + len(body))
    if len(body) > nbytes:
        raise ParseError(f"trailing data after {nbytes} data bytes", base + 1 + nbytes)
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = [pair for pair, bit in zip(_upper_triangle(n), bits) if bit]
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_triangle(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + g.n)]
    for start in range(0, len(bits), 6):
        val = 0
        for b in bits[start : start + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    # skip leading blank lines
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise ParseError("edge list is empty; first line must hold the vertex count", 0)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"vertex count {lines[0]!r} is not an integer", 1) from None
    if n < 0:
        raise ParseError("vertex count must be non-negative", 1)
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1} in {ln!r}", lineno)
        edges.append((u, v))
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def format_colors(colors) -> str:
    return ",".join(str(c) for c in colors)


def parse_colors(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for pos, tok in enumerate(text.split(",")):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"color {tok.strip()!r} is not an integer", pos) from None
    return tuple(out)
