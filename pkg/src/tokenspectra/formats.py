"""graph6 and plain edge-list serialization.

graph6 (McKay's standard encoding): every byte is 63 + a 6-bit chunk.
The header encodes n in 1, 4 or 8 bytes; the body is the upper triangle
of the adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
big-endian within each chunk and zero-padded to a multiple of 6 bits.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
_MAX_N = (1 << 36) - 1


def _encode_n(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise ParseError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    n = g.n
    bits = [(i + 1, j + 1) in g.edges for j in range(1, n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for c in range(0, len(bits), 6):
        val = 0
        for b in bits[c:c + 6]:
            val = (val << 1) | b
        body.append(chr(63 + val))
    return _encode_n(n) + "".join(body)


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.strip()
    start = 0
    if line.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    data = []
    for off in range(start, len(line)):
        c = ord(line[off])
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {line[off]!r}", offset=off)
        data.append(c - 63)
    if not data:
        raise ParseError("empty graph6 string", offset=start)

    pos = 0
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 8-byte graph6 header", offset=start + len(data))
        n, pos = 0, 8
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte graph6 header", offset=start + len(data))
        n, pos = 0, 4
        for d in data[1:4]:
            n = (n << 6) | d
    if n > _MAX_N:
        raise ParseError(f"unsupported vertex count {n}", offset=start)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[pos:]
    if len(body) != nbytes:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}",
                         offset=start + pos + min(len(body), nbytes))
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (body[bit // 6] >> (5 - bit % 6)) & 1:
                edges.append((i + 1, j + 1))
            bit += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero graph6 padding bits", offset=start + pos + nbytes - 1)
    return Graph(n, frozenset(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by m lines ``u v`` (1 <= u < v <= n); '#' starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("edge list is empty")

    def ints(lineno, toks):
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {' '.join(toks)!r}")
        try:
            return int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {' '.join(toks)!r}") from None

    n, m = ints(*rows[0])
    if n < 0 or m < 0:
        raise ParseError(f"line {rows[0][0]}: negative counts")
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = set()
    for lineno, toks in rows[1:]:
        u, v = ints(lineno, toks)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {lineno}: vertex out of range [1, {n}]")
        if u >= v:
            raise ParseError(f"line {lineno}: edge ({u}, {v}) must satisfy u < v")
        if (u, v) in edges:
            raise ParseError(f"line {lineno}: duplicate edge ({u}, {v})")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graphs(text: str) -> list[Graph]:
    """One graph if ``text`` is an edge list, else one per non-blank graph6 line."""
    first = next((ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
    toks = first.split("#", 1)[0].split()
    if len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks):
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
