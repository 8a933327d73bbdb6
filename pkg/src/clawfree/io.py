"""Graph text formats: graph6, edge lists and command-line graph literals."""

from __future__ import annotations

from pathlib import Path

from . import catalog
from .graph import MAX_VERTICES, Graph, GraphError, make_graph, pair_index


class ParseError(GraphError):
    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"byte {position}: "
        super().__init__(where + message)
        self.position = position
        self.line = line


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise GraphError(f"graph6 size byte covers n <= {MAX_VERTICES}")
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", position=0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside 63..126", position=pos)
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise ParseError(f"size byte gives n={n}, only n <= {MAX_VERTICES} is supported", position=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < nbytes:
        raise ParseError(f"truncated payload: expected {nbytes} bytes, got {len(payload)}", position=len(s))
    if len(payload) > nbytes:
        raise ParseError(f"{len(payload) - nbytes} trailing bytes", position=1 + nbytes)
    bits = []
    for ch in payload:
        v = ord(ch) - 63
        bits.extend((v >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", position=len(s) - 1)
    mask = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                mask |= 1 << pair_index(n, i, j)
            k += 1
    return Graph(n, mask)


def parse_edgelist(text: str) -> Graph:
    """First meaningful line is ``n``; each further line is ``u v``.
    ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected vertex count", line=lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[0]!r}", line=lineno) from None
            if not 0 <= n <= MAX_VERTICES:
                raise ParseError(f"vertex count {n} outside 0..{MAX_VERTICES}", line=lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count", line=1)
    return make_graph(n, edges)


def emit_edgelist(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{i} {j}\n" for i, j in g.edges()])


def parse_literal(text: str) -> Graph:
    """Resolve a graph literal: ``@path`` reads a file; otherwise a catalog
    name, ``g6:<graph6>``, ``edges:<edge list>``, multi-line edge-list text
    or a bare graph6 string."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {text[1:]}: {exc.strerror}") from None
    stripped = text.strip()
    if stripped.startswith("g6:"):
        return parse_graph6(stripped[3:])
    if stripped.startswith("edges:"):
        return parse_edgelist(stripped[6:].replace(";", "\n"))
    head = stripped.split(":", 1)[0]
    if stripped in catalog.NAMES or head in ("cycle", "path"):
        return catalog.named(stripped)
    if any(ch.isspace() for ch in stripped):
        return parse_edgelist(text)
    return parse_graph6(stripped)
