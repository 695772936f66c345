"""Text formats: graph6, plain edge lists, hypergraph lists, sequences.

graph6 is the compact printable encoding of an undirected graph: a length
header followed by the upper triangle of the adjacency matrix in column
order, packed six bits per printable character (offset 63).  The edge-list
and hypergraph formats are line oriented with '#' comments; parse errors
carry 1-based line numbers.
"""

from __future__ import annotations

from .errors import ParameterError, ParseError
from .graph import Graph

# -- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = [chr(126), chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        raise ParameterError("graph6 encoding supported up to n = 258047")
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def graph_from_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", line)
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError("graph6 character out of range", line)
    if data[0] == 63:
        if len(data) < 4:
            raise ParseError("truncated graph6 length header", line)
        if data[1] == 63:
            raise ParseError("graph6 orders beyond 258047 not supported", line)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n < 1:
        raise ParseError("graph6 order must be >= 1", line)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} characters, expected {need}", line
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- edge list ---------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            yield lineno, stripped


def _ints(parts, lineno: int) -> list[int]:
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"expected an integer, got {p!r}", lineno) from None
    return out


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> Graph:
    it = _content_lines(text)
    try:
        lineno, head = next(it)
    except StopIteration:
        raise ParseError("empty edge list input") from None
    parts = head.split()
    if len(parts) != 2:
        raise ParseError("header must be '<order> <edge count>'", lineno)
    n, m = _ints(parts, lineno)
    edges = []
    for lineno, line in it:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge lines must be '<u> <v>'", lineno)
        u, v = _ints(parts, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) out of range for order {n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


# -- hypergraph --------------------------------------------------------------


def hypergraph_to_text(h) -> str:
    lines = [f"{h.n_vertices} {len(h.edges)}"]
    for mask in h.edges:
        members = []
        m = mask
        while m:
            low = m & -m
            members.append(str(low.bit_length() - 1))
            m ^= low
        lines.append(" ".join(members))
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str):
    from .hypergraph import Hypergraph

    it = _content_lines(text)
    try:
        lineno, head = next(it)
    except StopIteration:
        raise ParseError("empty hypergraph input") from None
    parts = head.split()
    if len(parts) != 2:
        raise ParseError("header must be '<ground size> <edge count>'", lineno)
    nx, ne = _ints(parts, lineno)
    edge_lists = []
    for lineno, line in it:
        members = _ints(line.split(), lineno)
        if not members:
            raise ParseError("hyperedge line is empty", lineno)
        for x in members:
            if not (0 <= x < nx):
                raise ParseError(f"vertex {x} out of range for ground size {nx}", lineno)
        edge_lists.append(members)
    if len(edge_lists) != ne:
        raise ParseError(f"header promised {ne} hyperedges, found {len(edge_lists)}")
    return Hypergraph.from_edge_lists(nx, edge_lists)


# -- sequences ---------------------------------------------------------------


def sequence_to_text(seq) -> str:
    return " ".join(str(v) for v in seq)


def sequences_from_text(text: str) -> list[list[int]]:
    """One whitespace-separated sequence per non-comment line."""
    out = []
    for lineno, line in _content_lines(text):
        out.append(_ints(line.split(), lineno))
    return out
