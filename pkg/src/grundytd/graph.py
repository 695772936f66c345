"""Undirected graphs as bitset adjacency rows, plus the named families.

Vertices are 0..n-1.  The adjacency of vertex v is a single int whose bit u
is set iff uv is an edge; Python ints grow as needed, so nothing here caps n
(the exact solvers apply their own size cap).  Graphs are immutable and
hashable on (n, adjacency); labels are cosmetic and ignored by equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ParameterError


def _popcount(x: int) -> int:
    return x.bit_count()


def bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"graph order must be >= 1, got {self.n}")
        if len(self.adj) != self.n:
            raise ParameterError(
                f"adjacency has {len(self.adj)} rows for order {self.n}"
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ParameterError(f"adjacency row of {v} mentions vertices >= n")
            if (row >> v) & 1:
                raise ParameterError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ParameterError("labels length differs from order")

    # Equality is structural: same order, same adjacency, labels ignored.
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    @classmethod
    def from_edges(
        cls, n: int, edges, labels: tuple[str, ...] | None = None
    ) -> "Graph":
        if n < 1:
            raise ParameterError(f"graph order must be >= 1, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), labels)

    # -- basic accessors ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def open_mask(self, v: int) -> int:
        """Bitmask of the open neighborhood N(v)."""
        return self.adj[v]

    def closed_mask(self, v: int) -> int:
        """Bitmask of the closed neighborhood N[v] = N(v) + v itself."""
        return self.adj[v] | (1 << v)

    def open_masks(self) -> list[int]:
        return list(self.adj)

    def closed_masks(self) -> list[int]:
        return [self.adj[v] | (1 << v) for v in range(self.n)]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def min_degree(self) -> int:
        return min(_popcount(row) for row in self.adj)

    def max_degree(self) -> int:
        return max(_popcount(row) for row in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(_popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adj)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


# -- structural predicates ------------------------------------------------


@dataclass(frozen=True)
class StructuralReport:
    """Connectivity, bipartition, regularity, twins, supports, treeness."""

    connected: bool
    bipartite: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    regular_degree: int | None
    open_twin_pairs: tuple[tuple[int, int], ...]
    strong_support_vertices: tuple[int, ...]
    is_tree: bool

    @property
    def open_twin_free(self) -> bool:
        return not self.open_twin_pairs


def structural_report(g: Graph) -> StructuralReport:
    """Compute the structural facts the characterizations branch on."""
    n = g.n
    # BFS for connectivity and 2-coloring at once.  Isolated vertices get
    # color 0; a graph is bipartite iff no edge joins equal colors.
    color = [-1] * n
    connected = True
    bipartite = True
    for start in range(n):
        if color[start] != -1:
            continue
        if start != 0:
            connected = False
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in bits(g.adj[u]):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    bipartite = False
    partition = None
    if bipartite:
        side0 = tuple(v for v in range(n) if color[v] == 0)
        side1 = tuple(v for v in range(n) if color[v] == 1)
        partition = (side0, side1)

    degs = [g.degree(v) for v in range(n)]
    regular = degs[0] if all(d == degs[0] for d in degs) else None

    twins = tuple(
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if g.adj[u] == g.adj[v]
    )

    strong = tuple(
        v
        for v in range(n)
        if sum(1 for u in bits(g.adj[v]) if degs[u] == 1) >= 2
    )

    is_tree = connected and g.edge_count() == n - 1
    return StructuralReport(
        connected=connected,
        bipartite=bipartite,
        bipartition=partition,
        regular_degree=regular,
        open_twin_pairs=twins,
        strong_support_vertices=strong,
        is_tree=is_tree,
    )


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertex set.

    Returns (subgraph, kept) where kept[i] is the original id of new vertex i
    (ascending original order).
    """
    kept = tuple(sorted(set(vertices)))
    if not kept:
        raise ParameterError("induced subgraph needs at least one vertex")
    if kept[0] < 0 or kept[-1] >= g.n:
        raise ParameterError("vertex out of range for induced subgraph")
    index = {orig: i for i, orig in enumerate(kept)}
    rows = []
    for orig in kept:
        row = 0
        for u in bits(g.adj[orig]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    labels = tuple(g.label(v) for v in kept) if g.labels is not None else None
    return Graph(len(kept), tuple(rows), labels), kept


# -- named families --------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 is the center."""
    if leaves < 1:
        raise ParameterError("star needs at least one leaf")
    labels = ("c",) + tuple(f"l{i}" for i in range(1, leaves + 1))
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], labels)


def complete_multipartite(sizes) -> Graph:
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ParameterError("every part must have size >= 1")
    n = sum(sizes)
    part_of = []
    labels = []
    for p, s in enumerate(sizes):
        part_of.extend([p] * s)
        labels.extend(f"p{p}.{i}" for i in range(s))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return Graph.from_edges(n, edges, tuple(labels))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def k_kk(k: int) -> Graph:
    """The balanced complete bipartite graph on k+k vertices."""
    if k < 1:
        raise ParameterError("k_kk needs k >= 1")
    return complete_bipartite(k, k)


def gm_graph(m: int, block_size: int = 1) -> Graph:
    """Block construction on m disjoint block pairs X_i, Y_i.

    A vertex of X_i is adjacent to a vertex of Y_j iff i != j; there are no
    other edges.  All blocks share the given size, so the result is
    (m-1)*block_size-regular on 2*m*block_size vertices.  gm_graph(4) is
    the cubic 8-vertex member, gm_graph(3, 2) the 4-regular 12-vertex one.
    """
    if m < 3:
        raise ParameterError("gm_graph needs m >= 3")
    if block_size < 1:
        raise ParameterError("block size must be >= 1")
    b = block_size
    n = 2 * m * b
    # X_i occupies [2*i*b, 2*i*b + b), Y_i the next b ids.
    labels = []
    for i in range(m):
        labels.extend(f"x{i}.{t}" for t in range(b))
        labels.extend(f"y{i}.{t}" for t in range(b))
    edges = []
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            for s in range(b):
                for t in range(b):
                    edges.append((2 * i * b + s, 2 * j * b + b + t))
    return Graph.from_edges(n, edges, tuple(labels))


def subset_bipartite(k: int) -> Graph:
    """Bipartite membership graph: 2k-1 ground elements vs their k-subsets.

    Side A is the ground set (ids 0..2k-2); side B has one vertex per
    k-element subset, adjacent to exactly its members.
    """
    if k < 2:
        raise ParameterError("subset_bipartite needs k >= 2")
    ground = 2 * k - 1
    subsets = list(itertools.combinations(range(ground), k))
    labels = [f"a{i}" for i in range(ground)]
    labels += ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    edges = []
    for j, s in enumerate(subsets):
        for x in s:
            edges.append((x, ground + j))
    return Graph.from_edges(ground + len(subsets), edges, tuple(labels))


def spider(k: int) -> Graph:
    """k triangles sharing one common vertex (vertex 0); order 2k+1."""
    if k < 1:
        raise ParameterError("spider needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def tree_from_edges(n: int, edges) -> Graph:
    g = Graph.from_edges(n, edges)
    if g.edge_count() != n - 1 or not is_connected(g):
        raise ParameterError("edge list does not describe a tree")
    return g


def petersen() -> Graph:
    """The 3-regular graph on the 2-subsets of a 5-set, disjointness edges."""
    pairs = list(itertools.combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [
        (idx[p], idx[q])
        for p, q in itertools.combinations(pairs, 2)
        if not set(p) & set(q)
    ]
    labels = tuple("{%d%d}" % p for p in pairs)
    return Graph.from_edges(10, edges, labels)


# -- family spec strings (shared by the CLI and tests) ----------------------

_FAMILY_ALIASES = {
    "multipartite": "complete_multipartite",
    "gm": "family_gm",
    "gk": "subset_bipartite_gk",
    "kkk": "k_kk",
}


def build_family(spec: str) -> Graph:
    """Build a graph from a compact family spec like ``path:5``.

    Grammar: ``name[:params]`` with name one of path, cycle, complete, star,
    complete_multipartite (params a,b,...), k_kk, family_gm (m or m:blocksize),
    subset_bipartite_gk, spider, tree_from_edges (n:u-v,u-v,...), petersen.
    """
    head, _, rest = spec.partition(":")
    name = _FAMILY_ALIASES.get(head.strip().lower(), head.strip().lower())
    try:
        if name == "path":
            return path(int(rest))
        if name == "cycle":
            return cycle(int(rest))
        if name == "complete":
            return complete(int(rest))
        if name == "star":
            return star(int(rest))
        if name == "complete_multipartite":
            return complete_multipartite([int(x) for x in rest.split(",")])
        if name == "k_kk":
            return k_kk(int(rest))
        if name == "family_gm":
            parts = rest.split(":")
            m = int(parts[0])
            block = int(parts[1]) if len(parts) > 1 else 1
            return gm_graph(m, block)
        if name == "subset_bipartite_gk":
            return subset_bipartite(int(rest))
        if name == "spider":
            return spider(int(rest))
        if name == "tree_from_edges":
            head2, _, tail = rest.partition(":")
            edges = []
            for token in tail.split(","):
                a, _, b = token.partition("-")
                edges.append((int(a), int(b)))
            return tree_from_edges(int(head2), edges)
        if name == "petersen":
            return petersen()
    except ParameterError:
        raise
    except ValueError as exc:
        raise ParameterError(f"bad family spec {spec!r}: {exc}") from None
    raise ParameterError(f"unknown family {head!r}")
