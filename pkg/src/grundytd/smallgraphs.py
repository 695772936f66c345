"""Small-graph enumeration, canonical forms, and random instance generators.

The sweeps need every connected graph up to order 8 and every connected
cubic graph up to order 12, one representative per isomorphism class.
Isomorph rejection uses a canonical form computed by color refinement plus
individualization: refine the coloring to a fixed point, split the first
non-singleton color class on each of its vertices in turn, and take the
minimum adjacency bitstring over the discrete leaves.  No pruning is done;
at these orders the search trees stay tiny except for the most symmetric
graphs, which are rare.  The enumeration counts are pinned to published
values in the tests, which is what certifies all of this machinery.
"""

from __future__ import annotations

import itertools
import random

from .graph import Graph, bits

# -- canonical form ----------------------------------------------------------


def _refine(adj, n: int, colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            around = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(around)))
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def canonical_form(adj, n: int) -> bytes:
    """Isomorphism-invariant certificate of a graph given as bitmask rows."""
    if n == 1:
        return (1).to_bytes(2, "big")
    best: int | None = None

    def leaf(colors: list[int]):
        nonlocal best
        order = sorted(range(n), key=colors.__getitem__)
        acc = 0
        for j in range(1, n):
            row = adj[order[j]]
            for i in range(j):
                acc = (acc << 1) | ((row >> order[i]) & 1)
        if best is None or acc < best:
            best = acc

    def search(colors: list[int]):
        colors = _refine(adj, n, colors)
        cell = None
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        for c in range(len(by_color)):
            if len(by_color[c]) > 1:
                cell = by_color[c]
                break
        if cell is None:
            leaf(colors)
            return
        for v in cell:
            branched = list(colors)
            branched[v] = -1  # unique new color; refinement renumbers
            search(branched)

    search([0] * n)
    nbytes = max(1, (n * (n - 1) // 2 + 7) // 8)
    return n.to_bytes(2, "big") + best.to_bytes(nbytes, "big")


def graph_canonical_form(g: Graph) -> bytes:
    return canonical_form(g.adj, g.n)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g.adj, g.n) == canonical_form(h.adj, h.n)


# -- exhaustive enumeration ----------------------------------------------------

_connected_cache: dict[int, list[Graph]] = {}


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs of the given order, one per isomorphism class.

    Level augmentation: every connected graph on k vertices has a vertex
    whose removal leaves it connected, so attaching one new vertex with
    every nonempty neighborhood to every connected (k-1)-vertex graph and
    deduplicating by canonical form reaches every class.
    """
    if n < 1:
        return []
    if n in _connected_cache:
        return _connected_cache[n]
    if n == 1:
        result = [Graph(1, (0,))]
    else:
        result = []
        seen: set[bytes] = set()
        for parent in connected_graphs(n - 1):
            rows_base = [row for row in parent.adj]
            for nb in range(1, 1 << (n - 1)):
                rows = rows_base + [nb]
                m = nb
                while m:
                    low = m & -m
                    rows[low.bit_length() - 1] |= 1 << (n - 1)
                    m ^= low
                cert = canonical_form(rows, n)
                if cert not in seen:
                    seen.add(cert)
                    result.append(Graph(n, tuple(rows)))
        result.sort(key=lambda g: (g.edge_count(), g.adj))
    _connected_cache[n] = result
    return result


def connected_graphs_upto(n: int):
    for k in range(1, n + 1):
        yield from connected_graphs(k)


_cubic_cache: dict[int, list[Graph]] = {}


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected 3-regular graphs of the given (even) order.

    Depth-first completion: repeatedly take the smallest vertex u with
    degree < 3 and branch over every way to finish its neighborhood with
    already-introduced deficient vertices plus a block of fresh ones (fresh
    ids are always taken in increasing order, so each labeled graph is
    produced along exactly one path).  Branches whose component saturates
    before absorbing all n vertices cannot end connected and are cut.
    Leaves are deduplicated by canonical form.
    """
    if n < 4 or n % 2:
        return []
    if n in _cubic_cache:
        return _cubic_cache[n]

    seen: set[bytes] = set()
    result: list[Graph] = []

    def component_saturated(rows, start) -> bool:
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= nxt
        return all(rows[v].bit_count() == 3 for v in bits(comp)) and (
            comp.bit_count() < n
        )

    def finish(rows, touched: int):
        u = -1
        for v in range(touched):
            if rows[v].bit_count() < 3:
                u = v
                break
        if u < 0:
            if touched < n:
                return  # all introduced vertices saturated, rest unreachable
            cert = canonical_form(rows, n)
            if cert not in seen:
                seen.add(cert)
                result.append(Graph(n, tuple(rows)))
            return
        missing = 3 - rows[u].bit_count()
        olds = [
            w
            for w in range(u + 1, touched)
            if rows[w].bit_count() < 3 and not (rows[u] >> w) & 1
        ]
        for fresh in range(min(missing, n - touched) + 1):
            take_old = missing - fresh
            if take_old > len(olds):
                continue
            for chosen in itertools.combinations(olds, take_old):
                new_rows = list(rows)
                ok = True
                for w in chosen:
                    new_rows[u] |= 1 << w
                    new_rows[w] |= 1 << u
                for t in range(fresh):
                    w = touched + t
                    new_rows[u] |= 1 << w
                    new_rows[w] |= 1 << u
                if component_saturated(new_rows, u):
                    ok = False
                if ok:
                    finish(new_rows, touched + fresh)

    start = [0] * n
    finish(start, 1)
    result.sort(key=lambda g: g.adj)
    _cubic_cache[n] = result
    return result


# -- random instances ----------------------------------------------------------


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labeled tree via a random parent code."""
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in code:
        deg[x] += 1
    import heapq

    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random tree plus each extra edge independently with probability p."""
    tree = random_tree(n, rng)
    rows = list(tree.adj)
    for u in range(n):
        for v in range(u + 1, n):
            if not (rows[u] >> v) & 1 and rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def random_hypergraph(rng: random.Random, max_ground: int = 6, max_edges: int = 6):
    """Random hypergraph with no isolated ground vertices, edges nonempty."""
    from .hypergraph import Hypergraph

    nx = rng.randint(2, max_ground)
    ne = rng.randint(1, max_edges)
    masks = []
    for _ in range(ne):
        m = rng.getrandbits(nx)
        if m == 0:
            m = 1 << rng.randrange(nx)
        masks.append(m)
    covered = 0
    for m in masks:
        covered |= m
    for x in range(nx):
        if not (covered >> x) & 1:
            i = rng.randrange(ne)
            masks[i] |= 1 << x
    return Hypergraph(nx, tuple(masks))
