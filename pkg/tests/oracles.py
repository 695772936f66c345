"""Slow reference implementations used to pin expected values.

Everything here favors directness over speed: plain Python sets, explicit
sequence DFS, no memoization, no pruning beyond the definitions themselves.
The production solvers must agree with these on every input small enough
to sweep.
"""

from itertools import combinations


def neighborhoods(g, mode):
    """Open or closed neighborhoods as a list of sets."""
    out = []
    for v in range(g.n):
        s = {u for u in range(g.n) if g.adj[v] >> u & 1}
        if mode == "closed":
            s.add(v)
        out.append(s)
    return out


def is_legal_sequence(g, seq, mode):
    if len(set(seq)) != len(seq):
        return False
    hoods = neighborhoods(g, mode)
    covered = set()
    for v in seq:
        if hoods[v] <= covered:
            return False
        covered |= hoods[v]
    return True


def is_complete_sequence(g, seq, mode):
    hoods = neighborhoods(g, mode)
    covered = set()
    for v in seq:
        covered |= hoods[v]
    return covered == set(range(g.n))


def longest_sequence(g, mode):
    """Exhaustive DFS over all legal sequences; no state merging at all.

    Returns (length, witness) where the witness is the first maximum-length
    complete sequence in depth-first lexicographic order, or (0, ()) when no
    complete sequence exists (isolated vertex in open mode).
    """
    hoods = neighborhoods(g, mode)
    full = set(range(g.n))
    best = [-1, ()]

    def walk(seq, covered):
        if covered == full and len(seq) > best[0]:
            best[0] = len(seq)
            best[1] = tuple(seq)
        for v in range(g.n):
            if v in seq:
                continue
            if hoods[v] <= covered:
                continue
            seq.append(v)
            walk(seq, covered | hoods[v])
            seq.pop()

    walk([], set())
    if best[0] < 0:
        return 0, ()
    return best[0], best[1]


def sequence_lengths(g, mode):
    """Set of lengths of complete legal sequences, by the same full DFS."""
    hoods = neighborhoods(g, mode)
    full = set(range(g.n))
    found = set()

    def walk(seq, covered):
        if covered == full:
            found.add(len(seq))
        for v in range(g.n):
            if v in seq:
                continue
            if hoods[v] <= covered:
                continue
            seq.append(v)
            walk(seq, covered | hoods[v])
            seq.pop()

    walk([], set())
    return found


def game_value(g):
    """Dominator/Staller game by bare minimax on the full game tree."""
    hoods = neighborhoods(g, "open")
    full = set(range(g.n))

    def moves(covered):
        return [v for v in range(g.n) if not hoods[v] <= covered]

    def play(covered, staller):
        if covered == full:
            return 0
        opts = [play(covered | hoods[v], not staller) for v in moves(covered)]
        return 1 + (max(opts) if staller else min(opts))

    if any(not hoods[v] for v in range(g.n)):
        raise ValueError("isolated vertex")
    return play(set(), False)


def total_dominating_sets(g):
    hoods = neighborhoods(g, "open")
    full = set(range(g.n))
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if set().union(*(hoods[v] for v in combo), set()) == full:
                yield set(combo)


def total_domination_number(g):
    for s in total_dominating_sets(g):
        return len(s)
    raise ValueError("no total dominating set")


def upper_total_domination(g):
    hoods = neighborhoods(g, "open")
    full = set(range(g.n))

    def dominates(s):
        return set().union(*(hoods[v] for v in s), set()) == full

    best = -1
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            s = set(combo)
            if not dominates(s):
                continue
            if all(not dominates(s - {v}) for v in s):
                best = max(best, k)
    if best < 0:
        raise ValueError("no total dominating set")
    return best


def edges_of(g):
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1]


def _matching_ok(g, matching, semistrong):
    verts = {x for e in matching for x in e}

    def induced_degree(x):
        return sum(1 for y in verts if y != x and g.adj[x] >> y & 1)

    for u, v in matching:
        strong_u = induced_degree(u) == 1
        strong_v = induced_degree(v) == 1
        if semistrong:
            if not (strong_u or strong_v):
                return False
        else:
            if not (strong_u and strong_v):
                return False
    return True


def max_special_matching(g, semistrong):
    """Largest strong (induced) or semistrong matching by edge-subset DFS.

    Both properties are closed under deleting edges, so partial matchings
    that already fail can be pruned without losing any maximum.
    """
    edges = edges_of(g)
    best = [0]

    def walk(start, matching, used):
        if len(matching) > best[0]:
            best[0] = len(matching)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            matching.append((u, v))
            if _matching_ok(g, matching, semistrong):
                walk(i + 1, matching, used | {u, v})
            matching.pop()

    walk(0, [], set())
    return best[0]


def hyper_longest_cover(h):
    """Grundy covering number by full DFS over hyperedge sequences."""
    members = [set(h.edge_members(i)) for i in range(len(h.edges))]
    full = set(range(h.n_vertices))
    best = [-1, ()]

    def walk(seq, covered):
        if covered == full and len(seq) > best[0]:
            best[0] = len(seq)
            best[1] = tuple(seq)
        for i in range(len(members)):
            if i in seq or members[i] <= covered:
                continue
            seq.append(i)
            walk(seq, covered | members[i])
            seq.pop()

    walk([], set())
    if best[0] < 0:
        return 0, ()
    return best[0], best[1]


def hyper_longest_transversal(h):
    """Grundy transversal number by full DFS over vertex sequences."""
    members = [set(h.edge_members(i)) for i in range(len(h.edges))]
    all_edges = set(range(len(members)))
    best = [-1, ()]

    def hit_by(v):
        return {i for i in all_edges if v in members[i]}

    def walk(seq, hit):
        if hit == all_edges and len(seq) > best[0]:
            best[0] = len(seq)
            best[1] = tuple(seq)
        for v in range(h.n_vertices):
            if v in seq or hit_by(v) <= hit:
                continue
            seq.append(v)
            walk(seq, hit | hit_by(v))
            seq.pop()

    walk([], set())
    if best[0] < 0:
        return 0, ()
    return best[0], best[1]


def hyper_cover_number(h):
    members = [set(h.edge_members(i)) for i in range(len(h.edges))]
    full = set(range(h.n_vertices))
    for k in range(len(members) + 1):
        for combo in combinations(range(len(members)), k):
            if set().union(*(members[i] for i in combo), set()) == full:
                return k
    raise ValueError("edges do not cover the ground set")
