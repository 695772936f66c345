"""Characterizations, constructive sequences, and bound reports.

Everything here pairs a structural statement with an executable witness:

  * order-matching labeling: the longest total dominating sequence uses all
    n vertices iff the vertices split into pairs x_i y_i with X independent
    and no y_j adjacent to an earlier x_i; extracted by peeling a maximum
    sequence (footprinting is an involution in the length-n case).
  * value 2 iff the graph is complete multipartite.
  * trees: value n iff a perfect matching exists, with an explicit
    children-before-parents sequence built from the matching.
  * trees without a strong support vertex: value >= 2(n+1)/3, equality
    exactly for the leaf-path extension family below.
  * connected k-regular graphs (k >= 3, not balanced complete bipartite):
    a two-phase greedy construction whose length meets the proven lower
    bound, with a separate bipartite variant.

All constructions re-verify what they return using the independent
checkers; failures raise InvariantViolation since they contradict proven
statements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import solver
from .errors import DomainError, InvariantViolation, ParameterError, PreconditionError
from .graph import Graph, StructuralReport, bits, induced_subgraph, structural_report
from .sequences import check_legal, greedy_extend, is_total_dominating_sequence
from .smallgraphs import canonical_form


# -- order-matching labeling (value n characterization) -----------------------


@dataclass(frozen=True)
class PairLabeling:
    """Vertex pairing certifying that the longest sequence has length n.

    Pairs are (xs[i], ys[i]); sequence is (x_1..x_k, y_k..y_1), a total
    dominating sequence using every vertex exactly once.
    """

    k: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    sequence: tuple[int, ...]


def verify_pair_labeling(g: Graph, lab: PairLabeling) -> bool:
    """Check the three labeling conditions plus the witness sequence."""
    if sorted(lab.xs + lab.ys) != list(range(g.n)) or len(lab.xs) != lab.k:
        return False
    for i in range(lab.k):
        if not g.has_edge(lab.xs[i], lab.ys[i]):
            return False
    for i in range(lab.k):
        for j in range(i + 1, lab.k):
            if g.has_edge(lab.xs[i], lab.xs[j]):
                return False  # X must be independent
    for j in range(lab.k):
        for i in range(j):
            if g.has_edge(lab.ys[j], lab.xs[i]):
                return False  # y_j may only reach x_i with i >= j
    return is_total_dominating_sequence(g, lab.sequence)


def find_pair_labeling(g: Graph, cap: int | None = None) -> PairLabeling | None:
    """The labeling above, or None when no length-n sequence exists."""
    if g.n % 2 or g.has_isolated_vertex():
        return None
    value, seq = solver.grundy_total_domination_number(g, cap)
    if value < g.n:
        return None
    return pair_labeling_from_sequence(g, seq)


def pair_labeling_from_sequence(g: Graph, seq) -> PairLabeling:
    """Peel a labeling out of a length-n total dominating sequence.

    Each entry of such a sequence footprints exactly one vertex (its pair
    partner) and the partner footprints it back; scanning the sequence and
    removing pairs as they appear yields the labeling order.
    """
    report = check_legal(g, seq, "open")
    if not (report.legal and report.complete and len(seq) == g.n):
        raise PreconditionError("need a total dominating sequence of length n")
    partner: dict[int, int] = {}
    for pos, v in enumerate(seq):
        stamped = report.new_per_step[pos]
        if len(stamped) != 1:
            raise InvariantViolation(
                "an entry of a length-n sequence footprints more than one vertex"
            )
        partner[v] = stamped[0]
    for v, u in partner.items():
        if partner.get(u) != v:
            raise InvariantViolation("footprinting is not an involution")
    xs: list[int] = []
    ys: list[int] = []
    removed: set[int] = set()
    for v in seq:
        if v in removed:
            continue
        xs.append(v)
        ys.append(partner[v])
        removed.add(v)
        removed.add(partner[v])
    lab = PairLabeling(
        g.n // 2, tuple(xs), tuple(ys), tuple(xs) + tuple(reversed(ys))
    )
    if not verify_pair_labeling(g, lab):
        raise InvariantViolation("peeled labeling failed verification")
    return lab


# -- value 2 characterization ---------------------------------------------------


def complete_multipartite_parts(g: Graph):
    """Partition into independent parts with all cross edges, or None.

    A graph is complete multipartite exactly when its complement is a
    disjoint union of cliques; the parts are those cliques.
    """
    full = g.full_mask
    co = [~g.adj[v] & full & ~(1 << v) for v in range(g.n)]
    parts = []
    unseen = full
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= co[v]
            frontier = nxt & ~comp
            comp |= nxt
        for v in bits(comp):
            if co[v] != comp & ~(1 << v):
                return None
        parts.append(tuple(bits(comp)))
        unseen &= ~comp
    return tuple(parts)


def is_complete_multipartite(g: Graph) -> bool:
    return complete_multipartite_parts(g) is not None


def is_balanced_complete_bipartite(g: Graph, k: int) -> bool:
    if g.n != 2 * k or g.edge_count() != k * k:
        return False
    parts = complete_multipartite_parts(g)
    return parts is not None and sorted(len(p) for p in parts) == [k, k]


# -- trees: perfect matchings ----------------------------------------------------


def _require_tree(g: Graph) -> StructuralReport:
    st = structural_report(g)
    if not st.is_tree:
        raise DomainError("this operation is defined for trees only")
    return st


def tree_perfect_matching(t: Graph):
    """A perfect matching of the tree, or None.  Greedy leaf pairing.

    A leaf must be matched with its unique neighbor, so pairing leaves
    inward decides everything; if a leaf's neighbor is already gone there
    is no perfect matching.
    """
    _require_tree(t)
    if t.n % 2:
        return None
    present = t.full_mask
    pairs = []
    while present:
        leaf = -1
        for v in bits(present):
            d = (t.adj[v] & present).bit_count()
            if d == 0:
                return None
            if d == 1:
                leaf = v
                break
        rest = t.adj[leaf] & present
        mate = (rest & -rest).bit_length() - 1
        pairs.append((min(leaf, mate), max(leaf, mate)))
        present &= ~((1 << leaf) | (1 << mate))
    return tuple(pairs)


def tree_matching_sequence(t: Graph, matching=None) -> tuple[int, ...]:
    """Length-n total dominating sequence of a tree with a perfect matching.

    Root the tree at vertex 0 and list children before parents; entries
    matched to their parent come first in that order, the rest follow in
    the reversed (parents-first) order.  Each early entry footprints its
    parent and each late entry footprints its matched child.
    """
    _require_tree(t)
    if matching is None:
        matching = tree_perfect_matching(t)
    if matching is None:
        raise PreconditionError("tree has no perfect matching")
    mate: dict[int, int] = {}
    for u, v in matching:
        mate[u] = v
        mate[v] = u
    if sorted(mate) != list(range(t.n)):
        raise PreconditionError("matching is not perfect")
    parent = [-1] * t.n
    order = [0]
    seen = 1
    for v in order:
        for u in bits(t.adj[v] & ~seen):
            seen |= 1 << u
            parent[u] = v
            order.append(u)
    children_first = list(reversed(order))
    front = [v for v in children_first if mate[v] == parent[v]]
    back = [v for v in order if mate[v] != parent[v]]
    seq = tuple(front + back)
    if not is_total_dominating_sequence(t, seq) or len(seq) != t.n:
        raise InvariantViolation("matching sequence failed verification")
    return seq


# -- trees: the leaf-path extension family ----------------------------------------


@dataclass(frozen=True)
class FamilyTCertificate:
    """Build trace: a single edge, then repeated leaf-path extensions.

    Each step attaches the path a-b-c to an existing support vertex v via
    the edge v-a.  Replaying the steps reproduces the tree exactly.
    """

    n: int
    base: tuple[int, int]
    steps: tuple[tuple[int, tuple[int, int, int]], ...]


def replay_family_t_certificate(cert: FamilyTCertificate) -> Graph:
    """Rebuild the tree from its trace, validating every step."""
    u0, v0 = cert.base
    edges = [(u0, v0)]
    vertices = {u0, v0}
    for v, (a, b, c) in cert.steps:
        if v not in vertices:
            raise PreconditionError(f"step attaches to missing vertex {v}")
        if len({a, b, c} & vertices) != 0 or len({a, b, c}) != 3:
            raise PreconditionError("step path vertices must be three fresh ids")
        deg = {}
        for x, y in edges:
            deg[x] = deg.get(x, 0) + 1
            deg[y] = deg.get(y, 0) + 1
        has_leaf_neighbor = any(
            deg.get(w, 0) == 1
            for x, y in edges
            for w in ((y,) if x == v else (x,) if y == v else ())
        )
        if not has_leaf_neighbor:
            raise PreconditionError(f"step attaches to non-support vertex {v}")
        edges += [(v, a), (a, b), (b, c)]
        vertices |= {a, b, c}
    if len(vertices) != cert.n or sorted(vertices) != list(range(cert.n)):
        raise PreconditionError("certificate does not label 0..n-1")
    return Graph.from_edges(cert.n, edges)


_family_t_cache: dict[int, list[tuple[Graph, FamilyTCertificate]]] = {}


def family_t_members(n: int) -> list[tuple[Graph, FamilyTCertificate]]:
    """All family members of the given order, one per isomorphism class."""
    if n < 2 or n % 3 != 2:
        return []
    if n in _family_t_cache:
        return _family_t_cache[n]
    if n == 2:
        base = Graph.from_edges(2, [(0, 1)])
        out = [(base, FamilyTCertificate(2, (0, 1), ()))]
    else:
        seen: set[bytes] = set()
        out = []
        for smaller, cert in family_t_members(n - 3):
            degs = [smaller.degree(v) for v in range(smaller.n)]
            supports = [
                v
                for v in range(smaller.n)
                if any(degs[u] == 1 for u in bits(smaller.adj[v]))
            ]
            for v in supports:
                a, b, c = smaller.n, smaller.n + 1, smaller.n + 2
                edges = smaller.edges() + [(v, a), (a, b), (b, c)]
                tree = Graph.from_edges(n, edges)
                key = canonical_form(tree.adj, n)
                if key in seen:
                    continue
                seen.add(key)
                out.append(
                    (tree, FamilyTCertificate(n, cert.base, cert.steps + ((v, (a, b, c)),)))
                )
    _family_t_cache[n] = out
    return out


def is_in_family_t(t: Graph) -> FamilyTCertificate | None:
    """Membership test by peeling leaf paths, with backtracking.

    A member larger than an edge always came from attaching a path a-b-c to
    a support vertex; peeling tries every leaf chain c-b-a-v with
    deg(b) = deg(a) = 2 whose anchor v still supports a leaf afterwards,
    and recurses on the smaller tree.  Failures are memoized by canonical
    form so overlapping candidate peels stay cheap.
    """
    _require_tree(t)
    if t.n % 3 != 2:
        return None

    dead: set[bytes] = set()

    def peel(present: int) -> list | None:
        """Returns the step list (attach order) for the sub-tree, or None."""
        size = present.bit_count()
        if size == 2:
            u = (present & -present).bit_length() - 1
            rest = present & ~(1 << u)
            v = (rest & -rest).bit_length() - 1
            if not t.has_edge(u, v):
                return None
            return [("base", (u, v))]
        key = None
        deg = {v: (t.adj[v] & present).bit_count() for v in bits(present)}
        for c in bits(present):
            if deg[c] != 1:
                continue
            b_mask = t.adj[c] & present
            b = (b_mask & -b_mask).bit_length() - 1
            if deg[b] != 2:
                continue
            a_mask = t.adj[b] & present & ~(1 << c)
            a = (a_mask & -a_mask).bit_length() - 1
            if deg[a] != 2:
                continue
            v_mask = t.adj[a] & present & ~(1 << b)
            v = (v_mask & -v_mask).bit_length() - 1
            smaller = present & ~((1 << a) | (1 << b) | (1 << c))
            # v must still have a leaf neighbor after the peel
            if not any(
                (t.adj[w] & smaller).bit_count() == 1
                for w in bits(t.adj[v] & smaller)
            ):
                continue
            if key is None:
                sub, _ = induced_subgraph(t, list(bits(present)))
                key = canonical_form(sub.adj, sub.n)
                if key in dead:
                    return None
            steps = peel(smaller)
            if steps is not None:
                steps.append((v, (a, b, c)))
                return steps
        if key is not None:
            dead.add(key)
        return None

    steps = peel(t.full_mask)
    if steps is None:
        return None
    _, base = steps[0]
    cert = FamilyTCertificate(t.n, base, tuple(steps[1:]))
    rebuilt = replay_family_t_certificate(cert)
    if rebuilt != t:
        raise InvariantViolation("family certificate replay mismatch")
    return cert


@dataclass(frozen=True)
class TreeBoundReport:
    """How a tree sits relative to the 2(n+1)/3 lower bound."""

    n: int
    strong_support_vertices: tuple[int, ...]
    applicable: bool
    bound: Fraction | None
    gamma_grt: int
    meets_bound: bool | None
    equality: bool | None
    certificate: FamilyTCertificate | None


def tree_bound_report(t: Graph, cap: int | None = None) -> TreeBoundReport:
    st = _require_tree(t)
    value, _ = solver.grundy_total_domination_number(t, cap)
    applicable = t.n >= 2 and not st.strong_support_vertices
    if not applicable:
        return TreeBoundReport(
            t.n, st.strong_support_vertices, False, None, value, None, None, None
        )
    bound = Fraction(2 * (t.n + 1), 3)
    meets = value >= bound
    equality = value == bound
    cert = is_in_family_t(t) if equality else None
    return TreeBoundReport(
        t.n,
        st.strong_support_vertices,
        True,
        bound,
        value,
        meets,
        equality,
        cert,
    )


# -- regular graphs: the two-phase greedy construction -----------------------------


@dataclass(frozen=True)
class RegularConstruction:
    sequence: tuple[int, ...]
    k: int
    bipartite: bool
    bound: Fraction
    meets_bound: bool
    seeds: tuple[tuple[int, int], ...]


def _seed_pair(g: Graph, pool) -> tuple[int, int]:
    """Non-twin pair with the most common neighbors (>= 1), lowest ids."""
    best = None
    best_common = 0
    pool = list(pool)
    for ui in range(len(pool)):
        for vi in range(ui + 1, len(pool)):
            u, v = pool[ui], pool[vi]
            if g.adj[u] == g.adj[v]:
                continue
            common = (g.adj[u] & g.adj[v]).bit_count()
            if common > best_common:
                best_common = common
                best = (u, v)
    if best is None:
        raise DomainError(
            "no admissible seed pair: every candidate pair consists of open "
            "twins or shares no neighbor"
        )
    return best


def regular_greedy_sequence(g: Graph, cap: int | None = None) -> RegularConstruction:
    """Build the bound-meeting sequence for a connected k-regular graph.

    Non-bipartite: seed with the chosen pair, then repeatedly append a
    vertex adjacent to the dominated region that footprints as few new
    vertices as possible.  Bipartite: run the same process from each side
    separately (side A dominating side B, then the reverse) and
    concatenate.  Balanced complete bipartite graphs are outside the
    construction's domain, as are k < 3 and disconnected inputs.
    """
    st = structural_report(g)
    if not st.connected:
        raise DomainError("construction needs a connected graph")
    k = st.regular_degree
    if k is None or k < 3:
        raise DomainError("construction needs a k-regular graph with k >= 3")
    if is_balanced_complete_bipartite(g, k):
        raise DomainError("balanced complete bipartite graphs are excluded")
    solver.ensure_capacity(g.n, cap)

    if not st.bipartite:
        seed = _seed_pair(g, range(g.n))
        res = greedy_extend(
            g, seed, policy="min_footprint", touch_dominated=True
        )
        if not res.complete:
            raise InvariantViolation("extension stalled on a non-bipartite input")
        seq = res.sequence
        bound = Fraction(g.n + (k + 1) // 2 - 2, k - 1)
        seeds = (seed,)
    else:
        side_a, side_b = st.bipartition
        seed_a = _seed_pair(g, side_a)
        part_a = greedy_extend(
            g,
            seed_a,
            policy="min_footprint",
            restrict_to=side_a,
            target=side_b,
            touch_dominated=True,
        )
        seed_b = _seed_pair(g, side_b)
        part_b = greedy_extend(
            g,
            seed_b,
            policy="min_footprint",
            restrict_to=side_b,
            target=side_a,
            touch_dominated=True,
        )
        if not (part_a.complete and part_b.complete):
            raise InvariantViolation("one-sided extension stalled")
        seq = part_a.sequence + part_b.sequence
        bound = Fraction(g.n + 2 * ((k + 1) // 2) - 4, k - 1)
        seeds = (seed_a, seed_b)

    if not is_total_dominating_sequence(g, seq):
        raise InvariantViolation("constructed sequence failed verification")
    return RegularConstruction(
        sequence=tuple(seq),
        k=k,
        bipartite=st.bipartite,
        bound=bound,
        meets_bound=Fraction(len(seq)) >= bound,
        seeds=seeds,
    )


# -- bound report over all invariants ------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: object
    rhs: object
    holds: bool
    tight: bool


@dataclass(frozen=True)
class BoundReport:
    invariants: solver.InvariantReport
    checks: tuple[BoundCheck, ...]

    @property
    def violations(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.holds)


def bound_report(g: Graph, cap: int | None = None) -> BoundReport:
    """Every proven relation among the invariants, evaluated on one graph."""
    rep = solver.compute_report(g, cap=cap)
    st = structural_report(g)
    v = {key: r.value for key, r in rep.results.items()}
    n = g.n
    checks: list[BoundCheck] = []

    def le(name, lhs, rhs):
        checks.append(BoundCheck(name, lhs, rhs, lhs <= rhs, lhs == rhs))

    le("gamma_t <= Gamma_t", v["gamma_t"], v["Gamma_t"])
    le("Gamma_t <= gamma_grt", v["Gamma_t"], v["gamma_grt"])
    le("gamma_t <= gamma_tg", v["gamma_t"], v["gamma_tg"])
    le("gamma_tg <= gamma_grt", v["gamma_tg"], v["gamma_grt"])
    nd = Fraction(n, g.max_degree())
    le("n/max_degree <= gamma_grt", nd, v["gamma_grt"])
    if st.connected:
        checks.append(
            BoundCheck(
                "gamma_grt = n/max_degree only for balanced complete bipartite",
                v["gamma_grt"],
                nd,
                v["gamma_grt"] != nd
                or is_balanced_complete_bipartite(g, g.max_degree()),
                v["gamma_grt"] == nd,
            )
        )
    le("gamma_grt <= n - min_degree + 1", v["gamma_grt"], n - g.min_degree() + 1)
    le("2*nu_s <= 2*nu_ss", 2 * v["nu_s"], 2 * v["nu_ss"])
    le("2*nu_ss <= gamma_grt", 2 * v["nu_ss"], v["gamma_grt"])
    le("gamma_grt <= 2*gamma_gr", v["gamma_grt"], 2 * v["gamma_gr"])
    both_three = v["gamma_t"] == 3 and v["gamma_grt"] == 3
    checks.append(
        BoundCheck("never gamma_t = gamma_grt = 3", v["gamma_t"], v["gamma_grt"], not both_three, False)
    )
    k = st.regular_degree
    if st.connected and k is not None and k >= 1:
        is_kkk = is_balanced_complete_bipartite(g, k)
        if k >= 3 and not is_kkk:
            le("regular: n/(k-1) <= gamma_grt", Fraction(n, k - 1), v["gamma_grt"])
            if k >= 5:
                checks.append(
                    BoundCheck(
                        "regular: strict above n/(k-1) for k >= 5",
                        Fraction(n, k - 1),
                        v["gamma_grt"],
                        Fraction(n, k - 1) < v["gamma_grt"],
                        False,
                    )
                )
    return BoundReport(rep, tuple(checks))
