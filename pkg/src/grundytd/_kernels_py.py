"""Pure-Python search kernels over bitmask families.

Every exact invariant in the package reduces to one of the searches below,
applied to a family of masks over a universe bitmask:

  * longest legal cover sequence   (open/closed neighborhood sequences,
                                    hyperedge covering, transversal sequences)
  * exact minimum cover            (total domination number, edge cover number)
  * maximum minimal cover          (upper total domination number)
  * two-player cover game value    (game total domination number)
  * legal cover sequence of an exact target length (interpolation witnesses)
  * maximum strong / semistrong matching

A "legal" sequence picks masks one at a time, each contributing at least one
not-yet-covered universe element, until the universe is covered.  The search
state is the covered bitmask alone.  That is sound because a mask already
used is a subset of the covered set, so it can never be legal a second time:
the covered set determines which moves remain, with no need to remember
which indices were played.  Tests cross-check this against a
memoization-free search that carries the full played-set state.

The compiled module _kernels_c mirrors this file statement for statement,
including tie-breaking (ascending index everywhere), so both engines return
identical witnesses, not just identical values.

All functions are pure; memo tables live per call, so concurrent use is safe.
"""

from __future__ import annotations


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_coverable(masks, universe):
    u = 0
    for m in masks:
        u |= m
    if u & universe != universe:
        raise ValueError("mask family does not cover the universe")


def max_cover_sequence(masks, universe):
    """Longest legal cover sequence.

    Returns (length, sequence of mask indices).  Requires the masks to
    jointly cover the universe, which guarantees every maximal legal
    sequence is complete (covers everything): whenever some element is
    uncovered, any mask containing it is a legal move.
    """
    masks = [m & universe for m in masks]
    _check_coverable(masks, universe)
    if universe == 0:
        return 0, []

    memo: dict[int, int] = {}

    def longest(covered: int) -> int:
        if covered == universe:
            return 0
        val = memo.get(covered)
        if val is None:
            best = 0
            for m in masks:
                if m & ~covered:
                    r = 1 + longest(covered | m)
                    if r > best:
                        best = r
            memo[covered] = val = best
        return val

    total = longest(0)

    # Walk the memo table back down, taking the smallest index that still
    # achieves the optimum at each step.  Every child of a visited state was
    # itself visited, so the lookups always hit.
    seq: list[int] = []
    covered = 0
    need = total
    while need:
        for i, m in enumerate(masks):
            if m & ~covered:
                child = covered | m
                child_val = 0 if child == universe else memo[child]
                if child_val == need - 1:
                    seq.append(i)
                    covered = child
                    need -= 1
                    break
        else:
            raise RuntimeError("witness reconstruction failed")
    return total, seq


def sequence_of_length(masks, universe, length: int):
    """A legal complete cover sequence of exactly the given length, or None."""
    masks = [m & universe for m in masks]
    _check_coverable(masks, universe)
    if length < 0:
        return None
    if universe == 0:
        return [] if length == 0 else None

    memo: dict[tuple[int, int], bool] = {}

    def feasible(covered: int, r: int) -> bool:
        if covered == universe:
            return r == 0
        if r <= 0:
            return False
        remaining = (universe & ~covered).bit_count()
        if r > remaining:
            return False  # each step covers at least one new element
        key = (covered, r)
        val = memo.get(key)
        if val is None:
            val = False
            for m in masks:
                if m & ~covered and feasible(covered | m, r - 1):
                    val = True
                    break
            memo[key] = val
        return val

    if not feasible(0, length):
        return None
    seq: list[int] = []
    covered = 0
    r = length
    while r:
        for i, m in enumerate(masks):
            if m & ~covered and feasible(covered | m, r - 1):
                seq.append(i)
                covered |= m
                r -= 1
                break
    return seq


def game_cover_value(masks, universe):
    """Minimax length of the cover game; the minimizer moves first.

    Both players extend one legal sequence; the minimizer wants it to
    complete in as few moves as possible, the maximizer in as many.
    Returns (value, principal line of mask indices).
    """
    masks = [m & universe for m in masks]
    _check_coverable(masks, universe)
    if universe == 0:
        return 0, []

    memo_min: dict[int, int] = {}
    memo_max: dict[int, int] = {}

    def value(covered: int, minimizer: bool) -> int:
        if covered == universe:
            return 0
        memo = memo_min if minimizer else memo_max
        val = memo.get(covered)
        if val is None:
            best = -1
            for m in masks:
                if m & ~covered:
                    r = 1 + value(covered | m, not minimizer)
                    if best < 0 or (r < best if minimizer else r > best):
                        best = r
            memo[covered] = val = best
        return val

    total = value(0, True)

    trace: list[int] = []
    covered = 0
    minimizer = True
    need = total
    while covered != universe:
        # The mover alternates, so the child's value sits in the other table.
        child_memo = memo_max if minimizer else memo_min
        for i, m in enumerate(masks):
            if m & ~covered:
                child = covered | m
                child_val = 0 if child == universe else child_memo[child]
                if 1 + child_val == need:
                    trace.append(i)
                    covered = child
                    need -= 1
                    minimizer = not minimizer
                    break
        else:
            raise RuntimeError("principal line reconstruction failed")
    return total, trace


def min_cover(masks, universe):
    """Exact minimum number of masks covering the universe.

    Branch and bound on the uncovered element with the fewest candidate
    masks.  Returns (size, sorted mask indices).
    """
    masks = [m & universe for m in masks]
    _check_coverable(masks, universe)
    if universe == 0:
        return 0, []
    m_count = len(masks)

    cover_of: dict[int, list[int]] = {}
    for e in _bits(universe):
        cover_of[e] = [i for i in range(m_count) if (masks[i] >> e) & 1]
    max_mask = max(m.bit_count() for m in masks)

    # Greedy warm start tightens the bound before the exact search begins.
    covered = 0
    greedy: list[int] = []
    while covered != universe:
        pick = -1
        gain = 0
        for i in range(m_count):
            g = (masks[i] & ~covered).bit_count()
            if g > gain:
                gain = g
                pick = i
        greedy.append(pick)
        covered |= masks[pick]

    best_size = len(greedy)
    best_sel = list(greedy)

    def dfs(covered: int, chosen: list[int]):
        nonlocal best_size, best_sel
        if covered == universe:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_sel = list(chosen)
            return
        remaining = (universe & ~covered).bit_count()
        lower = (remaining + max_mask - 1) // max_mask
        if len(chosen) + lower >= best_size:
            return
        branch_e = -1
        branch_width = m_count + 1
        for e in _bits(universe & ~covered):
            w = len(cover_of[e])
            if w < branch_width:
                branch_width = w
                branch_e = e
        for i in cover_of[branch_e]:
            chosen.append(i)
            dfs(covered | masks[i], chosen)
            chosen.pop()

    dfs(0, [])
    return best_size, sorted(best_sel)


def max_minimal_cover(masks, universe):
    """Largest minimal cover: every chosen mask keeps a private element.

    Include/exclude search over indices in order.  A chosen mask's private
    set only shrinks as more masks join, so a branch dies as soon as any
    private set empties.  Returns (size, sorted mask indices).
    """
    masks = [m & universe for m in masks]
    _check_coverable(masks, universe)
    if universe == 0:
        return 0, []
    m_count = len(masks)

    suffix = [0] * (m_count + 1)
    for i in range(m_count - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    best_size = -1
    best_sel: list[int] | None = None

    def dfs(i: int, covered: int, chosen: list[int], privates: list[int]):
        nonlocal best_size, best_sel
        if (covered | suffix[i]) != universe:
            return
        if len(chosen) + (m_count - i) <= best_size:
            return
        if i == m_count:
            # privates all nonempty by construction, so this cover is minimal
            best_size = len(chosen)
            best_sel = list(chosen)
            return
        new_private = masks[i] & ~covered
        if new_private:
            updated = [p & ~masks[i] for p in privates]
            if all(updated):
                dfs(i + 1, covered | masks[i], chosen + [i], updated + [new_private])
        dfs(i + 1, covered, chosen, privates)

    dfs(0, 0, [], [])
    if best_sel is None:
        raise RuntimeError("no minimal cover found for coverable universe")
    return best_size, sorted(best_sel)


def max_matching(adj, n: int, semistrong: bool):
    """Maximum strong (induced) or semistrong matching.

    adj is the bitmask adjacency of a graph on n vertices.  A matching M is
    strong when every matched vertex has degree exactly 1 inside the
    subgraph induced by V(M); semistrong relaxes that to one endpoint per
    matching edge.  Both properties are inherited by subsets, so the search
    only ever extends valid partial matchings.  Returns (size, edge list).
    """
    edges: list[tuple[int, int]] = []
    for u in range(n):
        for v in _bits(adj[u] >> (u + 1)):
            edges.append((u, u + 1 + v))
    m = len(edges)

    best_size = 0
    best_m: list[tuple[int, int]] = []

    def valid(pairs, vmask: int) -> bool:
        for a, b in pairs:
            da = (adj[a] & vmask).bit_count()
            db = (adj[b] & vmask).bit_count()
            if semistrong:
                if da != 1 and db != 1:
                    return False
            elif da != 1 or db != 1:
                return False
        return True

    def dfs(start: int, pairs: list[tuple[int, int]], vmask: int):
        nonlocal best_size, best_m
        if len(pairs) > best_size:
            best_size = len(pairs)
            best_m = list(pairs)
        if len(pairs) + (n - vmask.bit_count()) // 2 <= best_size:
            return
        for idx in range(start, m):
            u, v = edges[idx]
            if (vmask >> u) & 1 or (vmask >> v) & 1:
                continue
            nmask = vmask | (1 << u) | (1 << v)
            pairs.append((u, v))
            if valid(pairs, nmask):
                dfs(idx + 1, pairs, nmask)
            pairs.pop()
        return

    dfs(0, [], 0)
    return best_size, best_m
