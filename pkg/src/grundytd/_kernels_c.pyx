# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirrors of the pure-Python search kernels.

Same contract as _kernels_py: identical values AND identical witnesses,
because every loop visits candidates in the same ascending order and every
comparison uses the same strictness.  Universes that fit in a machine word
with a contiguous bit range run through C recursions with dense memo
tables; anything larger is delegated to _kernels_py outright, so the two
modules can never disagree.

The one representational difference: the fixed-length feasibility memo
stores, per covered set, the full set of feasible lengths as one word
instead of one boolean per (set, length) pair.  The predicate it answers
is the same, so reconstruction walks the same path.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

from . import _kernels_py

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(unsigned long long x) noexcept nogil:
    return __builtin_popcountll(x)


# -- shared entry plumbing -----------------------------------------------------


cdef int _load_masks(object masks, object universe, unsigned long long** out) except -1:
    """Normalize masks into a fresh C array; returns the count."""
    cdef int m = len(masks)
    cdef unsigned long long* arr = <unsigned long long*> malloc(m * sizeof(unsigned long long))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(m):
        arr[i] = <unsigned long long> (masks[i] & universe)
    out[0] = arr
    return m


cdef bint _coverable(unsigned long long* masks, int m, unsigned long long universe) noexcept nogil:
    cdef unsigned long long u = 0
    cdef int i
    for i in range(m):
        u |= masks[i]
    return (u & universe) == universe


def _fits(universe) -> bool:
    return isinstance(universe, int) and 0 <= universe and universe.bit_length() <= 63


# -- longest legal cover sequence ------------------------------------------------


cdef int _dense_longest(unsigned long long covered, unsigned long long universe,
                        unsigned long long* masks, int m, signed char* memo) noexcept:
    if covered == universe:
        return 0
    cdef signed char v = memo[covered]
    if v >= 0:
        return v
    cdef int best = 0
    cdef int r
    cdef int i
    for i in range(m):
        if masks[i] & ~covered:
            r = 1 + _dense_longest(covered | masks[i], universe, masks, m, memo)
            if r > best:
                best = r
    memo[covered] = <signed char> best
    return best


def max_cover_sequence(masks, universe):
    if not _fits(universe):
        return _kernels_py.max_cover_sequence(masks, universe)
    cdef int nbits = universe.bit_length()
    if universe != (1 << nbits) - 1 or nbits > 22:
        return _kernels_py.max_cover_sequence(masks, universe)

    cdef unsigned long long* cmasks = NULL
    cdef int m = _load_masks(masks, universe, &cmasks)
    cdef signed char* memo = NULL
    cdef unsigned long long uni = universe
    cdef unsigned long long covered, child
    cdef int total, need, i, child_val
    try:
        if not _coverable(cmasks, m, uni):
            raise ValueError("mask family does not cover the universe")
        if uni == 0:
            return 0, []
        memo = <signed char*> malloc((<size_t> 1 << nbits) * sizeof(signed char))
        if memo == NULL:
            raise MemoryError()
        memset(memo, 0xFF, (<size_t> 1 << nbits) * sizeof(signed char))

        total = _dense_longest(0, uni, cmasks, m, memo)

        seq = []
        covered = 0
        need = total
        while need:
            for i in range(m):
                if cmasks[i] & ~covered:
                    child = covered | cmasks[i]
                    child_val = 0 if child == uni else memo[child]
                    if child_val == need - 1:
                        seq.append(i)
                        covered = child
                        need -= 1
                        break
            else:
                raise RuntimeError("witness reconstruction failed")
        return total, seq
    finally:
        free(cmasks)
        free(memo)


# -- legal cover sequence of an exact length --------------------------------------


cdef unsigned long long _length_sets(unsigned long long covered, unsigned long long universe,
                                     unsigned long long* masks, int m,
                                     unsigned long long* memo) noexcept:
    """Bit r set in the result iff a complete sequence of length r extends here."""
    if covered == universe:
        return 1  # only length 0
    cdef unsigned long long v = memo[covered]
    if v != 0:
        return v
    cdef int i
    for i in range(m):
        if masks[i] & ~covered:
            v |= _length_sets(covered | masks[i], universe, masks, m, memo) << 1
    memo[covered] = v
    return v


def sequence_of_length(masks, universe, length):
    if not _fits(universe):
        return _kernels_py.sequence_of_length(masks, universe, length)
    cdef int nbits = universe.bit_length()
    if universe != (1 << nbits) - 1 or nbits > 20:
        return _kernels_py.sequence_of_length(masks, universe, length)

    cdef unsigned long long* cmasks = NULL
    cdef int m = _load_masks(masks, universe, &cmasks)
    cdef unsigned long long* memo = NULL
    cdef unsigned long long uni = universe
    cdef unsigned long long covered
    cdef int r, i, want
    try:
        if not _coverable(cmasks, m, uni):
            raise ValueError("mask family does not cover the universe")
        if length < 0:
            return None
        if uni == 0:
            return [] if length == 0 else None
        if length > nbits:
            return None  # each step covers at least one new element
        want = length
        memo = <unsigned long long*> calloc(<size_t> 1 << nbits, sizeof(unsigned long long))
        if memo == NULL:
            raise MemoryError()
        if not (_length_sets(0, uni, cmasks, m, memo) >> want) & 1:
            return None
        seq = []
        covered = 0
        r = want
        while r:
            for i in range(m):
                if cmasks[i] & ~covered and \
                        (_length_sets(covered | cmasks[i], uni, cmasks, m, memo) >> (r - 1)) & 1:
                    seq.append(i)
                    covered |= cmasks[i]
                    r -= 1
                    break
        return seq
    finally:
        free(cmasks)
        free(memo)


# -- two-player cover game ----------------------------------------------------------


cdef int _game_value(unsigned long long covered, bint minimizer, unsigned long long universe,
                     unsigned long long* masks, int m,
                     signed char* memo_min, signed char* memo_max) noexcept:
    if covered == universe:
        return 0
    cdef signed char* memo = memo_min if minimizer else memo_max
    cdef signed char v = memo[covered]
    if v >= 0:
        return v
    cdef int best = -1
    cdef int r
    cdef int i
    for i in range(m):
        if masks[i] & ~covered:
            r = 1 + _game_value(covered | masks[i], not minimizer, universe, masks, m,
                                memo_min, memo_max)
            if best < 0 or (r < best if minimizer else r > best):
                best = r
    memo[covered] = <signed char> best
    return best


def game_cover_value(masks, universe):
    if not _fits(universe):
        return _kernels_py.game_cover_value(masks, universe)
    cdef int nbits = universe.bit_length()
    if universe != (1 << nbits) - 1 or nbits > 21:
        return _kernels_py.game_cover_value(masks, universe)

    cdef unsigned long long* cmasks = NULL
    cdef int m = _load_masks(masks, universe, &cmasks)
    cdef signed char* memo_min = NULL
    cdef signed char* memo_max = NULL
    cdef unsigned long long uni = universe
    cdef unsigned long long covered, child
    cdef signed char* child_memo
    cdef bint minimizer
    cdef int total, need, i, child_val
    try:
        if not _coverable(cmasks, m, uni):
            raise ValueError("mask family does not cover the universe")
        if uni == 0:
            return 0, []
        memo_min = <signed char*> malloc((<size_t> 1 << nbits) * sizeof(signed char))
        memo_max = <signed char*> malloc((<size_t> 1 << nbits) * sizeof(signed char))
        if memo_min == NULL or memo_max == NULL:
            raise MemoryError()
        memset(memo_min, 0xFF, (<size_t> 1 << nbits) * sizeof(signed char))
        memset(memo_max, 0xFF, (<size_t> 1 << nbits) * sizeof(signed char))

        total = _game_value(0, True, uni, cmasks, m, memo_min, memo_max)

        trace = []
        covered = 0
        minimizer = True
        need = total
        while covered != uni:
            child_memo = memo_max if minimizer else memo_min
            for i in range(m):
                if cmasks[i] & ~covered:
                    child = covered | cmasks[i]
                    child_val = 0 if child == uni else child_memo[child]
                    if 1 + child_val == need:
                        trace.append(i)
                        covered = child
                        need -= 1
                        minimizer = not minimizer
                        break
            else:
                raise RuntimeError("principal line reconstruction failed")
        return total, trace
    finally:
        free(cmasks)
        free(memo_min)
        free(memo_max)


# -- exact minimum cover --------------------------------------------------------------


cdef struct MinCoverState:
    unsigned long long* masks
    int m
    unsigned long long universe
    int max_mask
    int** cover_of       # per universe bit: candidate indices
    int* cover_len
    int best_size
    int* best_sel
    int* chosen


cdef void _min_cover_dfs(MinCoverState* st, unsigned long long covered, int depth) noexcept:
    cdef int remaining, lower, branch_e, branch_width, e, i, j
    cdef unsigned long long rest, low
    if covered == st.universe:
        if depth < st.best_size:
            st.best_size = depth
            for i in range(depth):
                st.best_sel[i] = st.chosen[i]
        return
    remaining = _popcount(st.universe & ~covered)
    lower = (remaining + st.max_mask - 1) // st.max_mask
    if depth + lower >= st.best_size:
        return
    branch_e = -1
    branch_width = st.m + 1
    rest = st.universe & ~covered
    while rest:
        low = rest & (~rest + 1)
        e = __builtin_ctzll(low)
        rest ^= low
        if st.cover_len[e] < branch_width:
            branch_width = st.cover_len[e]
            branch_e = e
    for j in range(st.cover_len[branch_e]):
        i = st.cover_of[branch_e][j]
        st.chosen[depth] = i
        _min_cover_dfs(st, covered | st.masks[i], depth + 1)


def min_cover(masks, universe):
    if not _fits(universe):
        return _kernels_py.min_cover(masks, universe)

    cdef MinCoverState st
    cdef unsigned long long* cmasks = NULL
    cdef int m = _load_masks(masks, universe, &cmasks)
    cdef unsigned long long uni = universe
    cdef unsigned long long covered, rest, low
    cdef int i, e, pick, gain, g, greedy_len
    st.cover_of = NULL
    st.cover_len = NULL
    st.best_sel = NULL
    st.chosen = NULL
    try:
        if not _coverable(cmasks, m, uni):
            raise ValueError("mask family does not cover the universe")
        if uni == 0:
            return 0, []
        st.masks = cmasks
        st.m = m
        st.universe = uni

        st.cover_of = <int**> calloc(64, sizeof(int*))
        st.cover_len = <int*> calloc(64, sizeof(int))
        if st.cover_of == NULL or st.cover_len == NULL:
            raise MemoryError()
        rest = uni
        while rest:
            low = rest & (~rest + 1)
            e = __builtin_ctzll(low)
            rest ^= low
            st.cover_of[e] = <int*> malloc(m * sizeof(int))
            if st.cover_of[e] == NULL:
                raise MemoryError()
            for i in range(m):
                if (cmasks[i] >> e) & 1:
                    st.cover_of[e][st.cover_len[e]] = i
                    st.cover_len[e] += 1

        st.max_mask = 0
        for i in range(m):
            g = _popcount(cmasks[i])
            if g > st.max_mask:
                st.max_mask = g

        st.best_sel = <int*> malloc(m * sizeof(int))
        st.chosen = <int*> malloc(m * sizeof(int))
        if st.best_sel == NULL or st.chosen == NULL:
            raise MemoryError()

        # greedy warm start, first index wins ties
        covered = 0
        greedy_len = 0
        while covered != uni:
            pick = -1
            gain = 0
            for i in range(m):
                g = _popcount(cmasks[i] & ~covered)
                if g > gain:
                    gain = g
                    pick = i
            st.best_sel[greedy_len] = pick
            greedy_len += 1
            covered |= cmasks[pick]
        st.best_size = greedy_len

        _min_cover_dfs(&st, 0, 0)

        out = sorted(st.best_sel[i] for i in range(st.best_size))
        return st.best_size, out
    finally:
        if st.cover_of != NULL:
            for i in range(64):
                free(st.cover_of[i])
        free(st.cover_of)
        free(st.cover_len)
        free(st.best_sel)
        free(st.chosen)
        free(cmasks)


# -- maximum minimal cover -------------------------------------------------------------


cdef struct MaxMinState:
    unsigned long long* masks
    int m
    unsigned long long universe
    unsigned long long* suffix
    unsigned long long* scratch   # (m+1) rows of m private masks
    int best_size
    int* best_sel
    int* chosen


cdef void _max_minimal_dfs(MaxMinState* st, int i, unsigned long long covered,
                           int n_chosen, unsigned long long* privates) noexcept:
    cdef unsigned long long new_private
    cdef unsigned long long* updated
    cdef int j
    cdef bint ok
    if (covered | st.suffix[i]) != st.universe:
        return
    if n_chosen + (st.m - i) <= st.best_size:
        return
    if i == st.m:
        # privates all nonempty by construction, so this cover is minimal
        st.best_size = n_chosen
        for j in range(n_chosen):
            st.best_sel[j] = st.chosen[j]
        return
    new_private = st.masks[i] & ~covered
    if new_private:
        updated = st.scratch + (<size_t> i) * st.m
        ok = True
        for j in range(n_chosen):
            updated[j] = privates[j] & ~st.masks[i]
            if updated[j] == 0:
                ok = False
                break
        if ok:
            updated[n_chosen] = new_private
            st.chosen[n_chosen] = i
            _max_minimal_dfs(st, i + 1, covered | st.masks[i], n_chosen + 1, updated)
    _max_minimal_dfs(st, i + 1, covered, n_chosen, privates)


def max_minimal_cover(masks, universe):
    if not _fits(universe):
        return _kernels_py.max_minimal_cover(masks, universe)

    cdef MaxMinState st
    cdef unsigned long long* cmasks = NULL
    cdef int m = _load_masks(masks, universe, &cmasks)
    cdef unsigned long long uni = universe
    cdef int i
    st.suffix = NULL
    st.scratch = NULL
    st.best_sel = NULL
    st.chosen = NULL
    try:
        if not _coverable(cmasks, m, uni):
            raise ValueError("mask family does not cover the universe")
        if uni == 0:
            return 0, []
        st.masks = cmasks
        st.m = m
        st.universe = uni
        st.suffix = <unsigned long long*> calloc(m + 1, sizeof(unsigned long long))
        st.scratch = <unsigned long long*> malloc((<size_t> (m + 1)) * m * sizeof(unsigned long long))
        st.best_sel = <int*> malloc(m * sizeof(int))
        st.chosen = <int*> malloc(m * sizeof(int))
        if st.suffix == NULL or st.scratch == NULL or st.best_sel == NULL or st.chosen == NULL:
            raise MemoryError()
        for i in range(m - 1, -1, -1):
            st.suffix[i] = st.suffix[i + 1] | cmasks[i]
        st.best_size = -1

        _max_minimal_dfs(&st, 0, 0, 0, st.scratch + (<size_t> m) * st.m)

        if st.best_size < 0:
            raise RuntimeError("no minimal cover found for coverable universe")
        out = sorted(st.best_sel[i] for i in range(st.best_size))
        return st.best_size, out
    finally:
        free(st.suffix)
        free(st.scratch)
        free(st.best_sel)
        free(st.chosen)
        free(cmasks)


# -- maximum strong / semistrong matching -------------------------------------------------


cdef struct MatchState:
    unsigned long long* adj
    int n
    bint semistrong
    int* eu
    int* ev
    int m
    int best_size
    int* best_u
    int* best_v
    int* pu
    int* pv


cdef bint _match_valid(MatchState* st, int n_pairs, unsigned long long vmask) noexcept:
    cdef int j, da, db
    for j in range(n_pairs):
        da = _popcount(st.adj[st.pu[j]] & vmask)
        db = _popcount(st.adj[st.pv[j]] & vmask)
        if st.semistrong:
            if da != 1 and db != 1:
                return False
        elif da != 1 or db != 1:
            return False
    return True


cdef void _match_dfs(MatchState* st, int start, int n_pairs, unsigned long long vmask) noexcept:
    cdef int idx, u, v, j
    cdef unsigned long long nmask
    if n_pairs > st.best_size:
        st.best_size = n_pairs
        for j in range(n_pairs):
            st.best_u[j] = st.pu[j]
            st.best_v[j] = st.pv[j]
    if n_pairs + (st.n - _popcount(vmask)) // 2 <= st.best_size:
        return
    for idx in range(start, st.m):
        u = st.eu[idx]
        v = st.ev[idx]
        if (vmask >> u) & 1 or (vmask >> v) & 1:
            continue
        nmask = vmask | (<unsigned long long> 1 << u) | (<unsigned long long> 1 << v)
        st.pu[n_pairs] = u
        st.pv[n_pairs] = v
        if _match_valid(st, n_pairs + 1, nmask):
            _match_dfs(st, idx + 1, n_pairs + 1, nmask)


def max_matching(adj, n, semistrong):
    if n > 63:
        return _kernels_py.max_matching(adj, n, semistrong)

    cdef MatchState st
    cdef int u, v, i, cap
    cdef unsigned long long row, low
    st.adj = NULL
    st.eu = NULL
    st.ev = NULL
    st.best_u = NULL
    st.best_v = NULL
    st.pu = NULL
    st.pv = NULL
    try:
        st.n = n
        st.semistrong = bool(semistrong)
        st.adj = <unsigned long long*> malloc(n * sizeof(unsigned long long))
        if st.adj == NULL:
            raise MemoryError()
        for u in range(n):
            st.adj[u] = <unsigned long long> adj[u]
        cap = n * (n - 1) // 2 if n > 1 else 1
        st.eu = <int*> malloc(cap * sizeof(int))
        st.ev = <int*> malloc(cap * sizeof(int))
        if st.eu == NULL or st.ev == NULL:
            raise MemoryError()
        st.m = 0
        for u in range(n):
            row = st.adj[u] >> (u + 1)
            while row:
                low = row & (~row + 1)
                v = __builtin_ctzll(low)
                row ^= low
                st.eu[st.m] = u
                st.ev[st.m] = u + 1 + v
                st.m += 1
        st.best_u = <int*> malloc((n // 2 + 1) * sizeof(int))
        st.best_v = <int*> malloc((n // 2 + 1) * sizeof(int))
        st.pu = <int*> malloc((n // 2 + 1) * sizeof(int))
        st.pv = <int*> malloc((n // 2 + 1) * sizeof(int))
        if st.best_u == NULL or st.best_v == NULL or st.pu == NULL or st.pv == NULL:
            raise MemoryError()
        st.best_size = 0

        _match_dfs(&st, 0, 0, 0)

        out = [(st.best_u[i], st.best_v[i]) for i in range(st.best_size)]
        return st.best_size, out
    finally:
        free(st.adj)
        free(st.eu)
        free(st.ev)
        free(st.best_u)
        free(st.best_v)
        free(st.pu)
        free(st.pv)
