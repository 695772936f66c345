"""Exact invariant computations with verified certificates.

Seven invariants are exposed, all exact and all certified:

  gamma_t    minimum size of a total dominating set
  Gamma_t    maximum size of a minimal total dominating set
  gamma_tg   game value: minimizer and maximizer alternate extending a legal
             open-neighborhood sequence, minimizer first
  gamma_grt  longest total dominating sequence
  gamma_gr   longest dominating sequence (closed neighborhoods)
  nu_s       maximum strong (induced) matching
  nu_ss      maximum semistrong matching

Every solver re-checks the certificate it is about to return with the
independent checkers in the sequences module; a failure there is a bug, not
bad input.  Instances above the size cap are rejected up front because the
searches are exponential; the cap defaults to 24 vertices and can be raised
per call or through the GRUNDY_CAP environment variable.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from . import engine
from .errors import CapacityError, DomainError, InvariantViolation, ParameterError
from .graph import Graph, bits
from .sequences import check_legal, is_dominating_sequence, is_total_dominating_sequence

DEFAULT_CAP = 24

INVARIANT_KEYS = (
    "gamma_t",
    "Gamma_t",
    "gamma_tg",
    "gamma_grt",
    "gamma_gr",
    "nu_s",
    "nu_ss",
)

# short CLI tokens for the same invariants
TOKEN_TO_KEY = {
    "gt": "gamma_t",
    "Gt": "Gamma_t",
    "gtg": "gamma_tg",
    "grt": "gamma_grt",
    "gr": "gamma_gr",
    "nus": "nu_s",
    "nuss": "nu_ss",
}


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        if cap < 1:
            raise ParameterError("cap must be >= 1")
        return cap
    env = os.environ.get("GRUNDY_CAP")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ParameterError(f"GRUNDY_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def ensure_capacity(size: int, cap: int | None = None, what: str = "order"):
    limit = resolve_cap(cap)
    if size > limit:
        mib = 2 ** max(size - 20, 0)
        raise CapacityError(
            f"instance {what} {size} exceeds the exact-search cap {limit}; "
            f"the state table can reach 2^{size} entries (~{mib} MiB). "
            "Raise the cap explicitly if that is acceptable."
        )


def _require_no_isolated(g: Graph, what: str):
    if g.has_isolated_vertex():
        isolated = [v for v in range(g.n) if g.adj[v] == 0]
        raise DomainError(
            f"{what} is undefined on graphs with isolated vertices "
            f"(found {isolated})"
        )


# -- set-style certificates --------------------------------------------------


def is_total_dominating_set(g: Graph, vertices) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(g.adj[v] & mask for v in range(g.n))


def is_minimal_total_dominating_set(g: Graph, vertices) -> bool:
    """Total dominating and no member removable: each has a private neighbor."""
    vs = list(vertices)
    if not is_total_dominating_set(g, vs):
        return False
    mask = 0
    for v in vs:
        mask |= 1 << v
    for v in vs:
        others = mask & ~(1 << v)
        if all(g.adj[u] & others for u in range(g.n)):
            return False
    return True


def _certify(ok: bool, what: str):
    if not ok:
        raise RuntimeError(f"solver produced an invalid certificate for {what}")


# -- invariants ---------------------------------------------------------------


def total_domination_number(g: Graph, cap: int | None = None):
    """(gamma_t, witness set as a sorted tuple)."""
    _require_no_isolated(g, "total domination")
    ensure_capacity(g.n, cap)
    value, sel = engine.min_cover(g.open_masks(), g.full_mask)
    _certify(is_total_dominating_set(g, sel) and len(sel) == value, "gamma_t")
    return value, tuple(sel)


def upper_total_domination_number(g: Graph, cap: int | None = None):
    """(Gamma_t, a largest minimal total dominating set, sorted)."""
    _require_no_isolated(g, "total domination")
    ensure_capacity(g.n, cap)
    value, sel = engine.max_minimal_cover(g.open_masks(), g.full_mask)
    _certify(
        is_minimal_total_dominating_set(g, sel) and len(sel) == value, "Gamma_t"
    )
    return value, tuple(sel)


def game_total_domination_number(g: Graph, cap: int | None = None):
    """(gamma_tg, principal line under optimal play, minimizer first)."""
    _require_no_isolated(g, "the total domination game")
    ensure_capacity(g.n, cap)
    value, trace = engine.game_cover_value(g.open_masks(), g.full_mask)
    _certify(
        is_total_dominating_sequence(g, trace) and len(trace) == value, "gamma_tg"
    )
    return value, tuple(trace)


def grundy_total_domination_number(g: Graph, cap: int | None = None):
    """(gamma_grt, a longest total dominating sequence)."""
    _require_no_isolated(g, "a total dominating sequence")
    ensure_capacity(g.n, cap)
    value, seq = engine.max_cover_sequence(g.open_masks(), g.full_mask)
    _certify(
        is_total_dominating_sequence(g, seq) and len(seq) == value, "gamma_grt"
    )
    return value, tuple(seq)


def grundy_domination_number(
    g: Graph, cap: int | None = None, allow_isolated: bool = False
):
    """(gamma_gr, a longest dominating sequence).

    Isolated vertices are mathematically fine here (each dominates itself)
    but rejected by default for uniformity with the open-neighborhood
    invariants; pass allow_isolated=True to accept them.
    """
    if not allow_isolated:
        _require_no_isolated(g, "grundy_domination_number (default policy)")
    ensure_capacity(g.n, cap)
    value, seq = engine.max_cover_sequence(g.closed_masks(), g.full_mask)
    _certify(is_dominating_sequence(g, seq) and len(seq) == value, "gamma_gr")
    return value, tuple(seq)


def strong_matching_number(g: Graph, cap: int | None = None):
    """(nu_s, a maximum strong matching as a tuple of edges)."""
    ensure_capacity(g.n, cap)
    value, pairs = engine.max_matching(g.open_masks(), g.n, False)
    _certify(_matching_ok(g, pairs, False) and len(pairs) == value, "nu_s")
    return value, tuple(pairs)


def semistrong_matching_number(g: Graph, cap: int | None = None):
    """(nu_ss, a maximum semistrong matching as a tuple of edges)."""
    ensure_capacity(g.n, cap)
    value, pairs = engine.max_matching(g.open_masks(), g.n, True)
    _certify(_matching_ok(g, pairs, True) and len(pairs) == value, "nu_ss")
    return value, tuple(pairs)


def _matching_ok(g: Graph, pairs, semistrong: bool) -> bool:
    vmask = 0
    for u, v in pairs:
        if not g.has_edge(u, v):
            return False
        if vmask & ((1 << u) | (1 << v)):
            return False
        vmask |= (1 << u) | (1 << v)
    for u, v in pairs:
        du = (g.adj[u] & vmask).bit_count()
        dv = (g.adj[v] & vmask).bit_count()
        if semistrong:
            if du != 1 and dv != 1:
                return False
        elif du != 1 or dv != 1:
            return False
    return True


def total_dominating_sequence_of_length(g: Graph, length: int, cap: int | None = None):
    """A total dominating sequence of exactly the given length, or None."""
    _require_no_isolated(g, "a total dominating sequence")
    ensure_capacity(g.n, cap)
    seq = engine.sequence_of_length(g.open_masks(), g.full_mask, length)
    if seq is None:
        return None
    _certify(
        is_total_dominating_sequence(g, seq) and len(seq) == length,
        "a fixed-length sequence",
    )
    return tuple(seq)


def interpolation_witnesses(g: Graph, cap: int | None = None):
    """One total dominating sequence for every achievable length.

    Every length between gamma_t and gamma_grt inclusive has a witness; a
    gap would contradict a proven interpolation property, so a missing
    length raises InvariantViolation.
    """
    lo, _ = total_domination_number(g, cap)
    hi, _ = grundy_total_domination_number(g, cap)
    out: dict[int, tuple[int, ...]] = {}
    for length in range(lo, hi + 1):
        seq = total_dominating_sequence_of_length(g, length, cap)
        if seq is None:
            raise InvariantViolation(
                f"no total dominating sequence of length {length} although "
                f"{lo} and {hi} are both achievable"
            )
        out[length] = seq
    return out


# -- aggregated report ---------------------------------------------------------

_DISPATCH = {
    "gamma_t": total_domination_number,
    "Gamma_t": upper_total_domination_number,
    "gamma_tg": game_total_domination_number,
    "gamma_grt": grundy_total_domination_number,
    "gamma_gr": grundy_domination_number,
    "nu_s": strong_matching_number,
    "nu_ss": semistrong_matching_number,
}


@dataclass(frozen=True)
class InvariantResult:
    key: str
    value: int
    witness: tuple
    micros: int


@dataclass(frozen=True)
class InvariantReport:
    n: int
    edge_count: int
    results: dict[str, InvariantResult]

    def value(self, key: str) -> int:
        return self.results[key].value

    def witness(self, key: str) -> tuple:
        return self.results[key].witness

    def to_json_dict(self) -> dict:
        inv = {}
        for key, r in self.results.items():
            witness = [list(w) if isinstance(w, tuple) else w for w in r.witness]
            inv[key] = {"value": r.value, "witness": witness, "micros": r.micros}
        return {"n": self.n, "edges": self.edge_count, "invariants": inv}


def compute_report(g: Graph, keys=None, cap: int | None = None) -> InvariantReport:
    """Compute the requested invariants (all seven by default) with timings."""
    if keys is None:
        keys = INVARIANT_KEYS
    else:
        keys = tuple(TOKEN_TO_KEY.get(k, k) for k in keys)
        unknown = [k for k in keys if k not in _DISPATCH]
        if unknown:
            raise ParameterError(f"unknown invariants: {unknown}")
    results: dict[str, InvariantResult] = {}
    for key in keys:
        t0 = time.perf_counter_ns()
        value, witness = _DISPATCH[key](g, cap)
        micros = (time.perf_counter_ns() - t0) // 1000
        results[key] = InvariantResult(key, value, witness, micros)
    return InvariantReport(g.n, g.edge_count(), results)


def chain_violations(report: InvariantReport) -> list[str]:
    """Check the proven orderings among the computed invariants.

    Returns human-readable descriptions of any violations (always expected
    to be empty; a nonempty result means a solver bug).
    """
    v = {k: r.value for k, r in report.results.items()}
    out = []

    def need(cond: bool, text: str):
        if not cond:
            out.append(text)

    if "gamma_t" in v and "Gamma_t" in v:
        need(v["gamma_t"] <= v["Gamma_t"], "gamma_t > Gamma_t")
    if "Gamma_t" in v and "gamma_grt" in v:
        need(v["Gamma_t"] <= v["gamma_grt"], "Gamma_t > gamma_grt")
    if "gamma_t" in v and "gamma_tg" in v:
        need(v["gamma_t"] <= v["gamma_tg"], "gamma_t > gamma_tg")
    if "gamma_tg" in v and "gamma_grt" in v:
        need(v["gamma_tg"] <= v["gamma_grt"], "gamma_tg > gamma_grt")
    if "nu_s" in v and "nu_ss" in v:
        need(v["nu_s"] <= v["nu_ss"], "nu_s > nu_ss")
    if "nu_ss" in v and "gamma_grt" in v:
        need(2 * v["nu_ss"] <= v["gamma_grt"], "2*nu_ss > gamma_grt")
    if "gamma_gr" in v and "gamma_grt" in v:
        need(v["gamma_grt"] <= 2 * v["gamma_gr"], "gamma_grt > 2*gamma_gr")
    return out
