"""Legality checking, footprints, greedy extension, and sequence surgery.

A neighborhood sequence is legal when every entry dominates at least one
vertex that no earlier entry dominated (its footprints).  With open
neighborhoods N(v) a complete legal sequence is a total dominating sequence;
with closed neighborhoods N[v] it is a dominating sequence.  The functions
here are the certificate checkers for everything the solvers and
constructions produce, so they deliberately share no code with the search
kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvariantViolation,
    ParameterError,
    PreconditionError,
    SequenceError,
)
from .graph import Graph, bits

Mode = str  # "open" | "closed"


def _mode_mask(g: Graph, v: int, mode: Mode) -> int:
    if mode == "open":
        return g.adj[v]
    if mode == "closed":
        return g.adj[v] | (1 << v)
    raise ParameterError(f"mode must be 'open' or 'closed', got {mode!r}")


def _validate_sequence(g: Graph, seq) -> list[int]:
    out = list(seq)
    seen = set()
    for v in out:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise SequenceError(f"vertex {v!r} out of range for order {g.n}")
        if v in seen:
            raise SequenceError(f"vertex {v} repeats in the sequence")
        seen.add(v)
    return out


@dataclass(frozen=True)
class LegalityReport:
    """Outcome of checking one sequence.

    footprinter[u] is the 0-based position of the entry that first dominated
    vertex u (None while undominated); new_per_step lists, per legal
    position, the vertices it footprinted.  Both describe the longest legal
    prefix when the sequence is illegal.
    """

    legal: bool
    first_violation: int | None
    footprinter: tuple[int | None, ...]
    new_per_step: tuple[tuple[int, ...], ...]
    dominated_mask: int
    complete: bool


def check_legal(g: Graph, seq, mode: Mode = "open") -> LegalityReport:
    """Evaluate legality of a sequence and compute its footprint structure."""
    entries = _validate_sequence(g, seq)
    footprinter: list[int | None] = [None] * g.n
    new_per_step: list[tuple[int, ...]] = []
    dominated = 0
    violation: int | None = None
    for pos, v in enumerate(entries):
        new = _mode_mask(g, v, mode) & ~dominated
        if not new:
            violation = pos
            break
        new_per_step.append(tuple(bits(new)))
        for u in bits(new):
            footprinter[u] = pos
        dominated |= new
    return LegalityReport(
        legal=violation is None,
        first_violation=violation,
        footprinter=tuple(footprinter),
        new_per_step=tuple(new_per_step),
        dominated_mask=dominated,
        complete=violation is None and dominated == g.full_mask,
    )


def is_total_dominating_sequence(g: Graph, seq) -> bool:
    """Legal open-neighborhood sequence whose entries dominate every vertex."""
    return check_legal(g, seq, "open").complete


def is_dominating_sequence(g: Graph, seq) -> bool:
    """Legal closed-neighborhood sequence dominating every vertex."""
    return check_legal(g, seq, "closed").complete


@dataclass(frozen=True)
class GreedyResult:
    sequence: tuple[int, ...]
    complete: bool


def greedy_extend(
    g: Graph,
    prefix=(),
    mode: Mode = "open",
    policy: str = "lexicographic",
    restrict_to=None,
    target=None,
    touch_dominated: bool = False,
) -> GreedyResult:
    """Greedily extend a legal prefix until the target is dominated or stuck.

    policy picks among the legal candidates: "lexicographic" takes the
    lowest id, "min_footprint"/"max_footprint" minimize/maximize the number
    of newly dominated target vertices (ties to the lowest id).  restrict_to
    limits which vertices may be appended; target limits which vertices must
    end up dominated (each appended vertex must footprint at least one new
    target vertex); touch_dominated additionally requires each appended
    vertex to be adjacent to an already-dominated vertex.  Returns the full
    sequence and whether the target is completely dominated; an exhausted
    candidate pool short of completion reports complete=False rather than
    raising.
    """
    if policy not in ("lexicographic", "min_footprint", "max_footprint"):
        raise ParameterError(f"unknown policy {policy!r}")
    report = check_legal(g, prefix, mode)
    if not report.legal:
        raise PreconditionError(
            f"prefix is not a legal {mode}-neighborhood sequence "
            f"(violation at position {report.first_violation})"
        )

    def vertex_set_mask(vs, what: str) -> int:
        mask = 0
        for v in vs:
            if not (0 <= v < g.n):
                raise ParameterError(f"{what} vertex {v} out of range")
            mask |= 1 << v
        return mask

    target_mask = g.full_mask if target is None else vertex_set_mask(target, "target")
    pool_mask = g.full_mask if restrict_to is None else vertex_set_mask(
        restrict_to, "restrict_to"
    )

    seq = list(prefix)
    used = 0
    for v in seq:
        used |= 1 << v
    dominated = report.dominated_mask

    while target_mask & ~dominated:
        best_v = -1
        best_score = 0
        for v in bits(pool_mask & ~used):
            new_targets = _mode_mask(g, v, mode) & ~dominated & target_mask
            if not new_targets:
                continue
            if touch_dominated and not (g.adj[v] & dominated):
                continue
            if policy == "lexicographic":
                best_v = v
                break
            score = new_targets.bit_count()
            if best_v < 0 or (
                score < best_score if policy == "min_footprint" else score > best_score
            ):
                best_v = v
                best_score = score
        if best_v < 0:
            return GreedyResult(tuple(seq), False)
        seq.append(best_v)
        used |= 1 << best_v
        dominated |= _mode_mask(g, best_v, mode)
    return GreedyResult(tuple(seq), True)


def prune_to_closed(g: Graph, seq) -> list[int]:
    """Turn a total dominating sequence into a legal closed-neighborhood one.

    Drops every entry whose footprints all lie among the earlier entries
    themselves; what remains is legal with closed neighborhoods.  At most
    half of the entries can be dropped, since an entry removed this way
    needs a distinct earlier entry as a footprint.  The result generally
    needs further extension to dominate everything.
    """
    report = check_legal(g, seq, "open")
    if not report.complete:
        raise PreconditionError("input must be a total dominating sequence")
    entries = list(seq)
    kept: list[int] = []
    for pos, v in enumerate(entries):
        earlier = set(entries[:pos])
        if all(u in earlier for u in report.new_per_step[pos]):
            continue
        kept.append(v)
    if len(kept) * 2 < len(entries):
        raise InvariantViolation(
            "pruning removed more than half the entries, which is impossible"
        )
    verify = check_legal(g, kept, "closed")
    if not verify.legal:
        raise InvariantViolation("pruned sequence is not closed-legal")
    return kept
