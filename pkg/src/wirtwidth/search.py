"""Width and seed-count searches over a diagram's coloring sequences.

Three computations, all kernel-backed with pure-Python witness
materialization and re-verification:

* :func:`exact_width` minimizes the attached-sequence total by memoized
  branch-and-bound over partition states, seeded with the heuristic's
  upper bound.
* :func:`wirtinger_number` finds the smallest seed set whose saturation
  closure colors everything (sound because move eligibility is monotone
  in the colored set, so seeds can be moved up-front).
* :func:`lazy_seed_heuristic` searches ordered seed tuples, saturating
  all legal moves between consecutive seeds, and returns the best
  completed sequence found within budget.

Every report's witness passes :func:`coloring.replay_and_verify` and its
attached total equals the reported width before the report is returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from . import _core
from .coloring import (
    EventLog,
    attached_sequence,
    coloring_move,
    legal_moves,
    replay_and_verify,
    saturation_moves,
    seed_addition,
    vacuous_state,
)
from .errors import InvariantViolation, Unresolved
from .gauss import Diagram, diagram_arrays

DEFAULT_NODE_BUDGET = 2_000_000
DEFAULT_HEURISTIC_BUDGET = 5_000
DEFAULT_SEED_TARGET = 4

KERNEL = "compiled" if _core.COMPILED else "pure"


@dataclass(frozen=True)
class WidthReport:
    """Result of a width computation, with its machine-checkable witness."""

    diagram_id: str
    mu_upper: int
    mu_exact: bool
    width_upper: int
    width_exact: bool
    witness: EventLog
    elapsed: float
    nodes_explored: int

    @property
    def seeds_used(self) -> int:
        return len(self.witness.seed_strands())


@lru_cache(maxsize=512)
def _kernel_for(diagram: Diagram):
    # kernels hold mutable scratch state; each search entry point resets and
    # runs to completion, so sharing is per-process only (census parallelism
    # is process-level, matching this)
    return _core.make_kernel(diagram_arrays(diagram))


def _materialize_log(
    diagram: Diagram, events, gauss_text: str | None = None
) -> EventLog:
    """Replay bare kernel event tuples into a full, annotated EventLog."""
    state = vacuous_state(diagram)
    out = []
    for ev in events:
        if ev[0] == "S":
            state, event = seed_addition(state, ev[1])
        else:
            state, event = coloring_move(state, ev[1], ev[3])
        out.append(event)
    return EventLog(diagram=diagram, events=tuple(out), gauss_text=gauss_text)


def _log_from_seed_tuple(
    diagram: Diagram, seeds, gauss_text: str | None = None
) -> EventLog:
    """Seed in the given order, saturating coloring moves between seeds."""
    state = vacuous_state(diagram)
    events = []
    for s in seeds:
        state, ev = seed_addition(state, s)
        events.append(ev)
        state, moves = saturation_moves(state)
        events.extend(moves)
    return EventLog(diagram=diagram, events=tuple(events), gauss_text=gauss_text)


def greedy_complete(diagram: Diagram, gauss_text: str | None = None) -> EventLog:
    """Always-terminating baseline: saturate moves, else seed the lowest
    uncolored strand.  Used as the fallback witness when budgets run out."""
    state = vacuous_state(diagram)
    events = []
    while not state.is_complete():
        moves = legal_moves(state)
        if moves:
            state, ev = coloring_move(state, *moves[0])
        else:
            target = next(
                s for s, c in enumerate(state.color_of) if c == -1
            )
            state, ev = seed_addition(state, target)
        events.append(ev)
    return EventLog(diagram=diagram, events=tuple(events), gauss_text=gauss_text)


def _checked_report(
    diagram_id, mu_upper, mu_exact, width_upper, width_exact, witness, elapsed, nodes
) -> WidthReport:
    replay_and_verify(witness)
    total = attached_sequence(witness).total
    if total != width_upper:
        raise InvariantViolation(
            f"witness total {total} != reported width {width_upper}"
        )
    return WidthReport(
        diagram_id=diagram_id,
        mu_upper=mu_upper,
        mu_exact=mu_exact,
        width_upper=width_upper,
        width_exact=width_exact,
        witness=witness,
        elapsed=elapsed,
        nodes_explored=nodes,
    )


def unknot_width(diagram: Diagram, gauss_text: str | None = "") -> WidthReport:
    """The zero-crossing round diagram: width 2, one seed, by one seed event."""
    if diagram.n_crossings != 0:
        raise ValueError("unknot_width only applies to the 0-crossing diagram")
    t0 = time.perf_counter()
    state = vacuous_state(diagram)
    _, event = seed_addition(state, 0)
    witness = EventLog(diagram=diagram, events=(event,), gauss_text=gauss_text)
    return _checked_report(
        gauss_text or "unknot", 1, True, 2, True, witness, time.perf_counter() - t0, 0
    )


def wirtinger_number(
    diagram: Diagram, k_max: int | None = None
) -> tuple[int, tuple[int, ...]]:
    """Smallest k such that some k seeds saturate to a full coloring.

    Returns (k, seed set).  Raises :class:`Unresolved` if no subset of at
    most ``k_max`` strands works; with the default ``k_max`` (all strands)
    the search always resolves.
    """
    if diagram.n_crossings == 0:
        return 1, (0,)
    if k_max is None:
        k_max = diagram.n_strands
    k_max = min(k_max, diagram.n_strands)
    seeds = _core.min_seed_subset(_kernel_for(diagram), k_max)
    if seeds is None:
        raise Unresolved(k_max)
    witness = _log_from_seed_tuple(diagram, seeds)
    if len({e.strand for e in witness.events}) != diagram.n_strands:
        raise InvariantViolation(
            f"kernel claimed seed set {seeds} completes but saturation did not"
        )
    return len(seeds), tuple(seeds)


def closure_strands(diagram: Diagram, seeds) -> frozenset[int]:
    """The saturation closure of a seed set (colored strands only, no colors)."""
    if diagram.n_crossings == 0:
        return frozenset({0})
    return frozenset(_core.closure_strands(_kernel_for(diagram), sorted(seeds)))


def lazy_seed_heuristic(
    diagram: Diagram,
    target_seed_count: int = DEFAULT_SEED_TARGET,
    enumeration_budget: int = DEFAULT_HEURISTIC_BUDGET,
    gauss_text: str | None = None,
) -> WidthReport:
    """Best completed sequence over ordered seed tuples with saturation
    between seeds.  Always returns a valid (inexact) report: if no tuple of
    at most ``target_seed_count`` seeds completes within budget, the greedy
    baseline witness is used.
    """
    t0 = time.perf_counter()
    if diagram.n_crossings == 0:
        base = unknot_width(diagram, gauss_text)
        return base

    total, seeds, nodes = _core.heuristic_search(
        _kernel_for(diagram), target_seed_count, enumeration_budget
    )
    if total < _core.INF:
        witness = _log_from_seed_tuple(diagram, seeds, gauss_text)
    else:
        witness = greedy_complete(diagram, gauss_text)
        total = attached_sequence(witness).total
    mu_upper = len(witness.seed_strands())
    return _checked_report(
        gauss_text or "?",
        mu_upper,
        False,
        total,
        False,
        witness,
        time.perf_counter() - t0,
        int(nodes),
    )


def exact_width(
    diagram: Diagram,
    node_budget: int = DEFAULT_NODE_BUDGET,
    gauss_text: str | None = None,
    heuristic_budget: int = DEFAULT_HEURISTIC_BUDGET,
    mu_k_max: int | None = None,
) -> WidthReport:
    """Minimize the attached-sequence total over all completed sequences.

    The heuristic provides the initial upper bound and fallback witness;
    the branch-and-bound then either beats it (returning its own witness)
    or proves it optimal.  If the node budget runs out the report carries
    ``width_exact=False`` and the best heuristic witness, never a guess.
    """
    if diagram.n_crossings == 0:
        return unknot_width(diagram, gauss_text)
    t0 = time.perf_counter()

    # unrestricted seed target: saturating between seeds is never worse than
    # interleaving, so within budget this hint is usually already optimal and
    # the search only has to prove it
    hint = lazy_seed_heuristic(
        diagram, diagram.n_strands, heuristic_budget, gauss_text
    )

    status, value, nodes, events = _core.exact_search(
        _kernel_for(diagram), node_budget, hint.width_upper
    )
    nodes = int(nodes)

    try:
        mu, _ = wirtinger_number(diagram, mu_k_max)
        mu_exact = True
    except Unresolved:
        mu, mu_exact = hint.mu_upper, False

    if status == "budget":
        return _checked_report(
            gauss_text or "?",
            mu,
            mu_exact,
            hint.width_upper,
            False,
            hint.witness,
            time.perf_counter() - t0,
            nodes,
        )
    if status == "at_bound":
        # proven: no sequence beats the heuristic total
        width, witness = hint.width_upper, hint.witness
    else:
        if events is None:
            raise InvariantViolation("optimal-path reconstruction failed")
        width = value
        witness = _materialize_log(diagram, events, gauss_text)
    return _checked_report(
        gauss_text or "?",
        mu,
        mu_exact,
        width,
        True,
        witness,
        time.perf_counter() - t0,
        nodes,
    )


def compute_width(
    diagram: Diagram,
    strategy: str = "auto",
    node_budget: int = DEFAULT_NODE_BUDGET,
    seeds: int = DEFAULT_SEED_TARGET,
    heuristic_budget: int = DEFAULT_HEURISTIC_BUDGET,
    gauss_text: str | None = None,
    exact_threshold: int = 12,
) -> WidthReport:
    """Strategy dispatch used by the CLI and the census pipeline.

    ``auto`` runs the exact search up to ``exact_threshold`` crossings and
    the heuristic above it.
    """
    if diagram.n_crossings == 0:
        return unknot_width(diagram, gauss_text)
    if strategy == "auto":
        strategy = "exact" if diagram.n_crossings <= exact_threshold else "heuristic"
    if strategy == "exact":
        return exact_width(diagram, node_budget, gauss_text, heuristic_budget)
    if strategy == "heuristic":
        report = lazy_seed_heuristic(diagram, seeds, heuristic_budget, gauss_text)
        try:
            mu, _ = wirtinger_number(diagram, k_max=max(seeds, 4))
            if mu <= report.mu_upper:
                report = WidthReport(
                    diagram_id=report.diagram_id,
                    mu_upper=mu,
                    mu_exact=True,
                    width_upper=report.width_upper,
                    width_exact=False,
                    witness=report.witness,
                    elapsed=report.elapsed,
                    nodes_explored=report.nodes_explored,
                )
        except Unresolved:
            pass
        return report
    raise ValueError(f"unknown strategy {strategy!r}")
