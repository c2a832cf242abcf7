"""Structural invariants of the calculus on randomly generated legal logs.

The full 10^4-log acceptance run lives in test_acceptance.py; this module
keeps a faster randomized sweep plus targeted per-invariant checks so a
regression points at the property that broke.
"""

from wirtwidth import (
    attached_sequence,
    diagram_from_text,
    replay_and_verify,
)
from wirtwidth.coloring import check_completed_invariants

from conftest import assert_witness_ok, random_log


def _class_arcs(state):
    n = state.diagram.n_strands
    arcs = {}
    for s, c in enumerate(state.color_of):
        arcs.setdefault(c, set()).add(s)
    return n, arcs


def test_random_logs_pass_full_suite(small_corpus, rng):
    diagrams = {
        name: diagram_from_text(code)
        for name, code in small_corpus.items()
        if diagram_from_text(code).n_crossings >= 1
    }
    for name, diagram in diagrams.items():
        for _ in range(120):
            log = random_log(diagram, rng, gauss_text=small_corpus[name])
            state = replay_and_verify(log)  # runs the suite at every stage
            check_completed_invariants(log, state)
            assert_witness_ok(log)


def test_connectivity_at_every_stage(small_corpus, rng):
    # each color class is a single arc of the strand cycle, at all times
    from wirtwidth import coloring_move, seed_addition, vacuous_state

    for code in list(small_corpus.values())[:6]:
        diagram = diagram_from_text(code)
        if diagram.n_crossings < 2:
            continue
        for _ in range(40):
            log = random_log(diagram, rng)
            state = vacuous_state(diagram)
            for ev in log.events:
                state, _ = (
                    seed_addition(state, ev.strand)
                    if ev.kind == "S"
                    else coloring_move(state, ev.strand, ev.crossing)
                )
                n, arcs = _class_arcs(state)
                for color, members in arcs.items():
                    if color == -1 or len(members) in (0, n):
                        continue
                    succ = sum(1 for s in members if (s + 1) % n in members)
                    assert succ == len(members) - 1, (code, color, members)


def test_balance_and_prefix(small_corpus, rng):
    for code in small_corpus.values():
        diagram = diagram_from_text(code)
        if diagram.n_crossings < 1:
            continue
        for _ in range(60):
            log = random_log(diagram, rng)
            seeds = log.seed_strands()
            mcs = log.multicolored_crossings()
            att = attached_sequence(log)
            assert all(v >= 0 for v in att.values), code
            if len(seeds) >= 2:
                assert len(seeds) == len(mcs), code
                assert att.values[-1] == 0, code
            else:
                assert mcs == (), code


def test_height_inequalities(small_corpus, rng):
    # multi-colored crossings sit below their three strands; at every other
    # crossing the over-strand sits above the lower under-strand
    for code in small_corpus.values():
        diagram = diagram_from_text(code)
        if diagram.n_crossings < 1:
            continue
        for _ in range(60):
            log = random_log(diagram, rng)
            if len(log.seed_strands()) < 2:
                continue
            pos = log.delta_positions()
            h = {("s", s): -pos[("s", s)] for s in range(diagram.n_strands)}
            mcs = set(log.multicolored_crossings())
            for c in range(diagram.n_crossings):
                a, b = diagram.under_pair[c]
                v = diagram.over_strand[c]
                if c in mcs:
                    assert -pos[("x", c)] < min(
                        h[("s", a)], h[("s", b)], h[("s", v)]
                    ), code
                else:
                    assert h[("s", v)] > min(h[("s", a)], h[("s", b)]), code


def test_unique_peak_per_class(small_corpus, rng):
    for code in small_corpus.values():
        diagram = diagram_from_text(code)
        n = diagram.n_strands
        if diagram.n_crossings < 2:
            continue
        for _ in range(40):
            log = random_log(diagram, rng)
            state = replay_and_verify(log)
            pos = log.delta_positions()
            _, arcs = _class_arcs(state)
            for members in arcs.values():
                if len(members) == n:
                    continue
                start = next(s for s in members if (s - 1) % n not in members)
                arc = [start]
                while len(arc) < len(members):
                    arc.append((arc[-1] + 1) % n)
                heights = [-pos[("s", s)] for s in arc]
                peaks = sum(
                    1
                    for i, v in enumerate(heights)
                    if (i == 0 or v > heights[i - 1])
                    and (i == len(heights) - 1 or v > heights[i + 1])
                )
                assert peaks == 1, (code, arc, heights)
