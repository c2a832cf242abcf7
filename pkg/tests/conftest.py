"""Shared fixtures: the bundled corpus, random legal logs, witness checks."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from wirtwidth import (
    EventLog,
    attached_sequence,
    build_profile,
    coloring_move,
    diagram_from_text,
    legal_moves,
    replay_and_verify,
    seed_addition,
    sweep_width,
    vacuous_state,
)
from wirtwidth.census import read_census_input

DATA = Path(__file__).resolve().parent.parent / "src" / "wirtwidth" / "data"

TREFOIL = "-1,2,-3,1,-2,3"
FIGURE8 = "-1,2,-3,4,-2,1,-4,3"

# the two four-seed event words used throughout the width arithmetic tests
WORD_28 = ["s", "s", "s", "mc", "s", "mc", "mc", "mc"]
WORD_32 = ["s", "s", "s", "s", "mc", "mc", "mc", "mc"]


@pytest.fixture(scope="session")
def corpus():
    """All bundled named codes as {name: code_text}."""
    return dict(read_census_input(DATA / "codes.txt"))


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Bundled codes with at most 7 crossings (the oracle regime)."""
    out = {}
    for name, code in corpus.items():
        diagram = diagram_from_text(code)
        if diagram.n_crossings <= 7:
            out[name] = code
    return out


@pytest.fixture(scope="session")
def large_sample_rows():
    return read_census_input(DATA / "sample_large.tsv")


def random_log(diagram, rng, move_bias=0.8, gauss_text=None) -> EventLog:
    """A uniform-ish random completed coloring sequence.

    With probability ``move_bias`` a random legal coloring move is applied
    when one exists, otherwise a random seed addition; this keeps seed
    counts low enough to exercise the multi-coloring machinery.
    """
    state = vacuous_state(diagram)
    events = []
    while not state.is_complete():
        moves = legal_moves(state)
        uncolored = [s for s, c in enumerate(state.color_of) if c == -1]
        if moves and (rng.random() < move_bias or not uncolored):
            state, ev = coloring_move(state, *rng.choice(moves))
        else:
            state, ev = seed_addition(state, rng.choice(uncolored))
        events.append(ev)
    return EventLog(diagram=diagram, events=tuple(events), gauss_text=gauss_text)


def assert_witness_ok(log: EventLog, expected_width: int | None = None) -> int:
    """Full certificate check: replay (invariant suite included), attached
    total, and the independent profile sweep; returns the width."""
    replay_and_verify(log)
    total = attached_sequence(log).total
    if expected_width is not None:
        assert total == expected_width, f"witness total {total} != {expected_width}"
    swept = sweep_width(build_profile(log))
    assert swept == total, f"profile sweep {swept} != attached total {total}"
    return total


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
