"""The coloring calculus: rules, events, attached sequences, replay."""

import pytest

from wirtwidth import (
    EventLog,
    attached_sequence,
    attached_values,
    coloring_move,
    diagram_from_text,
    legal_moves,
    log_from_base64,
    log_from_text,
    replay_and_verify,
    saturation_moves,
    seed_addition,
    vacuous_state,
)
from wirtwidth.errors import (
    AlreadyColored,
    IllegalEventAtStage,
    IncompleteSequence,
    IneligibleMove,
)

from conftest import FIGURE8, TREFOIL, WORD_28, WORD_32


@pytest.fixture
def trefoil():
    return diagram_from_text(TREFOIL)


def seeded_trefoil(trefoil, *strands):
    state = vacuous_state(trefoil)
    events = []
    for s in strands:
        state, ev = seed_addition(state, s)
        events.append(ev)
    return state, events


def test_seed_on_vacuous_state(trefoil):
    state, ev = seed_addition(vacuous_state(trefoil), 0)
    assert state.colors_used == 1
    assert ev.newly_multicolored == ()
    assert state.color_of[0] != -1


def test_two_seeds_no_multicoloring_yet(trefoil):
    # crossing 2 has under-pair (A,B) but its over-strand C is uncolored
    state, _ = seeded_trefoil(trefoil, 0, 1)
    assert state.multicolored == frozenset()


def test_third_seed_multicolors_everything(trefoil):
    state, events = seeded_trefoil(trefoil, 0, 1, 2)
    assert events[-1].newly_multicolored == (0, 1, 2)
    assert state.multicolored == frozenset({0, 1, 2})


def test_coloring_move_example(trefoil):
    state, events = seeded_trefoil(trefoil, 0, 1)
    state, ev = coloring_move(state, 2, 1)
    # C inherits B's color across over-strand A; crossings 1 and 3 become
    # multi-colored, crossing 2 itself stays single-colored
    assert ev.source == 1
    assert ev.newly_multicolored == (0, 2)
    assert state.color_of[2] == state.color_of[1]
    assert 1 not in state.multicolored


def test_move_preconditions(trefoil):
    state, _ = seeded_trefoil(trefoil, 0)
    # over-strand of crossing 1 is A (colored), other under of crossing 1 is B
    with pytest.raises(IneligibleMove):
        coloring_move(state, 2, 1)  # other under-strand 1 uncolored
    state2, _ = seeded_trefoil(trefoil, 0, 1)
    with pytest.raises(AlreadyColored):
        coloring_move(state2, 0, 1)
    with pytest.raises(AlreadyColored):
        seed_addition(state2, 1)
    with pytest.raises(IneligibleMove):
        coloring_move(state2, 2, 5)  # no such crossing
    # move with uncolored over-strand: seed only B, try crossing 2 (over C)
    state3, _ = seeded_trefoil(trefoil, 0)
    with pytest.raises(IneligibleMove):
        coloring_move(state3, 1, 2)


def test_legal_moves(trefoil):
    assert legal_moves(vacuous_state(trefoil)) == []
    state, _ = seeded_trefoil(trefoil, 0, 1)
    assert legal_moves(state) == [(2, 0), (2, 1)]
    state, _ = coloring_move(state, 2, 0)
    assert legal_moves(state) == []


def test_attached_values_words():
    assert attached_values(["s", "s", "mc", "mc"]).values == (2, 4, 2, 0)
    assert attached_values(["s", "s", "mc", "mc"]).total == 8
    assert attached_values(WORD_28).values == (2, 4, 6, 4, 6, 4, 2, 0)
    assert attached_values(WORD_28).total == 28
    assert attached_values(WORD_32).values == (2, 4, 6, 8, 6, 4, 2, 0)
    assert attached_values(WORD_32).total == 32


@pytest.mark.parametrize("b", [1, 2, 3, 4, 5, 6])
def test_attached_values_bridge_pattern(b):
    # b seeds, then all minima: total 2*b^2
    word = ["s"] * b + ["mc"] * b
    assert attached_values(word).total == 2 * b * b


def test_attached_sequence_requires_completion(trefoil):
    _, events = seeded_trefoil(trefoil, 0, 1)
    log = EventLog(diagram=trefoil, events=tuple(events))
    with pytest.raises(IncompleteSequence):
        attached_sequence(log)


def test_trefoil_log_attached(trefoil):
    state, events = seeded_trefoil(trefoil, 0, 1)
    state, ev = coloring_move(state, 2, 1)
    log = EventLog(diagram=trefoil, events=tuple(events) + (ev,))
    att = attached_sequence(log)
    assert att.values == (2, 4, 2, 0)
    assert att.total == 8


def test_replay_and_verify_trefoil(trefoil):
    state, events = seeded_trefoil(trefoil, 0, 1)
    state, ev = coloring_move(state, 2, 1)
    log = EventLog(diagram=trefoil, events=tuple(events) + (ev,))
    final = replay_and_verify(log)
    assert final.colors_used == 2
    assert len(final.multicolored) == 2


def test_replay_rejects_early_move(trefoil):
    bad = log_from_text("S 0\nM 1 0 2 #mc\nS 2\n", trefoil)
    with pytest.raises(IllegalEventAtStage) as exc:
        replay_and_verify(bad)
    assert exc.value.stage == 2


def test_replay_rejects_wrong_annotation(trefoil):
    # the move multi-colors crossings 0 and 2; claim only 0
    bad = log_from_text("S 0\nS 1\nM 2 1 1 #mc 0\n", trefoil)
    with pytest.raises(IllegalEventAtStage):
        replay_and_verify(bad)


def test_unknot_single_seed_completes():
    d = diagram_from_text("")
    log = log_from_text("S 0", d)
    final = replay_and_verify(log)
    assert final.is_complete()
    assert attached_sequence(log).values == (2,)


def test_log_text_roundtrip(trefoil):
    state, events = seeded_trefoil(trefoil, 0, 1)
    state, ev = coloring_move(state, 2, 1)
    log = EventLog(diagram=trefoil, events=tuple(events) + (ev,), gauss_text=TREFOIL)
    text = log.to_text()
    assert "# gauss" in text and "M 2 1 1 #mc 0 2" in text
    # self-contained: diagram rebuilt from the header
    again = log_from_text(text)
    assert again.events == log.events
    assert again.diagram == trefoil
    assert log_from_base64(log.to_base64()).events == log.events


def test_saturation_is_deterministic():
    d = diagram_from_text(FIGURE8)
    state, _ = seed_addition(vacuous_state(d), 0)
    state, _ = seed_addition(state, 1)
    end, moves = saturation_moves(state)
    assert end.is_complete()
    again, moves2 = saturation_moves(state)
    assert [e.strand for e in moves] == [e.strand for e in moves2]


def test_colors_never_change(trefoil, rng):
    from conftest import random_log

    for _ in range(25):
        log = random_log(trefoil, rng)
        state = vacuous_state(trefoil)
        colors = {}
        for ev in log.events:
            state, _ = (
                seed_addition(state, ev.strand)
                if ev.kind == "S"
                else coloring_move(state, ev.strand, ev.crossing)
            )
            for s, c in enumerate(state.color_of):
                if c != -1:
                    assert colors.setdefault(s, c) == c
