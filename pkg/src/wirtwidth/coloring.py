"""The partial-coloring calculus on knot diagrams.

Two rules extend a partial coloring: a *seed addition* gives an uncolored
strand a brand-new color, and a *coloring move* copies the color of one
under-strand of a crossing to the other, provided the over-strand is
already colored.  A crossing becomes *multi-colored* once its over-strand
and both under-strands are colored and the under colors differ.

A completed sequence of these events determines an even running level:
+2 per seed, -2 per multi-colored crossing, starting at 2.  The sum of the
level over all those events is the width of the sequence; minimizing it
over all completed sequences is what the search module does.

Everything here is a value-style state machine: states are immutable,
operations return (new_state, event), and :func:`replay_and_verify` is the
independent certifier every search result is pushed through.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass, field

from .errors import (
    AlreadyColored,
    IllegalEventAtStage,
    IncompleteSequence,
    IneligibleMove,
    InvariantViolation,
)
from .gauss import Diagram, diagram_from_text

UNCOLORED = -1

SEED = "S"
MOVE = "M"


@dataclass(frozen=True)
class Event:
    """One extension of the coloring, with the crossings it multi-colored.

    ``newly_multicolored`` lists, in ascending crossing id, the crossings
    whose third incident strand was colored by this event and whose under
    colors differ.
    """

    kind: str
    strand: int
    source: int | None = None
    crossing: int | None = None
    newly_multicolored: tuple[int, ...] = ()

    def to_line(self) -> str:
        if self.kind == SEED:
            head = f"S {self.strand}"
        else:
            head = f"M {self.strand} {self.source} {self.crossing}"
        if self.newly_multicolored:
            head += " #mc " + " ".join(str(c) for c in self.newly_multicolored)
        return head


@dataclass(frozen=True)
class ColoringState:
    """A partial coloring plus multi-colored bookkeeping.

    ``color_of[s]`` is the strand's color (its seeding stage number) or
    ``UNCOLORED``.  Colors are only ever compared for equality.
    """

    diagram: Diagram
    color_of: tuple[int, ...]
    colors_used: int
    multicolored: frozenset[int]
    stage: int

    @property
    def colored_count(self) -> int:
        return sum(1 for c in self.color_of if c != UNCOLORED)

    def is_complete(self) -> bool:
        return all(c != UNCOLORED for c in self.color_of)


def vacuous_state(diagram: Diagram) -> ColoringState:
    return ColoringState(
        diagram=diagram,
        color_of=(UNCOLORED,) * diagram.n_strands,
        colors_used=0,
        multicolored=frozenset(),
        stage=0,
    )


def _detect_new_multicolored(
    diagram: Diagram, color_of: tuple[int, ...], strand: int
) -> tuple[int, ...]:
    # Only crossings incident to the newly colored strand can change status,
    # since becoming multi-colored needs all three incident strands colored.
    new = []
    for c in diagram.incident_crossings(strand):
        a, b = diagram.under_pair[c]
        v = diagram.over_strand[c]
        if (
            color_of[a] != UNCOLORED
            and color_of[b] != UNCOLORED
            and color_of[v] != UNCOLORED
            and color_of[a] != color_of[b]
        ):
            new.append(c)
    return tuple(new)


def seed_addition(state: ColoringState, strand: int) -> tuple[ColoringState, Event]:
    """Color ``strand`` with a fresh color (the new stage number)."""
    if state.color_of[strand] != UNCOLORED:
        raise AlreadyColored(f"strand {strand} already has a color")
    stage = state.stage + 1
    color_of = tuple(
        stage if s == strand else c for s, c in enumerate(state.color_of)
    )
    new_mc = _detect_new_multicolored(state.diagram, color_of, strand)
    event = Event(kind=SEED, strand=strand, newly_multicolored=new_mc)
    next_state = ColoringState(
        diagram=state.diagram,
        color_of=color_of,
        colors_used=state.colors_used + 1,
        multicolored=state.multicolored | set(new_mc),
        stage=stage,
    )
    return next_state, event


def move_eligibility(state: ColoringState, strand: int, crossing: int) -> str | None:
    """Reason the coloring move is illegal, or None if it is allowed."""
    diagram = state.diagram
    if not 0 <= strand < diagram.n_strands:
        return f"no strand {strand}"
    if not 0 <= crossing < diagram.n_crossings:
        return f"no crossing {crossing}"
    if state.color_of[strand] != UNCOLORED:
        return f"target strand {strand} already colored"
    a, b = diagram.under_pair[crossing]
    if strand not in (a, b):
        return f"strand {strand} is not an under-strand of crossing {crossing}"
    other = b if strand == a else a
    if state.color_of[other] == UNCOLORED:
        return f"other under-strand {other} of crossing {crossing} is uncolored"
    v = diagram.over_strand[crossing]
    if state.color_of[v] == UNCOLORED:
        return f"over-strand {v} of crossing {crossing} is uncolored"
    return None


def coloring_move(
    state: ColoringState, strand: int, crossing: int
) -> tuple[ColoringState, Event]:
    """Extend the color of the other under-strand of ``crossing`` to ``strand``."""
    if state.color_of[strand] != UNCOLORED:
        raise AlreadyColored(f"strand {strand} already has a color")
    reason = move_eligibility(state, strand, crossing)
    if reason is not None:
        raise IneligibleMove(reason)
    a, b = state.diagram.under_pair[crossing]
    source = b if strand == a else a
    color = state.color_of[source]
    color_of = tuple(
        color if s == strand else c for s, c in enumerate(state.color_of)
    )
    new_mc = _detect_new_multicolored(state.diagram, color_of, strand)
    event = Event(
        kind=MOVE,
        strand=strand,
        source=source,
        crossing=crossing,
        newly_multicolored=new_mc,
    )
    next_state = ColoringState(
        diagram=state.diagram,
        color_of=color_of,
        colors_used=state.colors_used,
        multicolored=state.multicolored | set(new_mc),
        stage=state.stage + 1,
    )
    return next_state, event


def legal_moves(state: ColoringState) -> list[tuple[int, int]]:
    """All (strand, crossing) pairs where a coloring move is allowed.

    Deterministic order: by strand id, then crossing id.
    """
    out = []
    diagram = state.diagram
    for s in range(diagram.n_strands):
        if state.color_of[s] != UNCOLORED:
            continue
        for c in sorted(set(diagram.strand_endpoints[s])):
            if move_eligibility(state, s, c) is None:
                out.append((s, c))
    return out


def apply_event(state: ColoringState, event: Event) -> tuple[ColoringState, Event]:
    if event.kind == SEED:
        return seed_addition(state, event.strand)
    if event.kind == MOVE:
        return coloring_move(state, event.strand, event.crossing)
    raise IneligibleMove(f"unknown event kind {event.kind!r}")


def saturation_moves(state: ColoringState) -> tuple[ColoringState, list[Event]]:
    """Apply coloring moves until none is legal.

    Scan order is fixed (ascending strand, then crossing, restarting after
    every applied move), so the produced event list is deterministic.  The
    kernel module mirrors this exact rule; keep the two in sync.
    """
    events = []
    while True:
        moves = legal_moves(state)
        if not moves:
            return state, events
        s, c = moves[0]
        state, ev = coloring_move(state, s, c)
        events.append(ev)


# ---------------------------------------------------------------------------
# Event logs


@dataclass(frozen=True)
class EventLog:
    """An ordered record of seed additions and coloring moves on a diagram."""

    diagram: Diagram
    events: tuple[Event, ...]
    gauss_text: str | None = field(default=None, compare=False)

    def seed_strands(self) -> tuple[int, ...]:
        return tuple(e.strand for e in self.events if e.kind == SEED)

    def multicolored_crossings(self) -> tuple[int, ...]:
        out = []
        for e in self.events:
            out.extend(e.newly_multicolored)
        return tuple(out)

    def word(self) -> list[str]:
        """The induced word over {'s', 'mc'}, one token per level change."""
        w = []
        for e in self.events:
            if e.kind == SEED:
                w.append("s")
            w.extend("mc" for _ in e.newly_multicolored)
        return w

    def delta_positions(self) -> dict[tuple[str, int], int]:
        """Position of every colored strand and multi-colored crossing in the
        stage-respecting enumeration; the height function is minus this."""
        pos: dict[tuple[str, int], int] = {}
        t = 0
        for e in self.events:
            t += 1
            pos[("s", e.strand)] = t
            for c in e.newly_multicolored:
                t += 1
                pos[("x", c)] = t
        return pos

    def to_text(self) -> str:
        lines = []
        if self.gauss_text is not None:
            lines.append(f"# gauss {self.gauss_text}")
        lines.extend(e.to_line() for e in self.events)
        return "\n".join(lines) + "\n"

    def to_base64(self) -> str:
        return base64.b64encode(self.to_text().encode("ascii")).decode("ascii")


def log_from_text(text: str, diagram: Diagram | None = None) -> EventLog:
    """Parse the one-event-per-line witness format.

    A ``# gauss <code>`` header makes the log self-contained; if present and
    no diagram is given, the diagram is rebuilt from it.
    """
    gauss_text = None
    events = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("gauss"):
                gauss_text = body[5:].strip()
            continue
        head, _, mc_part = line.partition("#mc")
        fields = head.split()
        mcs = tuple(int(x) for x in mc_part.split()) if mc_part.strip() else ()
        if fields[0] == SEED and len(fields) == 2:
            events.append(
                Event(kind=SEED, strand=int(fields[1]), newly_multicolored=mcs)
            )
        elif fields[0] == MOVE and len(fields) == 4:
            events.append(
                Event(
                    kind=MOVE,
                    strand=int(fields[1]),
                    source=int(fields[2]),
                    crossing=int(fields[3]),
                    newly_multicolored=mcs,
                )
            )
        else:
            raise IllegalEventAtStage(len(events), f"unparseable line {line!r}")
    if diagram is None:
        if gauss_text is None:
            raise IllegalEventAtStage(0, "no diagram given and no gauss header")
        diagram = diagram_from_text(gauss_text)
    return EventLog(diagram=diagram, events=tuple(events), gauss_text=gauss_text)


def log_from_base64(data: str, diagram: Diagram | None = None) -> EventLog:
    return log_from_text(base64.b64decode(data).decode("ascii"), diagram)


# ---------------------------------------------------------------------------
# Attached sequences


@dataclass(frozen=True)
class AttachedSequence:
    """The running level recorded at each seed and multi-colored crossing."""

    values: tuple[int, ...]
    total: int


def attached_values(word) -> AttachedSequence:
    """Level arithmetic on a bare event word over {'s', 'mc'}.

    >>> attached_values(["s", "s", "mc", "mc"]).values
    (2, 4, 2, 0)
    >>> attached_values(["s", "s", "s", "mc", "s", "mc", "mc", "mc"]).total
    28
    """
    level = 0
    values = []
    for token in word:
        if token == "s":
            level += 2
        elif token == "mc":
            level -= 2
        else:
            raise ValueError(f"unknown word token {token!r}")
        values.append(level)
    return AttachedSequence(values=tuple(values), total=sum(values))


def attached_sequence(log: EventLog) -> AttachedSequence:
    """The attached sequence of a completed log.

    One value per seed or multi-colored crossing, in stage order; crossings
    multi-colored at the same stage contribute a fixed sum regardless of how
    the tie is broken.
    """
    seen = set()
    for e in log.events:
        seen.add(e.strand)
    if len(seen) != log.diagram.n_strands:
        raise IncompleteSequence(
            f"log colors {len(seen)} of {log.diagram.n_strands} strands"
        )
    return attached_values(log.word())


# ---------------------------------------------------------------------------
# Replay verification and the invariant suite


def _class_members(state: ColoringState, color: int) -> list[int]:
    return [s for s, c in enumerate(state.color_of) if c == color]


def _is_contiguous_on_cycle(members: list[int], n: int) -> bool:
    size = len(members)
    if size in (0, n):
        return True
    mem = set(members)
    succ = sum(1 for s in members if (s + 1) % n in mem)
    return succ == size - 1


def _arc_in_order(members: list[int], n: int) -> list[int]:
    """Members of a contiguous class, walked along the strand cycle."""
    if len(members) == n:
        return list(range(n))
    mem = set(members)
    start = next(s for s in members if (s - 1) % n not in mem)
    out = [start]
    while len(out) < len(members):
        out.append((out[-1] + 1) % n)
    return out


def _local_maxima_count(values: list[int]) -> int:
    m = len(values)
    if m == 1:
        return 1
    count = 0
    for i, v in enumerate(values):
        left = values[i - 1] if i > 0 else None
        right = values[i + 1] if i < m - 1 else None
        if (left is None or v > left) and (right is None or v > right):
            count += 1
    return count


def check_completed_invariants(log: EventLog, state: ColoringState) -> None:
    """Structural facts every completed log must satisfy.

    Checks, for any number of colors: every attached value is non-negative
    and every class is one arc with a single height peak.  With at least two
    colors it additionally checks the seed/multi-colored balance and the
    height inequalities at crossings.  One-color completed logs only occur
    on diagrams a single seed can flood; the other checks are vacuous there
    and the multi-colored set must be empty.
    """
    diagram = log.diagram
    n = diagram.n_strands
    seeds = log.seed_strands()
    mcs = log.multicolored_crossings()
    att = attached_sequence(log)

    if any(v < 0 for v in att.values):
        raise InvariantViolation(f"negative attached value in {att.values}")

    pos = log.delta_positions()
    h_strand = {s: -pos[("s", s)] for s in range(n)}

    colors = sorted(set(state.color_of))
    for color in colors:
        members = _class_members(state, color)
        if not _is_contiguous_on_cycle(members, n):
            raise InvariantViolation(f"color class {color} is not connected")
        if len(members) < n:
            arc = _arc_in_order(members, n)
            peaks = _local_maxima_count([h_strand[s] for s in arc])
            if peaks != 1:
                raise InvariantViolation(
                    f"color class {color} has {peaks} height peaks, expected 1"
                )

    if len(colors) == 1:
        if mcs:
            raise InvariantViolation(
                "single-color completed log has multi-colored crossings"
            )
        return

    if len(seeds) != len(mcs):
        raise InvariantViolation(
            f"{len(seeds)} seeds but {len(mcs)} multi-colored crossings"
        )
    if att.values[-1] != 0:
        raise InvariantViolation(f"final attached value {att.values[-1]} != 0")

    mc_set = set(mcs)
    for c in range(diagram.n_crossings):
        a, b = diagram.under_pair[c]
        v = diagram.over_strand[c]
        if c in mc_set:
            h_c = -pos[("x", c)]
            if h_c >= min(h_strand[a], h_strand[b], h_strand[v]):
                raise InvariantViolation(
                    f"multi-colored crossing {c} not below its strands"
                )
        else:
            if h_strand[v] <= min(h_strand[a], h_strand[b]):
                raise InvariantViolation(
                    f"crossing {c}: over-strand not above the lower under-strand"
                )


def replay_and_verify(log: EventLog) -> ColoringState:
    """Re-execute a log checking every precondition and invariant.

    Checks at every stage: the event is legal, its recorded multi-colorings
    match recomputation, and the touched color class stays a single arc.
    On a completed log the full suite of :func:`check_completed_invariants`
    runs as well.  Returns the final state.
    """
    state = vacuous_state(log.diagram)
    n = log.diagram.n_strands
    for t, event in enumerate(log.events, start=1):
        try:
            state, replayed = apply_event(state, event)
        except (IneligibleMove, AlreadyColored) as exc:
            raise IllegalEventAtStage(t, str(exc)) from exc
        if replayed.newly_multicolored != event.newly_multicolored:
            raise IllegalEventAtStage(
                t,
                f"recorded multi-colorings {event.newly_multicolored} != "
                f"recomputed {replayed.newly_multicolored}",
            )
        members = _class_members(state, state.color_of[event.strand])
        if not _is_contiguous_on_cycle(members, n):
            raise IllegalEventAtStage(
                t, f"color class of strand {event.strand} disconnected"
            )
    if state.is_complete() and log.events:
        check_completed_invariants(log, state)
    return state
