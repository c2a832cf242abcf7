"""Independent width recomputation through the lifted Morse profile.

A completed log assigns every colored strand and multi-colored crossing a
height (minus its position in the stage ordering).  Lifting the diagram
so each element sits at its height produces an embedding whose only
critical points are one maximum per seed strand and one minimum per
multi-colored crossing.  This module rebuilds exactly that critical-event
profile by walking the knot and recomputes the width as a level sweep:
sort the critical heights, count the arcs crossing each regular level
between consecutive critical values, and sum.

The sweep never consults the attached sequence, which is the point: for
every witness the two totals must agree, and a mismatch means a forged
log or a bug, never valid output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EventLog, replay_and_verify
from .errors import (
    AlternationViolation,
    DegenerateProfile,
    MonotonicityViolation,
)

MAX = "max"
MIN = "min"


def height_assignment(log: EventLog) -> dict:
    """Injective heights for every colored strand and multi-colored crossing:
    minus the element's position in the stage-respecting enumeration.

    Keys are ``("s", strand)`` and ``("x", crossing)``.
    """
    return {key: -t for key, t in log.delta_positions().items()}


@dataclass(frozen=True)
class CriticalEvent:
    kind: str  # MAX at a seed strand, MIN at a multi-colored crossing
    element: int  # strand id or crossing id
    height: int
    # "s" when element is a strand, "x" when it is a crossing
    element_kind: str = "s"


@dataclass(frozen=True)
class MorseProfile:
    """Critical events in the cyclic order they are met along the knot."""

    events: tuple[CriticalEvent, ...]

    def heights(self) -> tuple[int, ...]:
        return tuple(e.height for e in self.events)


def build_profile(log: EventLog) -> MorseProfile:
    """Walk the strand cycle emitting one maximum per class height peak and
    one minimum per multi-colored crossing passed.

    The class peaks must be exactly the seed strands, the events must
    alternate max/min around the cycle, and the heights between
    consecutive events must change monotonically; any failure raises,
    since a verified log cannot produce it.
    """
    state = replay_and_verify(log)
    diagram = log.diagram
    n = diagram.n_strands

    if diagram.n_crossings == 0:
        seed = log.seed_strands()[0]
        return MorseProfile(events=(CriticalEvent(MAX, seed, -1),))

    if not state.is_complete():
        raise DegenerateProfile("profile needs a completed log")
    heights = height_assignment(log)

    seeds = set(log.seed_strands())
    mcs = set(log.multicolored_crossings())
    h_strand = {s: heights[("s", s)] for s in range(n)}

    if len(set(state.color_of)) < 2:
        # A single color floods the whole cycle: no multi-colored crossings,
        # so the lifted circle has one peak at the seed and one valley at the
        # lowest strand, where the two descending runs meet.  Its sweep is 2,
        # matching the attached total of a one-seed log.
        (seed,) = seeds
        valley = min(range(n), key=lambda s: h_strand[s])
        return MorseProfile(
            events=(
                CriticalEvent(MAX, seed, h_strand[seed], "s"),
                CriticalEvent(MIN, valley, h_strand[valley], "s"),
            )
        )

    # the height peak of each color class must sit at its seed strand
    for s in range(n):
        left, right = diagram.adjacent_strands(s)
        color = state.color_of[s]
        higher_neighbor = any(
            state.color_of[t] == color and h_strand[t] > h_strand[s]
            for t in (left, right)
        )
        if (not higher_neighbor) != (s in seeds):
            raise AlternationViolation(
                f"strand {s}: class height peak and seed status disagree"
            )

    events = []
    walk = []  # (height, is_critical) for the monotonicity check
    for s in range(n):
        is_seed = s in seeds
        if is_seed:
            events.append(CriticalEvent(MAX, s, h_strand[s], "s"))
        walk.append((h_strand[s], is_seed))
        c = diagram.boundary_crossing(s)
        if c in mcs:
            h_c = heights[("x", c)]
            events.append(CriticalEvent(MIN, c, h_c, "x"))
            walk.append((h_c, True))

    if len(events) != 2 * len(seeds):
        raise AlternationViolation(
            f"{len(seeds)} maxima but {len(events) - len(seeds)} minima"
        )
    for i, e in enumerate(events):
        succ = events[(i + 1) % len(events)]
        if e.kind == succ.kind:
            raise AlternationViolation(
                f"consecutive critical events both {e.kind}"
            )

    # between consecutive critical events the traversed heights are monotone
    k = len(walk)
    crit_idx = [i for i, (_, crit) in enumerate(walk) if crit]
    for a, b in zip(crit_idx, crit_idx[1:] + [crit_idx[0] + k]):
        run = [walk[i % k][0] for i in range(a, b + 1)]
        ups = [x < y for x, y in zip(run, run[1:])]
        if any(ups) and not all(ups):
            raise MonotonicityViolation(
                f"heights {run} between critical events are not monotone"
            )

    return MorseProfile(events=tuple(events))


def sweep_width(profile: MorseProfile) -> int:
    """Sum over regular levels (one per gap between consecutive critical
    heights) of the number of profile arcs crossing that level.

    The single-maximum profile of the round unknot diagram sweeps to 2 by
    convention (its one arc is the whole circle).
    """
    events = profile.events
    if not events:
        raise DegenerateProfile("empty profile")
    if len(events) == 1:
        if events[0].kind != MAX:
            raise DegenerateProfile("single-event profile must be a maximum")
        return 2
    if len(events) % 2 != 0:
        raise DegenerateProfile(f"odd event count {len(events)}")

    heights = sorted((e.height for e in events), reverse=True)
    arcs = [
        (e.height, events[(i + 1) % len(events)].height)
        for i, e in enumerate(events)
    ]
    total = 0
    for upper, lower in zip(heights, heights[1:]):
        # any level strictly between two consecutive critical heights
        level = (upper + lower) / 2.0
        total += sum(1 for a, b in arcs if min(a, b) < level < max(a, b))
    return total


def profile_text(profile: MorseProfile) -> str:
    """Plain-text export: one critical event per line, then a blank line and
    the plot-ready polyline (walk index, height) of the cyclic profile."""
    lines = [
        f"{e.kind} {e.element_kind}{e.element} {e.height}" for e in profile.events
    ]
    lines.append("")
    pts = list(profile.events) + [profile.events[0]]
    lines.extend(f"{i},{e.height}" for i, e in enumerate(pts))
    return "\n".join(lines) + "\n"
