"""Exception hierarchy for wirtwidth.

All library errors derive from :class:`WirtwidthError` so callers can catch
one base class.  Batch code (the census pipeline) catches the base class per
row and records the failure instead of aborting.
"""


class WirtwidthError(Exception):
    """Base class for all wirtwidth errors."""


# ---------------------------------------------------------------------------
# Gauss-code parsing and diagram construction


class GaussCodeError(WirtwidthError):
    """Invalid Gauss-code input."""


class MalformedToken(GaussCodeError):
    """A token is not a signed integer or an O/U-prefixed label."""


class LabelCountError(GaussCodeError):
    """A crossing label does not appear exactly twice."""


class EmptyRoleError(GaussCodeError):
    """A crossing label appears twice but never in one of the two roles."""


class DiagramError(WirtwidthError):
    """Structurally invalid diagram."""


class SelfAdjacentStrand(DiagramError):
    """A crossing's two under-strands coincide (the one-crossing kink)."""


class NotAKnot(DiagramError):
    """The strand adjacency relation is not a single cycle."""


# ---------------------------------------------------------------------------
# Coloring calculus


class ColoringError(WirtwidthError):
    """Illegal coloring operation."""


class IneligibleMove(ColoringError):
    """A coloring move whose preconditions fail."""


class AlreadyColored(IneligibleMove):
    """Attempt to color a strand that already has a color."""


class IncompleteSequence(ColoringError):
    """An operation that needs a completed coloring sequence got a partial one."""


class IllegalEventAtStage(ColoringError):
    """Replay of an event log failed at a specific stage."""

    def __init__(self, stage, reason):
        self.stage = stage
        self.reason = reason
        super().__init__(f"illegal event at stage {stage}: {reason}")


class InvariantViolation(WirtwidthError):
    """A structural invariant of the coloring calculus failed.

    Raised by the verifiers; seeing this means a bug or a forged log,
    never a property of valid input.
    """


# ---------------------------------------------------------------------------
# Search and oracle


class SearchError(WirtwidthError):
    """Width/seed search failure."""


class BudgetExhausted(SearchError):
    """A node budget ran out before the search completed."""


class Unresolved(SearchError):
    """No seed subset of size <= k_max colors the whole diagram."""

    def __init__(self, k_max):
        self.k_max = k_max
        super().__init__(f"no seed subset of size <= {k_max} completes the coloring")


class TooLarge(SearchError):
    """Input exceeds the exhaustive oracle's crossing guard."""


# ---------------------------------------------------------------------------
# Lifted-profile verification


class LiftError(WirtwidthError):
    """Morse-profile reconstruction failure."""


class AlternationViolation(LiftError):
    """Profile events do not alternate max/min around the knot."""


class MonotonicityViolation(LiftError):
    """Heights between consecutive critical events are not monotone."""


class DegenerateProfile(LiftError):
    """Profile too small or malformed for a level sweep."""


# ---------------------------------------------------------------------------
# Census pipeline


class CensusError(WirtwidthError):
    """Census input/output failure (aborts the batch)."""


class CertificateError(WirtwidthError):
    """A stored width certificate failed re-verification."""
