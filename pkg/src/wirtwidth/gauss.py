"""Gauss codes and the incidence structure of knot diagrams.

A knot diagram is stored purely combinatorially: strands are the maximal
arcs between consecutive under-passes of the knot traversal, and every
crossing knows its over-strand and its ordered pair of under-strands.
No planar geometry is kept, and planar realizability is deliberately not
checked: the coloring calculus downstream consults only this incidence
data.  Feeding a non-realizable (virtual) code is allowed and produces
well-defined diagram quantities; interpreting them geometrically is the
caller's responsibility.

Input grammar (also accepted with whitespace instead of commas):

    code   := "" | token ("," token)*
    token  := signed | letter
    signed := ["-"] digits          # negative = under-pass, positive = over-pass
    letter := ("O"|"o"|"U"|"u") digits

The empty code denotes the round zero-crossing unknot diagram.  Labels are
renumbered to 1..n in order of first appearance, so "7,-9,-7,9" and
"1,-2,-1,2" parse to the same code.
"""

from __future__ import annotations

import re
from array import array
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    EmptyRoleError,
    LabelCountError,
    MalformedToken,
    NotAKnot,
    SelfAdjacentStrand,
)

OVER = "O"
UNDER = "U"

_TOKEN_RE = re.compile(r"(-?\+?\d+|[OoUu]\d+)\Z")


@dataclass(frozen=True)
class GaussCode:
    """A validated Gauss code: 2n entries of (label, role).

    Every label in 1..n appears exactly once with role ``O`` and once with
    role ``U``.  ``n == 0`` (no entries) is the unknot round diagram.
    """

    entries: tuple[tuple[int, str], ...]

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    def serialize(self) -> str:
        """Canonical signed-integer form; inverse of :func:`parse_gauss`.

        >>> parse_gauss("u1 o2 u3 o1 u2 o3").serialize()
        '-1,2,-3,1,-2,3'
        """
        return ",".join(
            str(label) if role == OVER else f"-{label}" for label, role in self.entries
        )


def parse_gauss(text: str) -> GaussCode:
    """Parse a Gauss code string into a validated :class:`GaussCode`.

    Labels are renumbered to 1..n preserving first-appearance order.

    >>> parse_gauss("-1,2,-3,1,-2,3").n
    3
    >>> parse_gauss("").n
    0

    Raises :class:`MalformedToken`, :class:`LabelCountError` or
    :class:`EmptyRoleError` on invalid input.
    """
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    raw: list[tuple[int, str]] = []
    for tok in tokens:
        if not _TOKEN_RE.match(tok):
            raise MalformedToken(f"bad token {tok!r}")
        if tok[0] in "OoUu":
            role = OVER if tok[0] in "Oo" else UNDER
            label = int(tok[1:])
        else:
            value = int(tok)
            role = UNDER if value < 0 else OVER
            label = abs(value)
        if label == 0:
            raise MalformedToken("crossing label 0 is not allowed")
        raw.append((label, role))

    order: dict[int, int] = {}
    counts: dict[int, dict[str, int]] = {}
    for label, role in raw:
        if label not in order:
            order[label] = len(order) + 1
            counts[label] = {OVER: 0, UNDER: 0}
        counts[label][role] += 1

    for label, c in counts.items():
        if c[OVER] + c[UNDER] != 2:
            raise LabelCountError(
                f"label {label} appears {c[OVER] + c[UNDER]} times, expected 2"
            )
        if c[OVER] == 0 or c[UNDER] == 0:
            missing = OVER if c[OVER] == 0 else UNDER
            raise EmptyRoleError(f"label {label} never appears with role {missing}")

    entries = tuple((order[label], role) for label, role in raw)
    return GaussCode(entries=entries)


@dataclass(frozen=True)
class Diagram:
    """Incidence structure of a knot diagram.

    Strands and crossings are numbered 0..n-1.  Strand ids follow the knot
    traversal: strand ``s`` runs from the s-th under-pass to the next one,
    so the two under-strands of any crossing are consecutive strand ids and
    the adjacency relation is the cycle 0,1,...,n-1 (verified at build).

    ``n_crossings == 0`` is the round unknot diagram: one closed strand,
    empty crossing maps.
    """

    n_crossings: int
    n_strands: int
    # crossing -> strand whose interior carries the over-pass
    over_strand: tuple[int, ...]
    # crossing -> (strand whose under-pass ends here, strand that begins here)
    under_pair: tuple[tuple[int, int], ...]
    # strand -> (crossing where it begins, crossing where it ends)
    strand_endpoints: tuple[tuple[int, int], ...]

    def adjacent_strands(self, s: int) -> tuple[int, int]:
        """The two strands sharing an under-crossing with ``s``."""
        n = self.n_strands
        return ((s - 1) % n, (s + 1) % n)

    def boundary_crossing(self, s: int) -> int:
        """The crossing where strand ``s`` and its successor are the under-pair."""
        return self.strand_endpoints[s][1]

    def over_crossings(self, s: int) -> tuple[int, ...]:
        """Crossings at which strand ``s`` is the over-strand."""
        return _over_index(self)[s]

    def incident_crossings(self, s: int) -> tuple[int, ...]:
        """Distinct crossings touching strand ``s`` in any role, ascending."""
        if self.n_crossings == 0:
            return ()
        found = set(self.strand_endpoints[s])
        found.update(_over_index(self)[s])
        return tuple(sorted(found))


@lru_cache(maxsize=None)
def _over_index(diagram: Diagram) -> tuple[tuple[int, ...], ...]:
    per: list[list[int]] = [[] for _ in range(diagram.n_strands)]
    for c, s in enumerate(diagram.over_strand):
        per[s].append(c)
    return tuple(tuple(v) for v in per)


@lru_cache(maxsize=None)
def diagram_arrays(diagram: Diagram) -> dict:
    """Flat typed arrays consumed by the kernel module.

    Layout: ``u_prev``/``u_next``/``over`` indexed by crossing, ``end0``/
    ``end1`` by strand, plus a CSR index of over-crossings per strand.
    """
    n = diagram.n_crossings
    u_prev = array("i", (diagram.under_pair[c][0] for c in range(n)))
    u_next = array("i", (diagram.under_pair[c][1] for c in range(n)))
    over = array("i", diagram.over_strand)
    end0 = array("i", (diagram.strand_endpoints[s][0] for s in range(n)))
    end1 = array("i", (diagram.strand_endpoints[s][1] for s in range(n)))
    over_start = array("i", [0] * (n + 1))
    idx = _over_index(diagram)
    flat: list[int] = []
    for s in range(n):
        over_start[s] = len(flat)
        flat.extend(idx[s])
    over_start[n] = len(flat)
    over_list = array("i", flat)
    return {
        "n": n,
        "u_prev": u_prev,
        "u_next": u_next,
        "over": over,
        "end0": end0,
        "end1": end1,
        "over_start": over_start,
        "over_list": over_list,
    }


def build_diagram(code: GaussCode) -> Diagram:
    """Build the strand/crossing incidence structure of a Gauss code.

    >>> d = build_diagram(parse_gauss("-1,2,-3,1,-2,3"))
    >>> d.n_strands, d.under_pair[0], d.over_strand[1]
    (3, (2, 0), 0)

    Raises :class:`SelfAdjacentStrand` for the one-crossing kink (the only
    diagram whose under-strands at a crossing coincide) and :class:`NotAKnot`
    if the adjacency relation is not a single cycle.
    """
    n = code.n
    if n == 0:
        return Diagram(
            n_crossings=0,
            n_strands=1,
            over_strand=(),
            under_pair=(),
            strand_endpoints=((),),  # type: ignore[arg-type]
        )

    under_pos = [p for p, (_, role) in enumerate(code.entries) if role == UNDER]
    crossing_at = {p: code.entries[p][0] - 1 for p in under_pos}

    end0 = [0] * n
    end1 = [0] * n
    for s in range(n):
        end0[s] = crossing_at[under_pos[s]]
        end1[s] = crossing_at[under_pos[(s + 1) % n]]

    under_pair: list[tuple[int, int]] = [(-1, -1)] * n
    for s in range(n):
        c = end0[s]
        under_pair[c] = ((s - 1) % n, s)

    over_strand = [-1] * n
    for p, (label, role) in enumerate(code.entries):
        if role == OVER:
            # the strand covering position p starts at the greatest under-pass
            # position <= p; anything before the first under-pass is on the
            # wrap-around strand n-1
            idx = bisect_right(under_pos, p) - 1
            over_strand[label - 1] = idx if idx >= 0 else n - 1

    for c in range(n):
        a, b = under_pair[c]
        if a == b:
            raise SelfAdjacentStrand(
                f"crossing {c}: both under-strands are strand {a}"
            )

    # adjacency must be one cycle through all strands
    seen = set()
    s = 0
    for _ in range(n):
        if s in seen:
            raise NotAKnot("strand adjacency splits into multiple cycles")
        seen.add(s)
        s = under_pair[end1[s]][1]
    if s != 0 or len(seen) != n:
        raise NotAKnot("strand adjacency is not a single cycle")

    return Diagram(
        n_crossings=n,
        n_strands=n,
        over_strand=tuple(over_strand),
        under_pair=tuple(under_pair),
        strand_endpoints=tuple(zip(end0, end1)),
    )


def diagram_from_text(text: str) -> Diagram:
    """Shorthand for ``build_diagram(parse_gauss(text))``."""
    return build_diagram(parse_gauss(text))
