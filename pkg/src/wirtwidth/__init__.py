"""wirtwidth: width invariants of knot diagrams via the coloring calculus.

Parse a Gauss code, color the diagram by seed additions and coloring
moves, and minimize the attached-sequence total over completed coloring
sequences.  That minimum (the Wirtinger width of the diagram) equals the
Gabai width of the underlying knot when minimized over its diagrams; the
minimum number of seeds (the Wirtinger number) is likewise an upper bound
for the bridge number.  See README.md for the theory pointers, the
certificate format and the census pipeline.
"""

from ._version import __version__
from .census import CensusRecord, run_census, verify_certificates
from .coloring import (
    AttachedSequence,
    ColoringState,
    Event,
    EventLog,
    attached_sequence,
    attached_values,
    coloring_move,
    legal_moves,
    log_from_base64,
    log_from_text,
    replay_and_verify,
    saturation_moves,
    seed_addition,
    vacuous_state,
)
from .gauss import (
    Diagram,
    GaussCode,
    build_diagram,
    diagram_from_text,
    parse_gauss,
)
from .lift import MorseProfile, build_profile, height_assignment, profile_text, sweep_width
from .oracle import OracleResult, oracle_min_width
from .search import (
    KERNEL,
    WidthReport,
    closure_strands,
    compute_width,
    exact_width,
    greedy_complete,
    lazy_seed_heuristic,
    unknot_width,
    wirtinger_number,
)
from . import errors

__all__ = [
    "AttachedSequence",
    "CensusRecord",
    "ColoringState",
    "Diagram",
    "Event",
    "EventLog",
    "GaussCode",
    "KERNEL",
    "MorseProfile",
    "OracleResult",
    "WidthReport",
    "__version__",
    "attached_sequence",
    "attached_values",
    "build_diagram",
    "build_profile",
    "closure_strands",
    "coloring_move",
    "compute_width",
    "diagram_from_text",
    "errors",
    "exact_width",
    "greedy_complete",
    "height_assignment",
    "lazy_seed_heuristic",
    "legal_moves",
    "log_from_base64",
    "log_from_text",
    "oracle_min_width",
    "parse_gauss",
    "profile_text",
    "replay_and_verify",
    "run_census",
    "saturation_moves",
    "seed_addition",
    "sweep_width",
    "unknot_width",
    "vacuous_state",
    "verify_certificates",
    "wirtinger_number",
]
