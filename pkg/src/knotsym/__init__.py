"""Based symbols of knot diagrams and their algebraic moves.

A knot diagram with a base point is encoded as a set of signed pairs of
labels; Reidemeister moves become explicit rewrites of these symbols, and the
reduced set of a symbol decides knot equality.
"""

from .cycles import ALPHA, DELTA, Cycle, Orientation, all_cycles, cycle, cycle_sense, turn
from .errors import *  # noqa: F401,F403
from .errors import KnotSymbolError
from .formats import from_gauss, parse_gauss, parse_symbol, serialize_symbol
from .moves import (
    GonKind,
    GonWitness,
    all_moves,
    apply_beta,
    apply_iso,
    apply_move,
    apply_omega1_minus,
    apply_omega1_plus,
    apply_omega2_minus,
    apply_omega2_plus,
    apply_omega3,
    bounds_face,
    find_one_gons,
    find_three_gons,
    find_two_gons,
    inverse_shift,
    negative_moves,
    neutral_moves,
    one_gon_at,
    positive_moves,
    room_sense,
    three_gon_at,
    two_gon_at,
)
from .reduce import (
    DEFAULT_CLOSURE_CAP,
    OracleReport,
    compare_with_oracle,
    ReducedSet,
    TraceStep,
    bfs_oracle,
    crossing_number,
    knots_equal,
    minimum_stratum,
    reduce_once,
    reduced_set,
    reduction_trace,
)
from .symbol import EMPTY, Crossing, LabelRing, MainArc, Symbol, canonical_form, symbol_equal, validate

__version__ = "0.1.0"
