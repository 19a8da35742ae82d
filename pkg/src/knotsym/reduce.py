"""Reduced sets: the finite invariant of a symbol's equivalence class.

``reduced_set`` first applies negative moves until none is left, then closes
the result under all neutral moves (changes of base and triangle moves),
descending again whenever the closure uncovers a removable gon.
``bfs_oracle`` is an exponential cross-check that explores every move,
positive ones included, up to an order cap.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

from .errors import ClosureLimitExceeded
from .moves import all_moves, negative_moves, neutral_moves
from .symbol import Symbol

__all__ = [
    "DEFAULT_CLOSURE_CAP",
    "TraceStep",
    "ReducedSet",
    "reduction_trace",
    "reduce_once",
    "reduced_set",
    "crossing_number",
    "knots_equal",
    "bfs_oracle",
    "minimum_stratum",
    "OracleReport",
    "compare_with_oracle",
]

log = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class TraceStep:
    move: str
    result: Symbol


@dataclass(frozen=True)
class ReducedSet:
    """The reduced symbols of a class, sorted."""

    members: tuple
    trace: tuple = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return self.members[0].order

    def __contains__(self, symbol):
        return symbol in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def as_set(self) -> frozenset:
        return frozenset(self.members)


def reduction_trace(symbol: Symbol, rng=None):
    """Apply negative moves until none applies.

    By default the first available move is taken (1-gons before 2-gons,
    ascending arcs); pass a ``random.Random`` to pick uniformly instead.
    Returns ``(final_symbol, [TraceStep, ...])``.
    """
    steps = []
    current = symbol
    while True:
        if rng is None:
            move = next(negative_moves(current), None)
        else:
            options = list(negative_moves(current))
            move = rng.choice(options) if options else None
        if move is None:
            return current, steps
        name, current = move
        steps.append(TraceStep(name, current))


def reduce_once(symbol: Symbol, rng=None) -> Symbol:
    return reduction_trace(symbol, rng)[0]


def _closure(seed: Symbol, step, cap: int) -> dict:
    """Breadth-first closure; maps each symbol to ``(parent, move)``."""
    parents = {seed: None}
    queue = deque([seed])
    while queue:
        current = queue.popleft()
        for name, nxt in step(current):
            if nxt not in parents:
                parents[nxt] = (current, name)
                if len(parents) > cap:
                    raise ClosureLimitExceeded(
                        f"closure from {seed} grew past {cap} symbols"
                    )
                queue.append(nxt)
    return parents


def _path(parents: dict, target: Symbol) -> list:
    steps = []
    while parents[target] is not None:
        parent, name = parents[target]
        steps.append(TraceStep(name, target))
        target = parent
    return steps[::-1]


def reduced_set(symbol: Symbol, cap: int = DEFAULT_CLOSURE_CAP, rng=None,
                faces_only: bool = True, descend: bool = True) -> ReducedSet:
    """Reduce with negative moves, then close under neutral moves.

    A neutral move can expose a new 1-gon or 2-gon, so a member of the
    closure may still admit a negative move.  With ``descend`` (default) the
    reduction restarts from such a member until the closure has none; the
    trace then also lists the neutral moves leading to it.  ``descend=False``
    stops after the first closure.
    """
    start, trace = reduction_trace(symbol, rng)
    trace = list(trace)
    while True:
        parents = _closure(start, lambda s: neutral_moves(s, faces_only), cap)
        if not descend:
            break
        members = sorted(parents)
        if rng is not None:
            rng.shuffle(members)
        exit_ = next((m for m in members if next(negative_moves(m), None)), None)
        if exit_ is None:
            break
        trace += _path(parents, exit_)
        start, more = reduction_trace(exit_, rng)
        trace += more
    return ReducedSet(tuple(sorted(parents)), tuple(trace))


def crossing_number(symbol: Symbol, cap: int = DEFAULT_CLOSURE_CAP) -> int:
    return reduced_set(symbol, cap).order


def knots_equal(a: Symbol, b: Symbol, cap: int = DEFAULT_CLOSURE_CAP) -> bool:
    """True iff the reduced sets coincide.

    ``True`` is reliable; ``False`` is not always: the figure-eight and its
    reverse are one knot, yet their reduced sets are disjoint, because
    passing between their minimal diagrams needs a positive move.
    """
    ra, rb = reduced_set(a, cap).as_set(), reduced_set(b, cap).as_set()
    equal = ra == rb
    if equal != bool(ra & rb):
        # reduced sets of distinct classes should never overlap partially
        log.warning("reduced sets overlap without coinciding: %s vs %s", a, b)
    return equal


def bfs_oracle(symbol: Symbol, order_cap: int, cap: int = DEFAULT_CLOSURE_CAP,
               faces_only: bool = True) -> set:
    """Every symbol reachable from ``symbol`` through moves that never
    exceed ``order_cap`` crossings.

    ``faces_only=False`` also allows Ω3 on triangles that bound no face;
    from the trefoil that already reaches unrealizable order-3 symbols.
    """
    if symbol.order > order_cap:
        raise ValueError(f"seed order {symbol.order} exceeds the cap {order_cap}")
    return set(_closure(symbol, lambda s: all_moves(s, order_cap, faces_only), cap))


def minimum_stratum(symbols) -> frozenset:
    low = min(s.order for s in symbols)
    return frozenset(s for s in symbols if s.order == low)


@dataclass(frozen=True)
class OracleReport:
    """How the oracle's minimum-order stratum compares with the reduced set."""

    seed: Symbol
    order_cap: int
    explored: int
    stratum: frozenset
    reduced: frozenset

    @property
    def agrees(self) -> bool:
        return self.stratum == self.reduced

    @property
    def missing(self) -> frozenset:
        """Minimal symbols the reducer never reaches."""
        return self.stratum - self.reduced

    @property
    def extra(self) -> frozenset:
        return self.reduced - self.stratum

    def summary(self) -> str:
        head = f"cap {self.order_cap}: {self.explored} symbols, stratum {len(self.stratum)}, reduced {len(self.reduced)}"
        if self.agrees:
            return head + ", agree"
        return head + f", {len(self.missing)} missing, {len(self.extra)} extra"


def compare_with_oracle(symbol: Symbol, order_cap: int, cap: int = DEFAULT_CLOSURE_CAP) -> OracleReport:
    found = bfs_oracle(symbol, order_cap, cap)
    return OracleReport(symbol, order_cap, len(found), minimum_stratum(found),
                        reduced_set(symbol, cap).as_set())
