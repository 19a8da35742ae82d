"""Turns and cycles of a symbol.

Walking along a main arc and turning at its last endpoint either
positively (``ALPHA``) or negatively (``DELTA``) lands on a unique next main
arc.  Iterating a turn from any arc closes up into a cycle, the algebraic
counterpart of an oriented room boundary.
"""

import enum

from .errors import EmptySymbol, NoSuchArc
from .symbol import MainArc, Symbol

__all__ = [
    "Orientation",
    "ALPHA",
    "DELTA",
    "Cycle",
    "turn",
    "cycle",
    "all_cycles",
    "cycle_sense",
]


class Orientation(enum.Enum):
    ALPHA = 1
    DELTA = -1

    @property
    def sign(self) -> int:
        return self.value

    def negate(self) -> "Orientation":
        return Orientation(-self.value)

    def __neg__(self):
        return self.negate()

    def __str__(self):
        return self.name.lower()

    @classmethod
    def parse(cls, text) -> "Orientation":
        if isinstance(text, Orientation):
            return text
        key = str(text).strip().lower()
        if key in ("alpha", "a", "+", "+1", "1"):
            return cls.ALPHA
        if key in ("delta", "d", "-", "-1"):
            return cls.DELTA
        raise ValueError(f"unknown orientation {text!r}")


ALPHA = Orientation.ALPHA
DELTA = Orientation.DELTA


class Cycle:
    """A cyclically ordered list of distinct main arcs.

    ``arcs`` keeps the order in which the cycle was traced (starting from the
    seed).  Equality is up to rotation.
    """

    __slots__ = ("arcs", "orientation", "_key")

    def __init__(self, arcs, orientation: Orientation):
        self.arcs = tuple(MainArc(*a) for a in arcs)
        self.orientation = orientation
        k = len(self.arcs)
        self._key = min(self.arcs[i:] + self.arcs[:i] for i in range(k)) if k else ()

    def __contains__(self, arc):
        return arc in self.arcs

    def __iter__(self):
        return iter(self.arcs)

    def __len__(self):
        return len(self.arcs)

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.orientation == other.orientation and self._key == other._key

    def __hash__(self):
        return hash((self.orientation, self._key))

    def normalized(self) -> tuple:
        """Rotation starting at the smallest arc."""
        return self._key

    def __str__(self):
        return "[" + " ".join(str(a) for a in self.arcs) + "]"

    def __repr__(self):
        return f"Cycle({self}, {self.orientation})"


def _check_arc(symbol: Symbol, f) -> MainArc:
    if not symbol:
        raise EmptySymbol("the empty symbol has no arcs")
    f = MainArc(*f)
    if not 1 <= f.base <= 2 * symbol.order or f.orientation not in (1, -1):
        raise NoSuchArc(f"{f} is not a main arc of a symbol of order {symbol.order}")
    return f


def turn(symbol: Symbol, f, phi: Orientation) -> MainArc:
    """The ``phi``-turn of main arc ``f``.

    With ``t`` the last endpoint of ``f`` and ``y`` its partner label, the
    next arc starts at ``y`` and moves by ``-pi_phi * pi_f * pi_crossing * v_y``.
    """
    f = _check_arc(symbol, f)
    ring = symbol.ring
    t = f.last(ring)
    y = symbol.partner(t)
    step = -phi.sign * f.orientation * symbol.sign_at(t) * symbol.height(y)
    # The direction comes from the step itself: for n == 1, succ(y) == pred(y).
    if step == 1:
        return MainArc(y, 1)
    return MainArc(ring.pred(y), -1)


def cycle(symbol: Symbol, f, phi: Orientation) -> Cycle:
    f = _check_arc(symbol, f)
    arcs = [f]
    limit = 4 * symbol.order
    g = turn(symbol, f, phi)
    while g != f:
        arcs.append(g)
        if len(arcs) > limit:  # turn is a bijection, so this never fires on valid input
            raise RuntimeError(f"turn sequence from {f} did not close within {limit} steps")
        g = turn(symbol, g, phi)
    return Cycle(arcs, phi)


def all_cycles(symbol: Symbol) -> list:
    """Every distinct cycle, alpha-cycles first, seeds in ascending order."""
    if not symbol:
        raise EmptySymbol("the empty symbol has no arcs")
    found = []
    for phi in (ALPHA, DELTA):
        covered = set()
        for f in symbol.main_arcs():
            if f in covered:
                continue
            c = cycle(symbol, f, phi)
            covered.update(c.arcs)
            found.append(c)
    return found


def cycle_sense(symbol: Symbol, e1, e2):
    """+1 if the basic arcs share a cycle, -1 if ``e1`` shares one with
    ``-e2``, ``None`` when the two are incomparable."""
    e1 = _check_arc(symbol, e1)
    e2 = _check_arc(symbol, e2)
    if not (e1.is_basic and e2.is_basic):
        raise NoSuchArc("cycle sense is defined for basic arcs only")
    for phi in (ALPHA, DELTA):
        c = cycle(symbol, e1, phi)
        if e2 in c:
            return 1
        if e2.negate() in c:
            return -1
    return None
