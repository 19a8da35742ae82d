"""Core value types: cyclic labels, crossings, main arcs and based symbols.

A based symbol of order ``n`` is a set of ``n`` signed ordered pairs
``(over, under)^sign`` whose labels are exactly ``1..2n``.  The first entry
of a pair is the label met while walking on the over-strand (height +1),
the second the label met on the under-strand (height -1).
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateLabel,
    EmptySymbol,
    LabelOutOfRange,
    MissingLabel,
    SelfPairedLabel,
    SymbolSyntaxError,
)

__all__ = [
    "LabelRing",
    "Crossing",
    "MainArc",
    "Symbol",
    "EMPTY",
    "validate",
    "canonical_form",
    "symbol_equal",
    "height",
    "partner",
]


@dataclass(frozen=True)
class LabelRing:
    """The labels ``1..modulus`` with cyclic successor ``modulus -> 1``."""

    modulus: int

    def __post_init__(self):
        if self.modulus <= 0 or self.modulus % 2:
            raise ValueError(f"modulus must be a positive even integer, got {self.modulus}")

    def wrap(self, x: int) -> int:
        """Reduce any integer into ``1..modulus``."""
        return (x - 1) % self.modulus + 1

    def succ(self, x: int) -> int:
        self._check(x)
        return x % self.modulus + 1

    def pred(self, x: int) -> int:
        self._check(x)
        return (x - 2) % self.modulus + 1

    def consecutive(self, x: int, y: int) -> bool:
        """True iff ``x < y`` in the cyclic order, i.e. ``y == succ(x)``."""
        return self.succ(x) == y

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 1 <= x <= self.modulus

    def __iter__(self):
        return iter(range(1, self.modulus + 1))

    def __len__(self):
        return self.modulus

    def _check(self, x):
        if x not in self:
            raise LabelOutOfRange(f"label {x} not in 1..{self.modulus}")


class Crossing(NamedTuple):
    over: int
    under: int
    sign: int

    def labels(self):
        return (self.over, self.under)

    def __str__(self):
        return f"({self.over},{self.under}){'+' if self.sign > 0 else '-'}"


class MainArc(NamedTuple):
    """Basic arc ``base -> base+1`` (orientation +1) or its reverse (-1)."""

    base: int
    orientation: int = 1

    def negate(self) -> "MainArc":
        return MainArc(self.base, -self.orientation)

    def __neg__(self):
        return self.negate()

    @property
    def is_basic(self) -> bool:
        return self.orientation == 1

    def endpoints(self, ring: LabelRing) -> tuple:
        """``(first, last)`` endpoint labels of the arc."""
        nxt = ring.succ(self.base)
        if self.orientation == 1:
            return self.base, nxt
        return nxt, self.base

    def first(self, ring: LabelRing) -> int:
        return self.endpoints(ring)[0]

    def last(self, ring: LabelRing) -> int:
        return self.endpoints(ring)[1]

    def __str__(self):
        return f"{self.base}{'+' if self.orientation > 0 else '-'}"


def _sign(value) -> int:
    if value in (1, "+", "+1"):
        return 1
    if value in (-1, "-", "-1"):
        return -1
    raise SymbolSyntaxError(f"crossing sign must be +1 or -1, got {value!r}")


class Symbol:
    """An immutable numbered symbol.

    Construct with an iterable of ``(over, under, sign)`` triples; the labels
    are validated to partition ``1..2n``.  Equality and hashing ignore the
    order in which crossings were given.
    """

    __slots__ = ("_crossings", "_partner", "_height", "_sign", "_hash")

    def __init__(self, crossings: Iterable = ()):
        items = []
        for raw in crossings:
            try:
                o, u, s = raw
            except (TypeError, ValueError):
                raise SymbolSyntaxError(f"expected an (over, under, sign) triple, got {raw!r}") from None
            if not isinstance(o, int) or not isinstance(u, int):
                raise SymbolSyntaxError(f"labels must be integers, got {raw!r}")
            items.append(Crossing(o, u, _sign(s)))

        n2 = 2 * len(items)
        partner = [0] * (n2 + 1)
        hgt = [0] * (n2 + 1)
        sgn = [0] * (n2 + 1)
        seen = set()
        for c in items:
            if c.over == c.under:
                raise SelfPairedLabel(f"crossing {c} pairs label {c.over} with itself")
            for x in c.labels():
                if x < 1:
                    raise LabelOutOfRange(f"label {x} is not positive")
                if x in seen:
                    raise DuplicateLabel(f"label {x} appears more than once")
                seen.add(x)
        if seen != set(range(1, n2 + 1)):
            missing = sorted(set(range(1, n2 + 1)) - seen)
            raise MissingLabel(f"labels must be exactly 1..{n2}; missing {missing}")
        for c in items:
            partner[c.over], partner[c.under] = c.under, c.over
            hgt[c.over], hgt[c.under] = 1, -1
            sgn[c.over] = sgn[c.under] = c.sign

        self._crossings = tuple(sorted(items))
        self._partner = tuple(partner)
        self._height = tuple(hgt)
        self._sign = tuple(sgn)
        self._hash = hash(self._crossings)

    @property
    def order(self) -> int:
        return len(self._crossings)

    @property
    def crossings(self) -> tuple:
        """Crossings sorted by over label."""
        return self._crossings

    @property
    def ring(self) -> LabelRing:
        if not self._crossings:
            raise EmptySymbol("the empty symbol has no labels")
        return LabelRing(2 * self.order)

    @property
    def labels(self) -> range:
        return range(1, 2 * self.order + 1)

    def _check(self, x):
        if not isinstance(x, int) or not 1 <= x <= 2 * self.order:
            raise LabelOutOfRange(f"label {x} not in 1..{2 * self.order}")

    def partner(self, x: int) -> int:
        self._check(x)
        return self._partner[x]

    def height(self, x: int) -> int:
        self._check(x)
        return self._height[x]

    def sign_at(self, x: int) -> int:
        """Sign of the crossing carrying label ``x``."""
        self._check(x)
        return self._sign[x]

    def crossing_at(self, x: int) -> Crossing:
        self._check(x)
        if self._height[x] == 1:
            return Crossing(x, self._partner[x], self._sign[x])
        return Crossing(self._partner[x], x, self._sign[x])

    def main_arcs(self):
        """All ``4n`` main arcs in ascending ``(base, orientation)`` order."""
        return [MainArc(i, o) for i in self.labels for o in (-1, 1)]

    def basic_arcs(self):
        return [MainArc(i, 1) for i in self.labels]

    def mirror(self) -> "Symbol":
        """All crossing signs flipped."""
        return Symbol((c.over, c.under, -c.sign) for c in self._crossings)

    def __iter__(self):
        return iter(self._crossings)

    def __len__(self):
        return len(self._crossings)

    def __bool__(self):
        return bool(self._crossings)

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self._crossings == other._crossings

    def __lt__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return (self.order, self._crossings) < (other.order, other._crossings)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(str(c) for c in self._crossings)

    def __repr__(self):
        return f"Symbol({str(self)!r})" if self._crossings else "Symbol(∅)"


EMPTY = Symbol()


def validate(raw) -> Symbol:
    """Build a :class:`Symbol` from ``(over, under, sign)`` triples."""
    return Symbol(raw)


def canonical_form(symbol: Symbol) -> tuple:
    """Crossings ordered by ascending over label."""
    return symbol.crossings


def symbol_equal(a: Symbol, b: Symbol) -> bool:
    return a.order == b.order and a.crossings == b.crossings


def height(symbol: Symbol, x: int) -> int:
    return symbol.height(x)


def partner(symbol: Symbol, x: int) -> int:
    return symbol.partner(x)
