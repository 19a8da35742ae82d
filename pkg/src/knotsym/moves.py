"""Gon detection and the algebraic moves on symbols.

Moves come in three flavours:

* neutral: change of base (``apply_beta``), isotopy (``apply_iso``) and the
  triangle move (``apply_omega3``), which keep the order;
* positive: ``apply_omega1_plus`` / ``apply_omega2_plus`` add one or two
  crossings;
* negative: ``apply_omega1_minus`` / ``apply_omega2_minus`` delete the
  crossings of a 1-gon or 2-gon.

Positive moves insert their new labels right after the chosen arcs and shift
the rest up; negative moves delete labels and close the gaps, so each
negative move undoes the matching positive one exactly.
"""

import enum
from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional

from .cycles import ALPHA, DELTA, Orientation, all_cycles, cycle
from .errors import (
    ArcsNotComparable,
    LabelOutOfRange,
    NoSuchArc,
    NotAOneGon,
    NotAThreeGon,
    NotATwoGon,
)
from .symbol import EMPTY, MainArc, Symbol

__all__ = [
    "GonKind",
    "GonWitness",
    "find_one_gons",
    "find_two_gons",
    "find_three_gons",
    "bounds_face",
    "one_gon_at",
    "two_gon_at",
    "three_gon_at",
    "apply_beta",
    "apply_iso",
    "apply_omega1_plus",
    "apply_omega1_minus",
    "apply_omega2_plus",
    "room_sense",
    "apply_omega2_minus",
    "apply_omega3",
    "neutral_moves",
    "negative_moves",
    "positive_moves",
    "all_moves",
    "apply_move",
    "inverse_shift",
]


class GonKind(enum.IntEnum):
    ONE = 1
    TWO = 2
    THREE = 3


@dataclass(frozen=True)
class GonWitness:
    """A 1-, 2- or 3-gon of a symbol.

    ``arcs`` holds basic-arc bases in role order: ``(a,)`` for a 1-gon,
    ``(top, bottom)`` for a 2-gon, ``(top, middle, bottom)`` for a 3-gon.
    For a 3-gon with top ``αβ``, middle ``γδ`` and bottom ``εζ`` the
    crossings are ordered ``(α,γ), (β,ε), (δ,ζ)``.
    """

    kind: GonKind
    arcs: tuple
    crossings: tuple

    @property
    def labels(self) -> frozenset:
        return frozenset(x for c in self.crossings for x in c.labels())

    def describe(self) -> str:
        if self.kind == GonKind.ONE:
            return f"r1-:{self.arcs[0]}"
        if self.kind == GonKind.TWO:
            a, b = sorted(self.arcs)
            return f"r2-:{a},{b}"
        return "r3:" + ",".join(map(str, self.arcs))


def _theta(theta) -> int:
    if theta in (1, "+", "+1"):
        return 1
    if theta in (-1, "-", "-1"):
        return -1
    raise ValueError(f"placement number must be +1 or -1, got {theta!r}")


def _basic(symbol: Symbol, a: int) -> int:
    if not isinstance(a, int) or not 1 <= a <= 2 * symbol.order:
        raise NoSuchArc(f"no basic arc {a} in a symbol of order {symbol.order}")
    return a


def _relabel(symbol: Symbol, fn, extra=()) -> Symbol:
    out = [(fn(c.over), fn(c.under), c.sign) for c in symbol.crossings]
    out.extend(extra)
    return Symbol(out)


def _delete(symbol: Symbol, dead) -> Symbol:
    """Drop every crossing touching ``dead`` and close the label gaps."""
    dead = sorted(dead)
    keep = [c for c in symbol.crossings if c.over not in dead and c.under not in dead]
    return Symbol(
        (c.over - bisect_left(dead, c.over), c.under - bisect_left(dead, c.under), c.sign)
        for c in keep
    )


# ---------------------------------------------------------------- detection


def one_gon_at(symbol: Symbol, a: int) -> GonWitness:
    a = _basic(symbol, a)
    nxt = symbol.ring.succ(a)
    if symbol.partner(a) != nxt:
        raise NotAOneGon(f"arc {a} is not a 1-gon")
    return GonWitness(GonKind.ONE, (a,), (symbol.crossing_at(a),))


def find_one_gons(symbol: Symbol) -> list:
    """1-gons by ascending arc; at order 1 both arcs share the single
    crossing, which is reported once."""
    found, used = [], set()
    for a in symbol.labels:
        try:
            w = one_gon_at(symbol, a)
        except NotAOneGon:
            continue
        if w.crossings[0] not in used:
            used.add(w.crossings[0])
            found.append(w)
    return found


def _two_gon_partner(symbol: Symbol, a: int) -> Optional[int]:
    # The arc b forming a 2-gon with arc a, if any; heights are checked by the caller.
    ring = symbol.ring
    a1 = ring.succ(a)
    pa, pa1 = symbol.partner(a), symbol.partner(a1)
    if pa1 == ring.succ(pa):
        return pa
    if pa == ring.succ(pa1):
        return pa1
    return None


def two_gon_at(symbol: Symbol, a: int, b: int) -> GonWitness:
    a, b = _basic(symbol, a), _basic(symbol, b)
    ring = symbol.ring
    if a == b or _two_gon_partner(symbol, a) != b:
        raise NotATwoGon(f"arcs {a}, {b} do not form a 2-gon")
    if symbol.partner(a) == ring.succ(a) or symbol.partner(b) == ring.succ(b):
        raise NotATwoGon(f"arcs {a}, {b} include a 1-gon")
    h = symbol.height(a)
    if symbol.height(ring.succ(a)) != h:
        raise NotATwoGon(f"endpoints of arc {a} have different heights")
    top, bottom = (a, b) if h == 1 else (b, a)
    crossings = (symbol.crossing_at(top), symbol.crossing_at(ring.succ(top)))
    return GonWitness(GonKind.TWO, (top, bottom), crossings)


def find_two_gons(symbol: Symbol) -> list:
    """2-gons ordered by their smaller arc."""
    found = []
    for a in symbol.labels:
        b = _two_gon_partner(symbol, a)
        if b is None or b <= a:
            continue
        try:
            found.append(two_gon_at(symbol, a, b))
        except NotATwoGon:
            pass
    return found


def _arc_base(ring, x, y):
    # base of the basic arc with endpoints x, y
    return x if ring.succ(x) == y else y


def bounds_face(symbol: Symbol, gon: GonWitness) -> bool:
    """True iff the gon's arcs, and nothing else, make up one cycle.

    This is the algebraic stand-in for "the interior is empty": on planar
    symbols an Ω3 on a triangle failing this test yields a symbol with the
    wrong number of cycles, i.e. one no diagram realizes.
    """
    bases = set(gon.arcs)
    return any(
        len(c) == len(bases) and {a.base for a in c} == bases
        for c in all_cycles(symbol)
    )


def find_three_gons(symbol: Symbol, faces_only: bool = False) -> list:
    """3-gons ordered by their top arc.

    With ``faces_only`` only triangles passing :func:`bounds_face` are kept.
    """
    if symbol.order < 3:
        return []
    ring = symbol.ring
    p, v = symbol.partner, symbol.height
    ones = {a for a in symbol.labels if p(a) == ring.succ(a)}
    twos = {frozenset(w.arcs) for w in find_two_gons(symbol)}
    found = []
    for t in symbol.labels:
        t1 = ring.succ(t)
        if v(t) != 1 or v(t1) != 1:
            continue
        for alpha, beta in ((t, t1), (t1, t)):
            gamma, eps = p(alpha), p(beta)
            for delta in (ring.pred(gamma), ring.succ(gamma)):
                if v(delta) != 1:
                    continue
                zeta = p(delta)
                if zeta not in (ring.pred(eps), ring.succ(eps)):
                    continue
                if len({alpha, beta, gamma, delta, eps, zeta}) != 6:
                    continue
                mid = _arc_base(ring, gamma, delta)
                bot = _arc_base(ring, eps, zeta)
                arcs = (t, mid, bot)
                if ones & set(arcs):
                    continue
                if any(frozenset(pair) in twos for pair in ((t, mid), (t, bot), (mid, bot))):
                    continue
                crossings = (
                    symbol.crossing_at(alpha),
                    symbol.crossing_at(beta),
                    symbol.crossing_at(delta),
                )
                found.append(GonWitness(GonKind.THREE, arcs, crossings))
    if faces_only and found:
        faces = {frozenset(a.base for a in c) for c in all_cycles(symbol) if len(c) == 3}
        found = [w for w in found if frozenset(w.arcs) in faces]
    return found


def three_gon_at(symbol: Symbol, *key: int) -> GonWitness:
    """Look up a 3-gon by its top/middle crossing ``x, y`` or by its arcs
    ``top, middle, bottom``.

    Distinct 3-gons may share their top/middle crossing; the two-label form
    raises ``NotAThreeGon`` when it is ambiguous.
    """
    gons = find_three_gons(symbol)
    if len(key) == 3:
        hits = [w for w in gons if w.arcs == tuple(key)]
    elif len(key) == 2:
        hits = [w for w in gons if set(w.crossings[0].labels()) == set(key)]
    else:
        raise ValueError("a 3-gon is named by two crossing labels or three arcs")
    if not hits:
        raise NotAThreeGon(f"no 3-gon matching {key}")
    if len(hits) > 1:
        options = ", ".join(",".join(map(str, w.arcs)) for w in hits)
        raise NotAThreeGon(f"{key} names several 3-gons; pick one by arcs: {options}")
    return hits[0]


def _require(symbol: Symbol, gon: GonWitness, kind: GonKind, error):
    if not isinstance(gon, GonWitness) or gon.kind != kind:
        raise error(f"expected a {int(kind)}-gon witness, got {gon!r}")
    if not symbol:
        raise error("the empty symbol has no gons")
    try:
        if kind == GonKind.ONE:
            fresh = one_gon_at(symbol, gon.arcs[0])
        elif kind == GonKind.TWO:
            fresh = two_gon_at(symbol, *gon.arcs)
        else:
            fresh = three_gon_at(symbol, *gon.arcs)
    except NoSuchArc as exc:
        raise error(str(exc)) from None
    if fresh != gon:
        raise error(f"{gon.describe()} is not a {int(kind)}-gon of {symbol}")
    return fresh


# ---------------------------------------------------------------- neutral moves


def apply_beta(symbol: Symbol, a: int) -> Symbol:
    """Change of base: label 1 becomes ``a``, cyclic order kept."""
    if not symbol:
        return EMPTY
    n2 = 2 * symbol.order
    if not isinstance(a, int) or not 1 <= a <= n2:
        raise LabelOutOfRange(f"new base {a} not in 1..{n2}")
    return _relabel(symbol, lambda x: (x + a - 2) % n2 + 1)


def inverse_shift(symbol: Symbol, a: int) -> int:
    """The shift undoing ``apply_beta(symbol, a)``."""
    n2 = 2 * symbol.order
    return (1 - a) % n2 + 1 if n2 else 1


def apply_iso(symbol: Symbol) -> Symbol:
    return symbol


def apply_omega3(symbol: Symbol, gon: GonWitness) -> Symbol:
    """Swap each label of the triangle's crossings for its arc companion.

    Positions inside the ordered pairs are kept, so every label inherits the
    height its companion had.
    """
    gon = _require(symbol, gon, GonKind.THREE, NotAThreeGon)
    ring = symbol.ring
    companion = {}
    for a in gon.arcs:
        b = ring.succ(a)
        companion[a], companion[b] = b, a
    swapped = [(companion[c.over], companion[c.under], c.sign) for c in gon.crossings]
    rest = [c for c in symbol.crossings if c not in gon.crossings]
    return Symbol(rest + swapped)


# ---------------------------------------------------------------- Ω1


def apply_omega1_plus(symbol: Symbol, a: Optional[int], theta, phi) -> Symbol:
    """Add a kink on basic arc ``a`` (``None`` or 0 for the empty symbol).

    Labels above ``a`` move up by two; the new crossing uses ``a+1, a+2``,
    over-label ``a+2`` when ``theta == +1``, with sign ``pi_phi * theta``.
    """
    theta = _theta(theta)
    phi = Orientation.parse(phi)
    if not symbol:
        if a not in (None, 0):
            raise NoSuchArc("the empty symbol has no arcs; use a = 0")
        a = 0
    else:
        a = _basic(symbol, a)
    lo, hi = a + 1, a + 2
    new = (hi, lo, phi.sign * theta) if theta == 1 else (lo, hi, phi.sign * theta)
    return _relabel(symbol, lambda x: x + 2 if x > a else x, [new])


def apply_omega1_minus(symbol: Symbol, gon: GonWitness) -> Symbol:
    gon = _require(symbol, gon, GonKind.ONE, NotAOneGon)
    return _delete(symbol, gon.crossings[0].labels())


# ---------------------------------------------------------------- Ω2


def room_sense(symbol: Symbol, a: int, b: int, phi) -> Optional[int]:
    """Sense of arc ``b`` in the room of an Ω2 on ``a, b`` with orientation
    ``phi``, or ``None`` when ``b`` does not border that room.

    With the crossing formula used by :func:`apply_omega2_plus` that room is
    bounded by the ``-phi``-cycle through ``a+``; taking the ``phi``-cycle
    instead produces symbols no diagram realizes.
    """
    phi = Orientation.parse(phi)
    c = cycle(symbol, MainArc(a), phi.negate())
    if MainArc(b) in c:
        return 1
    if MainArc(b, -1) in c:
        return -1
    return None


def apply_omega2_plus(symbol: Symbol, a: Optional[int], b: Optional[int], theta, phi) -> Symbol:
    """Push basic arc ``a`` across basic arc ``b`` (``a <= b``).

    ``b`` must border the room the move happens in (see :func:`room_sense`);
    ``rho`` is its sense there.  For the empty
    symbol pass ``a = b = 0`` (or ``None``), where ``rho = 1``.
    """
    theta = _theta(theta)
    phi = Orientation.parse(phi)
    if not symbol:
        if a not in (None, 0) or b not in (None, 0):
            raise NoSuchArc("the empty symbol has no arcs; use a = b = 0")
        a = b = 0
        rho = 1
    else:
        a, b = _basic(symbol, a), _basic(symbol, b)
        if a > b:
            raise ValueError(f"expected a <= b, got a={a}, b={b}")
        rho = room_sense(symbol, a, b, phi)
        if rho is None:
            raise ArcsNotComparable(f"arcs {a} and {b} share no room for orientation {phi}")
    hi1 = b + (7 + rho) // 2
    hi2 = b + (7 - rho) // 2
    s = phi.sign * theta * rho
    if theta == 1:
        d1, d2 = (hi1, a + 1, s), (hi2, a + 2, -s)
    else:
        d1, d2 = (a + 1, hi1, s), (a + 2, hi2, -s)
    return _relabel(symbol, lambda x: x + 2 * (x > a) + 2 * (x > b), [d1, d2])


def apply_omega2_minus(symbol: Symbol, gon: GonWitness) -> Symbol:
    gon = _require(symbol, gon, GonKind.TWO, NotATwoGon)
    return _delete(symbol, gon.labels)


# ---------------------------------------------------------------- enumeration


def _pm(x):
    return f"{x:+d}"


def neutral_moves(symbol: Symbol, faces_only: bool = True):
    """``(descriptor, result)`` for every change of base and every Ω3.

    By default Ω3 is restricted to triangles bounding a face; pass
    ``faces_only=False`` for every algebraic 3-gon.
    """
    if not symbol:
        yield "iso", symbol
        return
    for a in symbol.labels:
        yield f"beta:{a}", apply_beta(symbol, a)
    for gon in find_three_gons(symbol, faces_only):
        yield gon.describe(), apply_omega3(symbol, gon)


def negative_moves(symbol: Symbol):
    for gon in find_one_gons(symbol):
        yield gon.describe(), apply_omega1_minus(symbol, gon)
    for gon in find_two_gons(symbol):
        yield gon.describe(), apply_omega2_minus(symbol, gon)


def positive_moves(symbol: Symbol, kinds=(1, 2)):
    thetas, phis = (1, -1), (ALPHA, DELTA)
    arcs = list(symbol.labels) if symbol else [0]
    if 1 in kinds:
        for a in arcs:
            for theta in thetas:
                for phi in phis:
                    yield (f"r1+:{a},{_pm(theta)},{phi}",
                           apply_omega1_plus(symbol, a, theta, phi))
    if 2 in kinds:
        for i, a in enumerate(arcs):
            for b in arcs[i:]:
                for phi in phis:
                    if symbol and room_sense(symbol, a, b, phi) is None:
                        continue
                    for theta in thetas:
                        yield (f"r2+:{a},{b},{_pm(theta)},{phi}",
                               apply_omega2_plus(symbol, a, b, theta, phi))


def all_moves(symbol: Symbol, max_order: Optional[int] = None, faces_only: bool = True):
    """Every applicable move; positive moves are skipped when they would
    exceed ``max_order``."""
    yield from negative_moves(symbol)
    yield from neutral_moves(symbol, faces_only)
    kinds = tuple(k for k in (1, 2) if max_order is None or symbol.order + k <= max_order)
    if kinds:
        yield from positive_moves(symbol, kinds)


def apply_move(symbol: Symbol, text: str) -> Symbol:
    """Apply a move written as ``name:args``.

    Names: ``beta:a``, ``iso``, ``r1+:a,θ,φ``, ``r1-:i``, ``r2+:a,b,θ,φ``,
    ``r2-:a,b``, ``r3:x,y`` (the 3-gon whose top/middle crossing is ``x:y``)
    or ``r3:top,middle,bottom``.
    Use ``a = 0`` for positive moves on the empty symbol.
    """
    name, _, rest = text.strip().partition(":")
    args = [s.strip() for s in rest.split(",")] if rest.strip() else []

    def ints(k):
        if len(args) < k:
            raise ValueError(f"move {name!r} needs {k} integer arguments")
        try:
            return [int(s) for s in args[:k]]
        except ValueError:
            raise ValueError(f"bad integer argument in {text!r}") from None

    def tail(k):
        if len(args) != k + 2:
            raise ValueError(f"move {name!r} takes {k} labels, θ and φ")
        return _theta(int(args[k]) if args[k].lstrip("+-").isdigit() else args[k]), Orientation.parse(args[k + 1])

    if name == "iso" and not args:
        return apply_iso(symbol)
    if name == "beta" and len(args) == 1:
        return apply_beta(symbol, *ints(1))
    if name == "r1+":
        theta, phi = tail(1)
        (a,) = ints(1)
        return apply_omega1_plus(symbol, a, theta, phi)
    if name == "r1-" and len(args) == 1:
        return apply_omega1_minus(symbol, _witness(symbol, one_gon_at, NotAOneGon, *ints(1)))
    if name == "r2+":
        theta, phi = tail(2)
        a, b = ints(2)
        return apply_omega2_plus(symbol, a, b, theta, phi)
    if name == "r2-" and len(args) == 2:
        return apply_omega2_minus(symbol, _witness(symbol, two_gon_at, NotATwoGon, *ints(2)))
    if name == "r3" and len(args) in (2, 3):
        return apply_omega3(symbol, _witness(symbol, three_gon_at, NotAThreeGon, *ints(len(args))))
    raise ValueError(f"unknown move {text!r}")


def _witness(symbol, finder, error, *args):
    if not symbol:
        raise error("the empty symbol has no gons")
    try:
        return finder(symbol, *args)
    except NoSuchArc as exc:
        raise error(str(exc)) from None
