"""Text formats: the symbol grammar and signed Gauss codes.

Symbol grammar: whitespace-separated crossings ``(o,u)+`` or ``(o,u)-``.
Blank text (or a lone ``∅``) is the empty symbol.

Gauss code: whitespace or comma separated tokens ``O<id><sign>`` /
``U<id><sign>`` listing the crossings met along the knot.  The sign is the
crossing sign, positive when the over-strand turns positively onto the
under-strand; the right trefoil reads ``O1+ U2+ O3+ U1+ O2+ U3+``.
"""

import re

from .errors import GaussSyntaxError, SignMismatch, SymbolSyntaxError, UnbalancedCrossing
from .symbol import EMPTY, Symbol

__all__ = [
    "parse_symbol",
    "serialize_symbol",
    "parse_gauss",
    "from_gauss",
    "EMPTY_TEXT",
]

EMPTY_TEXT = "∅"

_CROSSING = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*([+-])")
_GAUSS = re.compile(r"([OUou])(\d+)([+-])")


def parse_symbol(text: str) -> Symbol:
    stripped = text.strip()
    if stripped in ("", EMPTY_TEXT):
        return EMPTY
    triples, pos = [], 0
    for m in _CROSSING.finditer(stripped):
        if stripped[pos:m.start()].strip():
            break
        triples.append((int(m[1]), int(m[2]), 1 if m[3] == "+" else -1))
        pos = m.end()
    if stripped[pos:].strip():
        raise SymbolSyntaxError(f"cannot parse {stripped[pos:].strip()!r} as a crossing")
    return Symbol(triples)


def serialize_symbol(symbol: Symbol) -> str:
    """Canonical text, crossings by ascending over label; ``""`` for ∅."""
    return str(symbol)


def parse_gauss(text: str) -> list:
    """Tokens as ``(is_over, crossing_id, sign)`` triples."""
    tokens = []
    for raw in text.replace(",", " ").split():
        m = _GAUSS.fullmatch(raw)
        if not m:
            raise GaussSyntaxError(f"bad Gauss token {raw!r}; expected e.g. O1+ or U3-")
        tokens.append((m[1].upper() == "O", int(m[2]), 1 if m[3] == "+" else -1))
    return tokens


def from_gauss(code) -> Symbol:
    """Label each token by its 1-based position along the knot and pair the
    over and under positions of every crossing.

    ``code`` is Gauss text or an already parsed token list.
    """
    tokens = parse_gauss(code) if isinstance(code, str) else list(code)
    over, under, signs = {}, {}, {}
    for pos, (is_over, cid, sign) in enumerate(tokens, start=1):
        side = over if is_over else under
        if cid in side:
            kind = "over" if is_over else "under"
            raise UnbalancedCrossing(f"crossing {cid} is passed {kind} twice")
        side[cid] = pos
        if signs.setdefault(cid, sign) != sign:
            raise SignMismatch(f"crossing {cid} carries both signs")
    for cid in signs:
        if cid not in over or cid not in under:
            raise UnbalancedCrossing(f"crossing {cid} is not passed both over and under")
    return Symbol((over[c], under[c], signs[c]) for c in sorted(signs))
