"""Named symbols and seeded random symbols for testing and experiments."""

import random

from .formats import from_gauss, parse_symbol
from .moves import all_moves
from .symbol import EMPTY, Symbol

__all__ = [
    "TREFOIL",
    "LEFT_TREFOIL",
    "FIGURE_EIGHT_GAUSS",
    "FIGURE_EIGHT",
    "NINE_CROSSING",
    "THREE_LOOPS",
    "random_walk",
    "random_corpus",
]

TREFOIL = parse_symbol("(1,4)+ (5,2)+ (3,6)+")
LEFT_TREFOIL = TREFOIL.mirror()

# Standard alternating code of the figure-eight knot, signs fixed by planarity.
FIGURE_EIGHT_GAUSS = "O1+ U2- O3- U1+ O4+ U3- O2- U4+"
FIGURE_EIGHT = from_gauss(FIGURE_EIGHT_GAUSS)

# A 9-crossing diagram with a pentagonal face [15+ 11+ 3+ 13+ 5+].
NINE_CROSSING = parse_symbol(
    "(1,8)+ (2,9)- (3,12)+ (13,4)+ (5,14)+ (15,6)+ (7,18)+ (10,17)- (11,16)+"
)

# Three crossings, all negative, whose delta-cycle through 2+ is [2+ 4+ 6+].
THREE_LOOPS = parse_symbol("(1,2)- (3,4)- (5,6)-")


def random_walk(rng: random.Random, start: Symbol = EMPTY, steps: int = 10,
                max_order: int = 6) -> Symbol:
    """Apply ``steps`` uniformly chosen moves, never exceeding ``max_order``."""
    current = start
    for _ in range(steps):
        options = list(all_moves(current, max_order))
        current = rng.choice(options)[1]
    return current


def random_corpus(seed: int = 0, size: int = 100, max_order: int = 6,
                  starts=(EMPTY, TREFOIL, LEFT_TREFOIL)) -> list:
    """Distinct symbols from random walks, in generation order."""
    rng = random.Random(seed)
    seen, out = set(), []
    attempts = 0
    while len(out) < size and attempts < 20 * size:
        attempts += 1
        s = random_walk(rng, rng.choice(starts), rng.randint(1, 12), max_order)
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out
