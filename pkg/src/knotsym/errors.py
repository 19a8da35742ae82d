"""Exception hierarchy.

Every domain failure derives from :class:`KnotSymbolError`; the CLI prints
the class name of the raised error on stderr.
"""


class KnotSymbolError(Exception):
    """Base class for all library errors."""


# structural validation
class DuplicateLabel(KnotSymbolError):
    pass


class MissingLabel(KnotSymbolError):
    pass


class LabelOutOfRange(KnotSymbolError):
    pass


class SelfPairedLabel(KnotSymbolError):
    pass


class SymbolSyntaxError(KnotSymbolError):
    pass


# cycles and moves
class EmptySymbol(KnotSymbolError):
    """The operation needs arcs, and the empty symbol has none."""


class NoSuchArc(KnotSymbolError):
    pass


class ArcsNotComparable(KnotSymbolError):
    """The two arcs share no cycle, so no cycle sense relates them."""


class NotAOneGon(KnotSymbolError):
    pass


class NotATwoGon(KnotSymbolError):
    pass


class NotAThreeGon(KnotSymbolError):
    pass


# reduction
class ClosureLimitExceeded(KnotSymbolError):
    pass


# gauss codes
class UnbalancedCrossing(KnotSymbolError):
    pass


class SignMismatch(KnotSymbolError):
    pass


class GaussSyntaxError(KnotSymbolError):
    pass
