"""Exception types shared across the library.

Every error raised by banlab derives from BanlabError so callers (and the
scenario runner) can distinguish library failures from programming bugs.
"""


class BanlabError(Exception):
    pass


class DimensionMismatch(BanlabError):
    pass


class MixedBackends(BanlabError):
    pass


class FlavorMismatch(BanlabError):
    """Arch family whose block norm is not diagonal (see design notes)."""


class BoundViolated(BanlabError):
    pass


class DimensionCapExceeded(BanlabError):
    pass


class CapExceeded(BanlabError):
    pass


class UndecidableComparison(BanlabError):
    """Interval comparison still ambiguous after the precision budget."""


class NotIrreducible(BanlabError):
    pass


class NotAutomorphism(BanlabError):
    pass


class GroupOrderMismatch(BanlabError):
    pass


class IndexOutOfRange(BanlabError):
    pass


class NotUnramified(BanlabError):
    pass


class NotAGroup(BanlabError):
    pass


class WindowNotGroup(BanlabError):
    pass


class ScheduleNotDecreasing(BanlabError):
    pass


class NotAnAction(BanlabError):
    pass


class NotFiltered(BanlabError):
    pass


class NotGrouplikeCoalgebra(BanlabError):
    pass


class ProjectionsDoNotResolve(BanlabError):
    pass


class NotAHomomorphism(BanlabError):
    pass


class DegeneratePairing(BanlabError):
    pass


class SingularComparison(BanlabError):
    pass


class DescentFails(BanlabError):
    def __init__(self, message, rank_data=None):
        super().__init__(message)
        self.rank_data = rank_data


class ToleranceUnreachable(BanlabError):
    pass


class UnsupportedWeights(BanlabError):
    pass


class ParseError(BanlabError):
    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownCheck(BanlabError):
    pass
