"""Exception hierarchy shared by all modules."""


class RookMatroidError(Exception):
    """Base class for every error raised by this package."""


class ParseError(RookMatroidError, ValueError):
    pass


class NotAPartition(ParseError):
    pass


class NotContained(ParseError):
    pass


class EmptyLine(ParseError):
    """A board row or column without any cell."""


class WrongSize(ParseError):
    pass


class OutOfRange(ParseError):
    pass


class SizeMismatch(RookMatroidError, ValueError):
    pass


class OffBoard(RookMatroidError, ValueError):
    """A basis forces a rook onto a cell that is not on the board."""

    def __init__(self, cell):
        super().__init__(f"forced cell {cell} is not on the board")
        self.cell = cell


class InvalidPlacement(RookMatroidError, ValueError):
    pass


class EmptyFamily(RookMatroidError, ValueError):
    pass


class UnequalSizes(RookMatroidError, ValueError):
    pass


class IndexOutOfRange(RookMatroidError, IndexError):
    pass


class UndefinedStat(RookMatroidError, ValueError):
    pass


class IncompatibleCorners(RookMatroidError, ValueError):
    pass


class DisconnectedShape(RookMatroidError, ValueError):
    pass


class InternalError(RookMatroidError, AssertionError):
    """An invariant that the mathematics guarantees has been violated."""


class NonTermination(InternalError):
    pass


class RoundTripFailure(InternalError):
    pass
