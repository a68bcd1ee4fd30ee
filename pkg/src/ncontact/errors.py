"""Exception types shared by all modules."""


class Error(Exception):
    """Base class for every toolkit error."""


class ParseError(Error):
    """Raised on malformed expression or session text; carries the offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class UnknownVariable(ParseError):
    def __init__(self, name, position=None):
        super().__init__("unknown variable %r" % name, position)
        self.name = name


class InvalidCurvePoly(Error):
    """The defining polynomial is not monic of odd degree >= 3."""


class NotDivisible(Error):
    """Exact division failed; `remainder` holds the nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class BothConstantInY(Error):
    pass


class DimensionMismatch(Error):
    pass


class SingularCurve(Error):
    pass


class CurveMismatch(Error):
    pass


class InfinityPoint(Error):
    pass


class EqualPoints(Error):
    pass


class DegenerateSystem(Error):
    pass


class InvalidRepresentation(Error):
    pass


class ShapeError(Error):
    pass


class WrongOrder(Error):
    pass


class DegreeMismatch(Error):
    pass


class NotHomogeneous(Error):
    pass


class ZeroParameters(Error):
    pass


class DegreeTooSmall(Error):
    pass


class UnknownName(Error):
    pass


class PointNotOnCurve(Error):
    pass


class UnknownSection(Error):
    pass


class Mismatch(Error):
    """A reproduction run disagreed with a frozen expected value."""

    def __init__(self, label, monomial, expected, got):
        super().__init__(
            "%s: first differing coefficient at %s: expected %s, got %s"
            % (label, monomial, expected, got)
        )
        self.label = label
        self.monomial = monomial
        self.expected = expected
        self.got = got
