"""Exception hierarchy.

Every error raised by the package derives from :class:`CoordPoAError`, which
is itself a :class:`ValueError`, so callers that only care about bad input can
catch the builtin.
"""


class CoordPoAError(ValueError):
    pass


# graph construction
class GraphError(CoordPoAError):
    pass


class DuplicateNode(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class InvalidParams(CoordPoAError):
    pass


class ProfileMismatch(CoordPoAError):
    pass


class UnknownNode(CoordPoAError):
    pass


class ParseError(CoordPoAError):
    pass


# analysis
class ZeroWelfare(CoordPoAError):
    """Quotient requested for a state whose welfare is zero."""


class NotAnEquilibrium(CoordPoAError):
    pass


class InvalidLambdaState(CoordPoAError):
    pass


class DegenerateRatio(CoordPoAError):
    """The counting bounds divide by (alpha - gamma) and (beta - gamma)."""


# construction
class ZeroState(CoordPoAError):
    pass


class PerfectCompatibility(CoordPoAError):
    """gamma == beta: no C-edge can survive in an equilibrium.

    The worst equilibrium is then all-B, whose quotient is carried in
    :attr:`ratio`.
    """

    def __init__(self, ratio, message=None):
        self.ratio = ratio
        super().__init__(message or f"gamma == beta; worst equilibrium is all-B with ratio {ratio}")


class InternalRealizationFailure(CoordPoAError):
    pass


# oracle
class TooLarge(CoordPoAError):
    pass


class EmptyGraph(CoordPoAError):
    pass
