"""Exception types shared across the package."""


class CollinearAnchors(ValueError):
    """The three anchor points of a normalizing map are collinear."""


class TooFewVertices(ValueError):
    """The operation needs more vertices than the polygon has."""


class IndexOutOfRange(IndexError):
    """Vertex index outside [0, n-1]."""


class NotQuasiStrictInput(ValueError):
    """The generator needs a quasi-strict polygon with at least 3 vertices."""


class ExhaustedEpsilonBudget(RuntimeError):
    """No admissible arc parameter found within the counting bound.

    The bound guarantees an admissible value exists, so reaching this is an
    implementation bug, never a legitimate outcome.
    """


class InvalidConditionId(ValueError):
    """Condition identifier outside omega in {1,2,3}, i in [2, n-2]."""
