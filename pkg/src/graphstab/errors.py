"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for domain errors raised by graphstab."""


class ValidationError(GraphError):
    """A presented graph violates its invariants.

    ``problems`` holds every violation found, not just the first one.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class UnknownVertexError(GraphError):
    pass


class PreconditionError(GraphError):
    pass


class EnumerationBoundError(GraphError):
    pass


class CaseIIUnsupported(GraphError):
    """The requested vertex lies outside the saturation of the left-infinite set.

    Comparison witnesses are only built constructively inside that
    saturation; outside it the existence argument goes through the algebra
    and yields nothing finite to hand back.
    """
