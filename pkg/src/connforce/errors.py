"""Exception hierarchy shared by every module of the package."""


class ConnForceError(ValueError):
    """Base class for all errors raised by connforce."""


class InvalidEdgeError(ConnForceError):
    pass


class PreconditionError(ConnForceError):
    pass


class InvalidTraceError(ConnForceError):
    pass


class BudgetExceededError(ConnForceError):
    """Raised when an exhaustive search would test more candidates than allowed."""


class NotSingleCliqueError(PreconditionError):
    pass


class FamilyConstraintError(ConnForceError):
    pass


class FormatError(ConnForceError):
    """Malformed edge-list text."""
