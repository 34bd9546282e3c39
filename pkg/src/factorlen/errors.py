"""Exception types shared across the package."""


class FactorlenError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(FactorlenError, ValueError):
    """Input rejected by a constructor or operation precondition."""


class GcdNotOne(ValidationError):
    """Generators do not have greatest common divisor 1."""


class TooFewGenerators(ValidationError):
    """Fewer than three distinct generators after deduplication."""


class NonPositive(ValidationError):
    """A generator is smaller than 1."""


class WrongArity(ValidationError):
    """Operation requires a specific number of generators."""


class NodesNotDistinct(ValidationError):
    """Node list contains repeated values."""


class NodesNotSorted(ValidationError):
    """Node list is not strictly increasing."""


class NonPositiveNode(ValidationError):
    """Operation requires all nodes to be positive."""


class ZeroNode(ValidationError):
    """Operation requires all nodes to be nonzero."""


class EmptyMultiset(FactorlenError):
    """Statistics requested for an element with no factorizations."""


class ToleranceNotMet(FactorlenError):
    """Numerical integration failed to reach the requested accuracy."""


class BudgetExceeded(FactorlenError):
    """Work or memory estimate exceeds the caller-supplied budget."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget
