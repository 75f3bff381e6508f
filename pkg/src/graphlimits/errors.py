"""Exception types shared across the package."""


class GraphLimitsError(ValueError):
    """Base class for errors raised by graphlimits."""


class CapacityError(GraphLimitsError):
    """Input exceeds the brute-force size ceiling of an operation."""


class DomainError(GraphLimitsError):
    """Input lies outside the domain of an operation."""


class DegenerateFamilyError(GraphLimitsError):
    """Normalising constant of an exponential family vanishes."""
