"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of the requested quantity."""


class CapacityError(ValueError):
    """Requested exhaustive enumeration exceeds the supported size."""


class DegenerateGroundStateError(ValueError):
    """Minimum pair energy is ambiguous (parameter point sits on a region boundary)."""
