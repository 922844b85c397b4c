class HvDistError(Exception):
    """Base exception for the hypervolume distribution toolkit."""
    pass

class GeometryError(HvDistError, ValueError):
    """Raised when a front, lattice or manifold coordinate is invalid."""
    pass

class ReferencePointError(HvDistError, ValueError):
    """Raised when points do not strictly dominate the reference point."""
    pass

class ClosedFormError(HvDistError, ValueError):
    """Raised when a theorem formula is evaluated outside its preconditions."""
    pass

class ConfigurationError(HvDistError, ValueError):
    """Raised when there's a configuration issue."""
    pass

class StorageError(HvDistError):
    """Raised when there's an issue writing reports or exports."""
    pass

class EmptySetError(HvDistError, ValueError):
    """Raised when an operation needs at least one point."""
    pass
