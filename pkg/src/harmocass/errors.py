"""Exception hierarchy shared by all modules."""


class HarmocassError(ValueError):
    """Base class for every domain error raised by this package."""


class NotAnEllipse(HarmocassError):
    """Conic discriminant B^2 - 4AC is non-negative."""


class DegenerateConic(HarmocassError):
    """Elliptic-type conic whose real zero set is empty or a single point."""


class VerticalTrajectory(HarmocassError):
    """Launch straight up or down: y(x) is not a function."""


class OutOfFamily(HarmocassError):
    """Launch angle outside (0, pi); the trajectory never touches the envelope."""


class DegenerateOrbit(HarmocassError):
    """Orbit collapsed to a segment (sin alpha = 0); no implicit ellipse form."""


class DomainError(HarmocassError):
    pass


class UnsupportedCase(HarmocassError):
    pass


class InsufficientSamples(HarmocassError):
    pass


class IdenticallyZero(HarmocassError):
    """All polynomial coefficients vanish, so every value is a root."""


class InvalidParams(HarmocassError):
    pass


class UnknownSuite(HarmocassError):
    pass


class IoError(HarmocassError):
    """An output file could not be written."""
