"""Exception types shared across the package."""


class PolysphereError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PolysphereError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InventoryError(DomainError):
    """A face inventory cannot describe a closed convex surface."""


class UnknownSolidError(PolysphereError, LookupError):
    """A solid name is not in the catalog."""


class CapabilityError(PolysphereError):
    """The solid does not carry the data this operation needs."""


class GeometryError(PolysphereError, ValueError):
    """Degenerate 3D input: too few points, or all points coplanar."""


class LayoutError(PolysphereError, ValueError):
    """A polygon cannot be placed on the configured sheet."""
