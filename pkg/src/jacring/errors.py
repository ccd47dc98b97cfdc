"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands live in incompatible ambient spaces (dimension or context mismatch)."""


class DegenerateBasisError(ValueError):
    """A linear system that should be uniquely solvable is singular."""


class InvalidMapError(ValueError):
    """An algebra map was specified by images that are not pure degree 1."""


class UnsupportedClassError(ValueError):
    """The requested operation is only defined on a restricted set of classes."""
