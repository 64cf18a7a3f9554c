"""Exception types shared across the library."""


class LexfanError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(LexfanError):
    """Operands have incompatible lattice rank n or value-group rank k."""


class EmptyPolyhedron(LexfanError):
    """Operation requires a nonempty polyhedron."""


class HasLineality(LexfanError):
    """Operation requires a pointed polyhedron."""


class UnboundedWeight(LexfanError):
    """A monomial exponent is unbounded below on the polyhedron."""


class NotAVertex(LexfanError):
    """The given point is not a vertex of the complex."""


class InvalidComplex(LexfanError):
    """A collection of cells violates the complex axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid complex")


class InvalidFan(LexfanError):
    """A collection of cones violates the fan axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid fan")


class GeometryError(LexfanError):
    """Internal consistency check failed (reported rather than resolved)."""


class NotPlottable(LexfanError):
    """The (n, k) shape is not supported by the SVG emitter."""


class InputError(LexfanError):
    """Malformed input document."""
