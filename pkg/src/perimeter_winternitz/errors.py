"""Exception hierarchy shared by the library and the command line front end."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class NonPositiveSide(GeometryError):
    pass


class TriangleInequalityViolated(GeometryError):
    def __init__(self, sides, slack):
        self.sides = tuple(sides)
        self.slack = slack
        super().__init__(
            f"sides {self.sides} violate the strict triangle inequality (slack {slack:.3e})"
        )


class NotInterior(GeometryError):
    pass


class SingularFrame(GeometryError):
    pass


class NonPositiveInput(GeometryError):
    pass


class OutsideRegion(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class TooFewVertices(GeometryError):
    pass


class DuplicateVertex(GeometryError):
    pass


class GapDetected(RuntimeError):
    """The sampled fractions leave a hole in [m, 1/2]; the sweep was too coarse."""
