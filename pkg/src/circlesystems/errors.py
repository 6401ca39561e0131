"""Exception types shared across the package."""


class CircleSystemsError(Exception):
    """Base class for all package-specific failures."""


class MalformedRotation(CircleSystemsError):
    """Rotation data is not a valid dart system (asymmetric adjacency etc.)."""


class NonPlanarEmbedding(CircleSystemsError):
    """The supplied rotation system violates the Euler formula."""


class Disconnected(CircleSystemsError):
    """Operation requires a connected graph."""


class NotBipartiteDual(CircleSystemsError):
    """Face adjacency graph is not 2-colorable (input not Eulerian)."""


class VertexNotOnTwoGrayFaces(CircleSystemsError):
    """Internal consistency failure while building the gray-face graph."""


class TooSmall(CircleSystemsError):
    """Input below the minimum size the operation is defined for."""


class NoConvergence(CircleSystemsError):
    """Numerical iteration hit its cap before reaching tolerance."""


class NotThreeConnected(CircleSystemsError):
    """Realization pipeline requires a 3-connected input."""


class ILNotSimple(CircleSystemsError):
    """Gray-face graph unexpectedly non-simple; indicates an internal bug."""


class DegenerateArc(CircleSystemsError):
    """Two points on one circle are closer than the tolerance allows."""


class NoInnermostFace(CircleSystemsError):
    """No interior face disjoint from the outer face was found."""


class NoClassMatch(CircleSystemsError):
    """Realization matched none of the known octahedron classes."""


class DomainError(CircleSystemsError):
    """Numeric argument outside the formula's domain."""


class InvalidConfig(CircleSystemsError):
    """Arc-pair configuration violates its structural preconditions."""


class NotTangent(CircleSystemsError):
    """Circles expected to be pairwise tangent are not."""


class DegenerateRadius(CircleSystemsError):
    """Could not avoid a triple-concurrence after the retry budget."""


class EmptyInput(CircleSystemsError):
    """Nothing to render or process."""
