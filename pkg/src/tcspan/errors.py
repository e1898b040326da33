"""Exception types shared across the package."""


class TcspanError(Exception):
    """Base class for all package-specific errors."""


class NotADag(TcspanError):
    """Raised when an operation requiring a DAG receives a cyclic digraph."""


class NotATree(TcspanError):
    """Raised when an operation requiring a rooted out-tree receives something else."""


class NotPlanar(TcspanError):
    """Raised by the planar separator provider on non-planar input."""


class Disconnected(TcspanError):
    """Raised when the underlying undirected graph must be connected but is not."""


class TooLarge(TcspanError):
    """Instance exceeds an exact-oracle size cap."""


class Overflow(TcspanError):
    """Ackermann evaluation exceeds the configured guard cap."""


class ParamsInfeasible(TcspanError):
    """Integer rounding of generator parameters violates a structural invariant."""


class InvalidFactor(TcspanError):
    """Bad blow-up factor passed to a MIN-REP transformation."""


class InvalidShape(TcspanError):
    """Set-cover instance shape constraints violated."""


class InvalidInstance(TcspanError):
    """Malformed generator input (e.g. 3NodeCover with oversized sets)."""


class NotARepCover(TcspanError):
    """Vertex set fails the rep-cover condition for some superedge."""


class KTooSmall(TcspanError):
    """Stretch parameter below an algorithm's minimum."""


class Infeasible(TcspanError):
    """Fractional program has no feasible point (some pair has no short path)."""


class InvalidSpanner(TcspanError):
    """A claimed 2-TC-spanner failed verification."""
