"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class FlockError(ValueError):
    """Base class for all errors raised by flockdukes."""


# -- graph construction ------------------------------------------------------

class GraphBuildError(FlockError):
    """Raised when sizes/arcs do not describe a valid multi-flock graph.

    ``arc_index`` points at the offending entry of the arc list when there is
    one, so that parsers can translate it back to a source line.
    """

    def __init__(self, message: str, arc_index: int | None = None):
        super().__init__(message)
        self.arc_index = arc_index


class EmptyFlock(GraphBuildError):
    pass


class IntraFlockArc(GraphBuildError):
    pass


class DuplicatePair(GraphBuildError):
    pass


class MissingPair(GraphBuildError):
    pass


class UnknownChicken(GraphBuildError, IndexError):
    pass


class UnknownFlock(FlockError, IndexError):
    pass


class SameFlock(FlockError):
    pass


class DifferentFlocks(FlockError):
    pass


class SameChicken(FlockError):
    pass


class NonPositiveM(FlockError):
    pass


# -- oracle / constructive ---------------------------------------------------

class TheoremViolation(FlockError):
    """A theorem's conclusion failed on a concrete graph.

    Either a bug or a genuine counterexample; the graph is kept for triage.
    """

    def __init__(self, message: str, graph=None):
        super().__init__(message)
        self.graph = graph


class NotADuke(FlockError):
    def __init__(self, message: str, chicken: int | None = None, target: int | None = None):
        super().__init__(message)
        self.chicken = chicken
        self.target = target


class CertificateError(FlockError):
    pass


class PreconditionFailed(FlockError):
    """A constructive operation was called outside its hypotheses."""


class NotBiflock(PreconditionFailed):
    pass


class NotBalanced(PreconditionFailed):
    pass


class FlockDominated(PreconditionFailed):
    pass


class SingleFlock(PreconditionFailed):
    pass


class NotPecked(PreconditionFailed):
    pass


class TwoDukeExists(PreconditionFailed):
    pass


class BadTriple(PreconditionFailed):
    pass


class HasTransmitter(PreconditionFailed):
    pass


class NotNonEclipsedTwoDuke(PreconditionFailed):
    pass


# -- enumeration / io --------------------------------------------------------

class TooLarge(FlockError):
    pass


class UnknownTheorem(FlockError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class FlockSyntaxError(FlockError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message
