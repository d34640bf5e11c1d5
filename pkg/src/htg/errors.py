"""Exception hierarchy shared by every module.

Each leaf class carries the CLI exit code it maps to, so ``cli`` never has to
know which module raised.
"""

from __future__ import annotations


class HtgError(Exception):
    exit_code = 1


# -- parameter validation ----------------------------------------------------


class ValidationError(HtgError):
    exit_code = 2


class BadParity(ValidationError):
    pass


class BadN(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class Multigraph(ValidationError):
    pass


class BadEll(ValidationError):
    pass


class BadGcd(ValidationError):
    pass


# -- factor checks -------------------------------------------------------------


class VerificationFailed(HtgError):
    exit_code = 3


class NotSpanning(VerificationFailed):
    def __init__(self, vertex, valency: int):
        super().__init__(f"vertex u_{{{vertex[0]},{vertex[1]}}} has valency {valency} in the factor, expected 2")
        self.vertex = vertex
        self.valency = valency


class NotAnEdge(VerificationFailed):
    def __init__(self, a, b):
        super().__init__(f"[u_{{{a[0]},{a[1]}}}, u_{{{b[0]},{b[1]}}}] is not an edge of the graph")
        self.endpoints = (a, b)


class SchemaError(VerificationFailed):
    pass


class MismatchedFactor(HtgError):
    exit_code = 3


class SameVertex(HtgError):
    pass


class InternalVerificationFailed(VerificationFailed):
    """A builder produced an object that failed its own verification."""


# -- constructions -------------------------------------------------------------


class Unsupported(HtgError):
    exit_code = 5

    def __init__(self, message: str, theorem: str | None = None):
        super().__init__(message)
        self.theorem = theorem


class NoDecomposition(Unsupported):
    pass


class NoFlatEdges(HtgError):
    pass


# -- oracle --------------------------------------------------------------------


class TooLarge(HtgError):
    exit_code = 4
