"""Exception types shared across the toolkit.

Every error raised on purpose by this package derives from HlinkError so
callers can catch the whole family at once.  Search routines that can give
up cleanly return result objects with a ``complete`` flag instead of
raising; exceptions are reserved for malformed input, violated
preconditions, and exhausted budgets on operations with no partial answer.
"""

from __future__ import annotations


class HlinkError(Exception):
    """Base class for all package errors."""


class ParseError(HlinkError):
    """Malformed graph text or JSON. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RangeError(HlinkError):
    """A vertex id is outside 0..n-1."""


class ArityMismatch(HlinkError):
    """A route list does not line up with the pattern's edge list."""


class VertexNotOnCycle(HlinkError):
    """An interval endpoint is not a vertex of the cycle."""


class AdjacentTerminalsNoCut(HlinkError):
    """No vertex cut can separate two adjacent terminals."""


class InsufficientTargets(HlinkError):
    """A fan was asked for more paths than there are targets."""


class GenerationBudgetExceeded(HlinkError):
    """A random generator gave up before meeting its constraint."""


class BudgetNonPositive(HlinkError):
    """A search budget must be a positive integer."""


class SearchBudgetExceeded(HlinkError):
    """A search ran out of budget with no partial answer worth returning."""


class DegenerateParameters(HlinkError):
    """All side multiplicities of a fat triangle are zero."""


class ParameterError(HlinkError):
    """A constructor parameter is out of its documented range."""


class MalformedCertificate(HlinkError):
    """A certificate fails its structural (pre-semantic) invariants."""


class Inconclusive(HlinkError):
    """A dichotomy check could not complete either side within budget."""


class WitnessNotFound(HlinkError):
    """An object the surrounding theory promises could not be found.

    Treat this as falsification grade: either the input violates a
    precondition that is not cheaply checkable, or the implementation has
    a genuine bug.
    """


class PreconditionViolated(HlinkError):
    """A caller-asserted precondition is demonstrably false."""


class CaseAnalysisIncomplete(HlinkError):
    """The constructive case analysis fell through every case.

    This must never fire on valid input; it exists so that a logic gap
    turns into a loud failure instead of a silent wrong answer.
    """


class NoFlower(HlinkError):
    """Exhaustive search proved no flower exists for the given anchors."""


class NotThreeConnected(HlinkError):
    """The host graph is not 3-connected."""


class NotPlanar(HlinkError):
    """The supplied rotation system does not describe a planar embedding."""


# Spec-facing aliases: different call sites name budget exhaustion differently.
Exhausted = SearchBudgetExceeded
BudgetExceeded = SearchBudgetExceeded
