"""Exception types shared across the library."""

from __future__ import annotations


class DendrosymError(Exception):
    """Base class for all library errors."""


class EmptyPeriod(DendrosymError, ValueError):
    """A sequence literal or constructor received an empty period word."""


class BadSymbol(DendrosymError, ValueError):
    """A word contained a character outside {*, 1, 2}."""


class NotPurelyPeriodic(DendrosymError, ValueError):
    """An operation that requires an empty prefix got a genuine prefix."""


class LiteralSyntaxError(DendrosymError, ValueError):
    """Malformed sequence literal.  Carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class EqualInputs(DendrosymError, ValueError):
    """Two arguments that must differ were equal."""


class InadmissibleInput(DendrosymError, ValueError):
    """An argument failed the admissibility requirement."""


class AdmissibilityViolation(DendrosymError, ValueError):
    """A constructed sequence unexpectedly failed admissibility.

    Raised by the in-between point construction when the common prefix
    itself is inadmissible.
    """


class BetaUndefined(DendrosymError, ValueError):
    """No suffix-to-kneading match exists in the requested residue class."""


class FlipOutOfRange(DendrosymError, ValueError):
    """A fold tried to flip a position outside the legal matched range."""


class EmptyFlip(DendrosymError, ValueError):
    """A fold must flip at least one position."""


class MixedResidues(DendrosymError, ValueError):
    """A discrepancy set spanned more than one residue class mod N."""


class HorizonMismatch(DendrosymError, ValueError):
    """Two schedules compared at different horizons."""


class TauMismatch(DendrosymError, ValueError):
    """Two schedules compared over different kneading sequences."""


class BadParams(DendrosymError, ValueError):
    """Constructor parameters outside the documented range."""


class HypothesisFailed(DendrosymError, ValueError):
    """The requested (case, k) pair is not licensed by the hypothesis scan."""


class BadFill(DendrosymError, ValueError):
    """A star-fill choice was empty or used symbols outside {1, 2}."""


class BuildError(DendrosymError, RuntimeError):
    """A schedule generator could not realize its construction."""


class IllegalFold(DendrosymError, ValueError):
    """A fold in a schedule failed validation.

    ``step`` is the 1-based index of the offending fold, ``cause`` one of
    ``BetaUndefined``, ``FlipOutOfRange``, ``EmptyFlip``, ``Revisit``,
    ``StarInSequence``.
    """

    def __init__(self, step: int, cause: str, detail: str = ""):
        msg = f"illegal fold at step {step}: {cause}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.step = step
        self.cause = cause
