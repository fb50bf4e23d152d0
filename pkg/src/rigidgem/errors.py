"""Exception hierarchy.  Everything derives from :class:`GemError`."""


class GemError(ValueError):
    """Base class for all rigidgem errors."""


# gem core
class InvalidInvolution(GemError):
    pass


class BadArity(GemError):
    pass


class BadColour(GemError):
    pass


class Disconnected(GemError):
    pass


class DimensionMismatch(GemError):
    pass


class GemFormatError(GemError):
    """Malformed ``.gem`` text; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# moves
class StaleDipole(GemError):
    pass


class BadType(GemError):
    pass


class InvalidAttachment(GemError):
    pass


class NotSeparated(GemError):
    pass


class TraceFormatError(GemFormatError):
    pass


# rho
class ColourMismatch(GemError):
    pass


class NotSameCycle(GemError):
    pass


class NoCanonicalSwitch(GemError):
    pass


class PreconditionFailed(GemError):
    pass


class DimensionTooLow(GemError):
    pass


# verify
class NotAGem(GemError):
    pass


# reduce
class Stuck(GemError):
    pass


class NotACrystallization(GemError):
    pass


class TheoremViolation(AssertionError):
    """A guaranteed structural consequence failed to materialise."""


# catalogue
class BudgetExceeded(GemError):
    pass


class CorruptCatalogue(GemFormatError):
    pass
