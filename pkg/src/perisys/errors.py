"""Exception types shared across the package."""


class PerisysError(Exception):
    """Base class for every error raised by perisys."""


class ZeroValueError(PerisysError):
    """A value that must be nonzero (parameter, initial value, log input) is zero."""


class SpecSyntaxError(PerisysError):
    """Malformed spec document or rational literal."""


class ShapeError(PerisysError):
    """Structurally wrong spec: bad types, wrong list lengths, non-positive delays."""


class BitLengthExceededError(PerisysError):
    """A trajectory value outgrew the configured bit-length cap."""


class WrongBackendError(PerisysError):
    """An exact-only operation was applied to the wrong trajectory backend."""


class NotPeriodicRegimeError(PerisysError):
    """A period was requested for parameters whose solutions are not periodic."""


class NotOddQuotientError(PerisysError):
    """The exact block-ratio law needs p/gcd(p, q) odd."""


class WrongRegimeError(PerisysError):
    """A check was applied outside the parameter regime where it holds."""


class TooFewPointsError(PerisysError):
    """A subsequence statistic needs more points than the trajectory provides."""
