"""Exact rational scalars and their signed-logarithm companions.

Rationals are plain :class:`fractions.Fraction` values: the stdlib type
already guarantees the canonical form the rest of the package relies on
(``gcd(|numerator|, denominator) == 1``, ``denominator > 0``, zero stored
as 0/1) and its arithmetic is closed, exact, and rejects division by zero.
This module adds what ``Fraction`` does not have:

* a strict literal syntax shared by every text format ("-3/7", "2":
  optional sign, decimal integer, optional "/" plus positive decimal
  integer, no whitespace),
* a bit-length cap so trajectories in growing regimes abort with a typed
  error instead of exhausting memory,
* :class:`SignedLog`, a (sign, log-magnitude) representation of nonzero
  reals whose multiply/divide are float add/subtract and cannot overflow.

Log magnitudes of huge integers are computed from the integer directly,
as (bit_length - 53) * ln 2 plus the log of the top 53 bits; the full
integer is never converted to a float, so there is no overflow at any
size.  Truncating to 53 bits perturbs the log by less than 2**-52, far
below one ulp of any large log value.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BitLengthExceededError, SpecSyntaxError, ZeroValueError

DEFAULT_MAX_BITS = 1_000_000
ENV_MAX_BITS = "PERISYS_MAX_BITS"

_LN2 = math.log(2)
_MANTISSA_BITS = 53

_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal such as ``-3/7`` or ``2``."""
    if not isinstance(text, str) or _RATIONAL_RE.fullmatch(text) is None:
        raise SpecSyntaxError(f"not a rational literal: {text!r}")
    num_text, _, den_text = text.partition("/")
    if not den_text:
        return Fraction(int(num_text))
    den = int(den_text)
    if den == 0:
        raise SpecSyntaxError(f"denominator must be positive: {text!r}")
    return Fraction(int(num_text), den)


def format_rational(value: Fraction) -> str:
    """Render ``value`` in the literal syntax accepted by :func:`parse_rational`."""
    return str(value)


def component_bits(value: Fraction) -> int:
    """Bit length of the larger of numerator magnitude and denominator."""
    return max(value.numerator.bit_length(), value.denominator.bit_length())


def check_bits(value: Fraction, max_bits: int) -> None:
    """Raise :class:`BitLengthExceededError` if either component exceeds the cap."""
    bits = component_bits(value)
    if bits > max_bits:
        raise BitLengthExceededError(
            f"rational component reached {bits} bits (cap {max_bits})"
        )


def resolve_max_bits(override: int | None = None) -> int:
    """Effective bit cap: explicit override, else the environment, else the default."""
    if override is not None:
        if override < 1:
            raise ValueError(f"max_bits must be positive, got {override}")
        return override
    env = os.environ.get(ENV_MAX_BITS)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{ENV_MAX_BITS} must be an integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"{ENV_MAX_BITS} must be positive, got {value}")
        return value
    return DEFAULT_MAX_BITS


def log_abs_int(n: int) -> float:
    """Natural log of ``|n|`` for a nonzero integer of any size."""
    if n == 0:
        raise ZeroValueError("log of zero")
    n = abs(n)
    excess = n.bit_length() - _MANTISSA_BITS
    if excess <= 0:
        return math.log(n)
    return math.log(n >> excess) + excess * _LN2


@dataclass(frozen=True)
class SignedLog:
    """A nonzero real stored as its sign and the natural log of its magnitude."""

    sign: int
    logmag: float

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def __mul__(self, other: "SignedLog") -> "SignedLog":
        return SignedLog(self.sign * other.sign, self.logmag + other.logmag)

    def __truediv__(self, other: "SignedLog") -> "SignedLog":
        return SignedLog(self.sign * other.sign, self.logmag - other.logmag)


def to_signed_log(value: Fraction | int) -> SignedLog:
    """Convert a nonzero rational to its signed-log form.

    The log magnitude is the difference of the integer logs of numerator
    and denominator, each computed via the bit-length decomposition above.
    """
    value = Fraction(value)
    if value == 0:
        raise ZeroValueError("signed-log form exists only for nonzero values")
    sign = 1 if value > 0 else -1
    return SignedLog(sign, log_abs_int(value.numerator) - log_abs_int(value.denominator))
