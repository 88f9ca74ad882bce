"""Drift and growth laws layered on top of exact trajectories.

With c = a/b, log magnitudes satisfy an affine version of the linear
recurrence, adding a deterministic drift of A = ln(c) / (2p) per index on
top of the oscillatory part.  Over one block of m = lcm(p, 2q) steps the
oscillation cancels exactly whenever p/gcd(p, q) is odd, leaving the exact
rational ratio

    x_{n+m} / x_n = c^(q/g),       g = gcd(p, q),

valid for every generated n (m/(2p) = q/g is an integer precisely in this
regime).  Separately, for |b| = |a| the log magnitude restricted to any
residue class mod m is at most affine in the block counter (repeated
characteristic roots contribute the linear part, simple roots cancel over
a block), so the second difference along stride m vanishes exactly:
x_{n+2m} * x_n = x_{n+m}^2, signs included, even in regimes with no cycle
at all.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    NotOddQuotientError,
    TooFewPointsError,
    WrongBackendError,
    WrongRegimeError,
)
from .model import SystemSpec
from .simulator import BACKEND_EXACT, Trajectory, subsequence, to_signed_log


@dataclass(frozen=True)
class DriftReport:
    """Per-step and per-block growth constants of a spec."""

    c: Fraction
    drift_per_step: float
    steps_per_block: int
    block_ratio: Fraction | None

    def to_obj(self) -> dict:
        return {
            "c": str(self.c),
            "drift_per_step": self.drift_per_step,
            "steps_per_block": self.steps_per_block,
            "block_ratio": None if self.block_ratio is None else str(self.block_ratio),
        }


class Monotonicity(Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    CONSTANT = "Constant"
    NON_MONOTONE = "NonMonotone"


def _block_steps(spec: SystemSpec) -> int:
    return math.lcm(spec.p, 2 * spec.q)


def _odd_quotient(spec: SystemSpec) -> bool:
    return (spec.p // math.gcd(spec.p, spec.q)) % 2 == 1


def drift(spec: SystemSpec) -> DriftReport:
    """Drift constants for a spec.

    ``drift_per_step`` is ln|c| / (2p) (log-magnitude units per index).
    ``block_ratio`` is the exact c^(q/g); it exists only when p/g is odd,
    otherwise the block exponent m/(2p) is not an integer and the field is
    omitted.
    """
    c = spec.c
    per_step = to_signed_log(c).logmag / (2 * spec.p)
    ratio = None
    if _odd_quotient(spec):
        ratio = c ** (spec.q // math.gcd(spec.p, spec.q))
    return DriftReport(
        c=c,
        drift_per_step=per_step,
        steps_per_block=_block_steps(spec),
        block_ratio=ratio,
    )


def _require_exact(traj: Trajectory) -> None:
    if traj.backend != BACKEND_EXACT:
        raise WrongBackendError(f"exact backend required, got {traj.backend!r}")


def block_ratio_check(traj: Trajectory) -> bool:
    """True iff x_{n+m} = c^(q/g) * x_n exactly for every generated n."""
    _require_exact(traj)
    spec = traj.spec
    if not _odd_quotient(spec):
        raise NotOddQuotientError(
            f"p/gcd(p, q) is even for (p, q) = ({spec.p}, {spec.q}); no exact block ratio"
        )
    m = _block_steps(spec)
    if traj.n_max < m + 1:
        raise ValueError(f"need a trajectory through n={m + 1}, have {traj.n_max}")
    ratio = spec.c ** (spec.q // math.gcd(spec.p, spec.q))
    return all(
        traj.x(n + m) == ratio * traj.x(n)
        for n in range(1, traj.n_max - m + 1)
    )


def second_difference_check(traj: Trajectory) -> bool:
    """True iff x_{n+2m} * x_n = x_{n+m}^2 exactly for every generated n.

    Holds for |b| = |a| regardless of periodicity; a repeated root only
    adds a linear log term, which the second difference kills.
    """
    _require_exact(traj)
    spec = traj.spec
    if abs(spec.a) != abs(spec.b):
        raise WrongRegimeError(
            f"second-difference law needs |b| = |a|, got a={spec.a}, b={spec.b}"
        )
    m = _block_steps(spec)
    if traj.n_max < 2 * m + 1:
        raise ValueError(f"need a trajectory through n={2 * m + 1}, have {traj.n_max}")
    return all(
        traj.x(n + 2 * m) * traj.x(n) == traj.x(n + m) ** 2
        for n in range(1, traj.n_max - 2 * m + 1)
    )


def growth_slope(traj: Trajectory, m: int, t: int) -> float:
    """Least-squares slope of ln|x_{mn+t}| against the block counter n."""
    values = subsequence(traj, m, t, "x")
    if len(values) < 3:
        raise TooFewPointsError(f"need at least 3 subsequence points, got {len(values)}")
    if traj.backend == BACKEND_EXACT:
        logs = [to_signed_log(v).logmag for v in values]
    else:
        logs = [v.logmag for v in values]
    return statistics.linear_regression(range(len(logs)), logs).slope


def monotone_check(traj: Trajectory, m: int, t: int) -> Monotonicity:
    """Eventual strict monotonicity of |x_{mn+t}|, by exact comparison.

    Classifies the longest suffix of the subsequence on which consecutive
    comparisons all agree; the suffix must span at least 3 points, so a
    preperiod is skipped but the verdict is never read off fewer than two
    comparisons.
    """
    _require_exact(traj)
    values = [abs(v) for v in subsequence(traj, m, t, "x")]
    if len(values) < 3:
        raise TooFewPointsError(f"need at least 3 subsequence points, got {len(values)}")
    directions = [
        (second > first) - (second < first)
        for first, second in zip(values, values[1:])
    ]
    tail = directions[-1]
    span = 0
    for step in reversed(directions):
        if step != tail:
            break
        span += 1
    if span < 2:
        return Monotonicity.NON_MONOTONE
    if tail > 0:
        return Monotonicity.INCREASING
    if tail < 0:
        return Monotonicity.DECREASING
    return Monotonicity.CONSTANT
