"""Minimal-period detection for the joint (x, y) sequence.

The next pair depends only on the trailing window of max(p, q) consecutive
pairs, so the sequence of windows is the orbit of a deterministic map.
Scanning windows with a first-repeat hash map therefore gives, at the
first collision, both the minimal cycle length and the minimal window
preperiod: window i recurring first at window j > i means the orbit has
tail length i and cycle length j - i.

Window k is the one ending at pair index k; k = 0 is the initial data.  A
preperiod of 0 thus means the trajectory repeats from the first generated
pair onward.  Pairwise equality (x_{n+period}, y_{n+period}) = (x_n, y_n)
is guaranteed for every n >= preperiod - max(p, q) + 1, in particular for
all n >= preperiod.

States are tuples of canonical rationals, so a hash collision can never
produce a false positive: the dict compares keys for full equality.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from typing import Union

from .model import SystemSpec
from .simulator import BACKEND_EXACT, Trajectory, iter_pairs


@dataclass(frozen=True)
class Periodic:
    preperiod: int
    period: int

    def to_obj(self) -> dict:
        return {"status": "periodic", "n0": self.preperiod, "period": self.period}


@dataclass(frozen=True)
class NoCycleWithinHorizon:
    horizon: int

    def to_obj(self) -> dict:
        return {"status": "no-cycle", "horizon": self.horizon}


CycleResult = Union[Periodic, NoCycleWithinHorizon]


def default_horizon(p: int, q: int) -> int:
    """Large enough to expose every periodic regime in scope, with slack."""
    return 4 * math.lcm(p, 2 * q) + 4 * max(p, q)


def find_window_cycle(items: Sequence[Hashable], window: int) -> tuple[int, int] | None:
    """First repeated length-``window`` window of ``items``.

    Returns (first_occurrence, distance) in window-start indices, or None
    if every window is distinct.
    """
    if window < 1 or len(items) < window:
        return None
    seen: dict = {}
    for k in range(len(items) - window + 1):
        state = tuple(items[k:k + window])
        if state in seen:
            return seen[state], k - seen[state]
        seen[state] = k
    return None


def find_cycle(traj: Trajectory) -> CycleResult:
    """Scan an existing exact trajectory for its first repeated window."""
    if traj.backend != BACKEND_EXACT:
        raise ValueError("cycle detection needs hashable exact states")
    spec = traj.spec
    w = max(spec.p, spec.q)
    hit = find_window_cycle(traj.pairs(), w)
    if hit is None:
        return NoCycleWithinHorizon(horizon=traj.n_max)
    start, period = hit
    # items begin at pair index -q+1, so the window starting at offset k
    # ends at pair index k + w - q.
    return Periodic(preperiod=start + w - spec.q, period=period)


def detect_cycle(spec: SystemSpec, horizon: int | None = None,
                 max_bits: int | None = None) -> CycleResult:
    """Simulate up to ``horizon`` generated pairs, stopping at the first repeat."""
    if horizon is None:
        horizon = default_horizon(spec.p, spec.q)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    w = max(spec.p, spec.q)
    window = deque(zip(spec.x_init, spec.y_init), maxlen=w)
    seen = {tuple(window): 0}
    for n, x, y in itertools.islice(iter_pairs(spec, BACKEND_EXACT, max_bits), horizon):
        window.append((x, y))
        state = tuple(window)
        if state in seen:
            return Periodic(preperiod=seen[state], period=n - seen[state])
        seen[state] = n
    return NoCycleWithinHorizon(horizon=horizon)


def confirm_periodic(traj: Trajectory, preperiod: int, period: int, cycles: int = 2) -> bool:
    """Replay check: pairs at n and n + period agree for preperiod <= n <= preperiod + cycles*period."""
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    last = preperiod + (cycles + 1) * period
    if traj.n_max < last:
        raise ValueError(f"need a trajectory through n={last}, have {traj.n_max}")
    return all(
        traj.x(n) == traj.x(n + period) and traj.y(n) == traj.y(n + period)
        for n in range(preperiod, preperiod + cycles * period + 1)
    )
