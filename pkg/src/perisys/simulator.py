"""Trajectory generation and the exact conservation laws of the system.

Each step n >= 1 computes

    x_n = a / y_{n-p}
    y_n = b * y_{n-p} / (x_{n-q} * y_{n-q})

on top of initial data at indices -q+1 .. 0, so every read stays inside
known values as long as p <= q (enforced by general-mode validation).

Backends:

* ``exact`` stores ``Fraction`` values; all zero-tolerance identity checks
  live on this backend.
* ``signedlog`` stores :class:`SignedLog` values whose log magnitudes track
  the exact trajectory to float precision and cannot overflow, which makes
  very long runs in growing regimes cheap.
"""

from __future__ import annotations

import csv
import itertools
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .errors import WrongBackendError
from .model import SystemSpec, spec_to_obj, validate
from .numerics import SignedLog, check_bits, format_rational, resolve_max_bits, to_signed_log

BACKEND_EXACT = "exact"
BACKEND_SIGNEDLOG = "signedlog"
BACKENDS = (BACKEND_EXACT, BACKEND_SIGNEDLOG)

TRAJECTORY_CSV_HEADER = ("n", "x", "y", "sign_x", "log_abs_x", "sign_y", "log_abs_y")


@dataclass(frozen=True)
class Trajectory:
    """Generated values for indices -q+1 .. n_max, plus their spec."""

    spec: SystemSpec
    backend: str
    xs: list
    ys: list

    @property
    def n_max(self) -> int:
        return len(self.xs) - self.spec.q

    def _offset(self, n: int) -> int:
        if not -self.spec.q + 1 <= n <= self.n_max:
            raise IndexError(f"index {n} outside stored range -{self.spec.q - 1} .. {self.n_max}")
        return n + self.spec.q - 1

    def x(self, n: int):
        return self.xs[self._offset(n)]

    def y(self, n: int):
        return self.ys[self._offset(n)]

    def pairs(self) -> list[tuple]:
        """All stored (x, y) pairs in index order, starting at -q+1."""
        return list(zip(self.xs, self.ys))


def iter_pairs(spec: SystemSpec, backend: str = BACKEND_EXACT,
               max_bits: int | None = None) -> Iterator[tuple]:
    """Yield (n, x_n, y_n) lazily for n = 1, 2, ...  Keeps O(q) state."""
    report = validate(spec, "general")
    if not report.ok:
        raise ValueError(f"spec fails general validation: {report.violations}")
    if backend == BACKEND_EXACT:
        a, b = spec.a, spec.b
        window = deque(zip(spec.x_init, spec.y_init), maxlen=spec.q)
        cap = resolve_max_bits(max_bits)
    elif backend == BACKEND_SIGNEDLOG:
        a, b = to_signed_log(spec.a), to_signed_log(spec.b)
        window = deque(
            ((to_signed_log(x), to_signed_log(y))
             for x, y in zip(spec.x_init, spec.y_init)),
            maxlen=spec.q,
        )
        cap = None
    else:
        raise WrongBackendError(f"unknown backend {backend!r}")

    back_p = spec.q - spec.p  # window[k] holds index n - q + k
    for n in itertools.count(1):
        _, y_p = window[back_p]
        x_q, y_q = window[0]
        x = a / y_p
        y = b * y_p / (x_q * y_q)
        if cap is not None:
            assert x != 0 and y != 0  # nonzero data cannot produce zero
            check_bits(x, cap)
            check_bits(y, cap)
        window.append((x, y))
        yield n, x, y


def simulate(spec: SystemSpec, n_steps: int, backend: str = BACKEND_EXACT,
             max_bits: int | None = None) -> Trajectory:
    """Generate the trajectory through index ``n_steps`` (deterministic)."""
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    if backend not in BACKENDS:
        raise WrongBackendError(f"unknown backend {backend!r}")
    if backend == BACKEND_EXACT:
        xs: list = list(spec.x_init)
        ys: list = list(spec.y_init)
    else:
        xs = [to_signed_log(v) for v in spec.x_init]
        ys = [to_signed_log(v) for v in spec.y_init]
    for _, x, y in itertools.islice(iter_pairs(spec, backend, max_bits), n_steps):
        xs.append(x)
        ys.append(y)
    return Trajectory(spec=spec, backend=backend, xs=xs, ys=ys)


def _require_exact(traj: Trajectory) -> None:
    if traj.backend != BACKEND_EXACT:
        raise WrongBackendError(f"exact backend required, got {traj.backend!r}")


def product_invariant_check(traj: Trajectory) -> bool:
    """True iff (x_n y_n)(x_{n-q} y_{n-q}) = ab exactly at every generated n."""
    _require_exact(traj)
    spec = traj.spec
    ab = spec.a * spec.b
    return all(
        (traj.x(n) * traj.y(n)) * (traj.x(n - spec.q) * traj.y(n - spec.q)) == ab
        for n in range(1, traj.n_max + 1)
    )


def x_relation_check(traj: Trajectory) -> bool:
    """True iff x_n x_{n-q} = (a/b) x_{n-p} x_{n-p-q} exactly wherever it must hold.

    The relation first links generated values at n = max(p, q) + 1.  For
    smaller n it would tie together unconstrained initial data (the x and y
    initial values are independent of each other), and it fails there for
    generic specs.
    """
    _require_exact(traj)
    spec = traj.spec
    start = max(spec.p, spec.q) + 1
    if traj.n_max < start:
        raise ValueError(f"need a trajectory through at least n={start}, have {traj.n_max}")
    c = spec.c
    return all(
        traj.x(n) * traj.x(n - spec.q) == c * traj.x(n - spec.p) * traj.x(n - spec.p - spec.q)
        for n in range(start, traj.n_max + 1)
    )


def subsequence(traj: Trajectory, m: int, t: int, which: str = "x") -> list:
    """Values at indices t, t+m, t+2m, ... up to n_max, in order."""
    if m < 1:
        raise ValueError(f"stride m must be >= 1, got {m}")
    if not 0 <= t < m:
        raise ValueError(f"offset t must lie in 0..{m - 1}, got {t}")
    if which == "x":
        pick = traj.x
    elif which == "y":
        pick = traj.y
    else:
        raise ValueError(f"which must be 'x' or 'y', got {which!r}")
    return [pick(n) for n in range(t, traj.n_max + 1, m)]


def _signed_log_of(traj: Trajectory, value) -> SignedLog:
    if traj.backend == BACKEND_EXACT:
        return to_signed_log(value)
    return value


def trajectory_records(traj: Trajectory) -> Iterator[dict]:
    """One export record per generated index n = 1 .. n_max.

    Exact values are rendered as rational literals; the signed-log backend
    has no exact form, so its x and y columns are empty.
    """
    exact = traj.backend == BACKEND_EXACT
    for n in range(1, traj.n_max + 1):
        xv, yv = traj.x(n), traj.y(n)
        sx, sy = _signed_log_of(traj, xv), _signed_log_of(traj, yv)
        yield {
            "n": n,
            "x": format_rational(xv) if exact else "",
            "y": format_rational(yv) if exact else "",
            "sign_x": sx.sign,
            "log_abs_x": sx.logmag,
            "sign_y": sy.sign,
            "log_abs_y": sy.logmag,
        }


def write_trajectory_csv(traj: Trajectory, stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(TRAJECTORY_CSV_HEADER)
    for rec in trajectory_records(traj):
        writer.writerow([
            rec["n"], rec["x"], rec["y"],
            rec["sign_x"], f"{rec['log_abs_x']:.17g}",
            rec["sign_y"], f"{rec['log_abs_y']:.17g}",
        ])


def trajectory_to_obj(traj: Trajectory) -> dict:
    """JSON-ready export: spec echo plus the same records as the CSV."""
    return {
        "spec": spec_to_obj(traj.spec),
        "backend": traj.backend,
        "n": traj.n_max,
        "rows": list(trajectory_records(traj)),
    }
