"""System specification, admissibility checks, and the on-disk spec format.

A spec fixes the constants a, b, the delays p, q, and the 2q nonzero
initial values occupying indices -q+1 .. 0.  Generation starts at n = 1:
a step at n = 0 would read x and y at index -q, which is outside the
given data, so index 0 is treated as the last piece of initial data.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ShapeError, SpecSyntaxError, ZeroValueError
from .numerics import format_rational, parse_rational

VALIDATION_MODES = ("strict", "general")

_SPEC_KEYS = ("a", "b", "p", "q", "x_init", "y_init")


def _as_nonzero_fraction(value, what: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ShapeError(f"{what} must be a rational value, got {value!r}")
    value = Fraction(value)
    if value == 0:
        raise ZeroValueError(f"{what} must be nonzero")
    return value


@dataclass(frozen=True)
class SystemSpec:
    """Parameters and initial data of one system instance."""

    a: Fraction
    b: Fraction
    p: int
    q: int
    x_init: tuple[Fraction, ...]
    y_init: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for name in ("p", "q"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ShapeError(f"{name} must be a positive integer, got {value!r}")
        object.__setattr__(self, "a", _as_nonzero_fraction(self.a, "a"))
        object.__setattr__(self, "b", _as_nonzero_fraction(self.b, "b"))
        for name in ("x_init", "y_init"):
            values = getattr(self, name)
            if len(values) != self.q:
                raise ShapeError(f"{name} must hold exactly q={self.q} values, got {len(values)}")
            coerced = tuple(
                _as_nonzero_fraction(v, f"{name}[{i}]") for i, v in enumerate(values)
            )
            object.__setattr__(self, name, coerced)

    @property
    def c(self) -> Fraction:
        """The ratio a/b driving the drift analysis."""
        return self.a / self.b


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a spec against one admissibility mode."""

    mode: str
    violations: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(spec: SystemSpec, mode: str = "strict") -> ValidationReport:
    """Check delay hypotheses.

    ``strict`` enforces p < q and p not dividing q.  ``general`` admits any
    delays the simulator can actually run, which requires p <= q: the spec
    carries exactly q pairs of history, and a step with p > q would read
    older values than were provided.
    """
    if mode not in VALIDATION_MODES:
        raise ValueError(f"mode must be one of {VALIDATION_MODES}, got {mode!r}")
    violations: list[tuple[str, str]] = []
    if spec.p > spec.q:
        violations.append(
            ("insufficient-history",
             f"p={spec.p} exceeds q={spec.q}; only q pairs of initial data exist")
        )
    if mode == "strict":
        if spec.p >= spec.q:
            violations.append(("p-not-less-than-q", f"require p < q, got p={spec.p}, q={spec.q}"))
        if spec.q % spec.p == 0:
            violations.append(("p-divides-q", f"require p to not divide q, got {spec.p} | {spec.q}"))
    return ValidationReport(mode=mode, violations=tuple(violations))


def parse_spec_obj(obj) -> SystemSpec:
    """Build a spec from a decoded JSON object."""
    if not isinstance(obj, dict):
        raise ShapeError(f"spec document must be a JSON object, got {type(obj).__name__}")
    missing = [key for key in _SPEC_KEYS if key not in obj]
    if missing:
        raise ShapeError(f"spec document is missing keys: {', '.join(missing)}")
    for name in ("p", "q"):
        if isinstance(obj[name], bool) or not isinstance(obj[name], int):
            raise ShapeError(f"{name} must be a JSON integer, got {obj[name]!r}")
    for name in ("x_init", "y_init"):
        if not isinstance(obj[name], list):
            raise ShapeError(f"{name} must be a JSON array, got {obj[name]!r}")

    def rational(value, what: str) -> Fraction:
        if not isinstance(value, str):
            raise ShapeError(f"{what} must be a rational literal string, got {value!r}")
        return parse_rational(value)

    return SystemSpec(
        a=rational(obj["a"], "a"),
        b=rational(obj["b"], "b"),
        p=obj["p"],
        q=obj["q"],
        x_init=tuple(rational(v, f"x_init[{i}]") for i, v in enumerate(obj["x_init"])),
        y_init=tuple(rational(v, f"y_init[{i}]") for i, v in enumerate(obj["y_init"])),
    )


def parse_spec(text: str) -> SystemSpec:
    """Parse a spec document (JSON with rationals as literal strings)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(f"invalid JSON: {exc}") from exc
    return parse_spec_obj(obj)


def spec_to_obj(spec: SystemSpec) -> dict:
    """The JSON-ready form of a spec; arrays are ordered by ascending index."""
    return {
        "a": format_rational(spec.a),
        "b": format_rational(spec.b),
        "p": spec.p,
        "q": spec.q,
        "x_init": [format_rational(v) for v in spec.x_init],
        "y_init": [format_rational(v) for v in spec.y_init],
    }


def spec_to_json(spec: SystemSpec, indent: int | None = None) -> str:
    return json.dumps(spec_to_obj(spec), indent=indent)


def load_spec(path) -> SystemSpec:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_spec(handle.read())


def random_positive_spec(
    rng: random.Random,
    p: int,
    q: int,
    a: Fraction | int = 1,
    b: Fraction | int = 1,
    max_component: int = 16,
) -> SystemSpec:
    """Random generic spec with positive initial values.

    Numerators and denominators are drawn uniformly from 1..max_component;
    small magnitudes keep exact arithmetic fast while staying generic with
    overwhelming probability.
    """

    def value() -> Fraction:
        return Fraction(rng.randint(1, max_component), rng.randint(1, max_component))

    return SystemSpec(
        a=Fraction(a),
        b=Fraction(b),
        p=p,
        q=q,
        x_init=tuple(value() for _ in range(q)),
        y_init=tuple(value() for _ in range(q)),
    )
