"""Shared helpers for building random system instances."""

from __future__ import annotations

import random
from fractions import Fraction

from perisys import SystemSpec


def rand_value(rng: random.Random, max_component: int = 16, signed: bool = False) -> Fraction:
    value = Fraction(rng.randint(1, max_component), rng.randint(1, max_component))
    if signed and rng.random() < 0.5:
        value = -value
    return value


def random_signed_spec(rng: random.Random, p: int, q: int,
                       a: Fraction | int | None = None,
                       b: Fraction | int | None = None) -> SystemSpec:
    """Random spec with sign-mixed initial data and (by default) random a, b."""
    if a is None:
        a = rand_value(rng, 5, signed=True)
    if b is None:
        b = rand_value(rng, 5, signed=True)
    return SystemSpec(
        a=Fraction(a), b=Fraction(b), p=p, q=q,
        x_init=tuple(rand_value(rng, signed=True) for _ in range(q)),
        y_init=tuple(rand_value(rng, signed=True) for _ in range(q)),
    )


def fixed_point_spec(p: int = 2, q: int = 3) -> SystemSpec:
    return SystemSpec(a=1, b=1, p=p, q=q,
                      x_init=(Fraction(1),) * q, y_init=(Fraction(1),) * q)
