"""Window-state cycle detection: minimality, replay confirmation, agreement."""

from __future__ import annotations

import random

import pytest

from perisys import (
    BitLengthExceededError,
    NoCycleWithinHorizon,
    Periodic,
    Regime,
    classify,
    confirm_periodic,
    default_horizon,
    detect_cycle,
    find_cycle,
    find_window_cycle,
    random_positive_spec,
    simulate,
)

from conftest import fixed_point_spec


def window_differs(traj, n, period):
    """True iff the trailing windows at n and n + period differ (state level)."""
    w = max(traj.spec.p, traj.spec.q)
    left = [(traj.x(i), traj.y(i)) for i in range(n - w + 1, n + 1)]
    right = [(traj.x(i), traj.y(i)) for i in range(n - w + 1 + period, n + period + 1)]
    return left != right


def test_fixed_point_is_periodic_from_zero():
    assert detect_cycle(fixed_point_spec(2, 3), 100) == Periodic(preperiod=0, period=1)


def test_window_cycle_on_plain_sequences():
    assert find_window_cycle([0, 1, 2, 1, 2, 1, 2], 2) == (1, 2)
    assert find_window_cycle([0, 1, 2, 3, 4], 2) is None
    assert find_window_cycle([5, 5], 3) is None
    assert find_window_cycle([7, 7, 7], 1) == (0, 1)


def test_period_60_with_replay_and_minimality():
    rng = random.Random(42)
    for _ in range(5):
        spec = random_positive_spec(rng, 6, 10)
        result = detect_cycle(spec, 5000)
        assert isinstance(result, Periodic)
        assert 60 % result.period == 0
        assert result.period == 60  # generic initial data
        traj = simulate(spec, result.preperiod + 3 * result.period)
        assert confirm_periodic(traj, result.preperiod, result.period)
        # no proper divisor of the period passes the replay check
        for d in (2, 3, 5):
            assert not confirm_periodic(traj, result.preperiod, result.period // d)
        # the preperiod is minimal at window level
        if result.preperiod > 0:
            assert window_differs(traj, result.preperiod - 1, result.period)


def test_period_840_spot_check():
    spec = random_positive_spec(random.Random(4), 60, 84)
    result = detect_cycle(spec, 20000)
    assert isinstance(result, Periodic)
    assert 840 % result.period == 0 and result.period == 840


def test_no_cycle_when_q_odd_and_p_even():
    rng = random.Random(11)
    for _ in range(3):
        spec = random_positive_spec(rng, 2, 3)
        assert detect_cycle(spec, 3000) == NoCycleWithinHorizon(3000)


def test_find_cycle_matches_detect_cycle():
    spec = random_positive_spec(random.Random(13), 6, 10)
    detected = detect_cycle(spec, 1000)
    scanned = find_cycle(simulate(spec, 1000))
    assert detected == scanned


def test_find_cycle_reports_trajectory_horizon():
    spec = random_positive_spec(random.Random(17), 4, 6)
    assert find_cycle(simulate(spec, 800)) == NoCycleWithinHorizon(800)


def test_default_horizon_covers_periodic_regimes():
    assert default_horizon(6, 10) == 4 * 60 + 4 * 10
    spec = random_positive_spec(random.Random(19), 6, 10)
    assert isinstance(detect_cycle(spec), Periodic)


def test_detector_agrees_with_classifier_on_grid():
    rng = random.Random(23)
    for p in range(1, 8):
        for q in range(p + 1, 9):
            prediction = classify(p, q)
            for _ in range(2):
                spec = random_positive_spec(rng, p, q)
                result = detect_cycle(spec)
                if prediction.regime is Regime.EVENTUALLY_PERIODIC:
                    assert isinstance(result, Periodic)
                    assert prediction.predicted_period % result.period == 0
                else:
                    # generic data: no cycle (degenerate data would be periodic)
                    assert isinstance(result, NoCycleWithinHorizon)


def test_detect_cycle_propagates_bit_cap():
    spec = random_positive_spec(random.Random(29), 2, 3)
    with pytest.raises(BitLengthExceededError):
        detect_cycle(spec, 5000, max_bits=64)


def test_detect_cycle_rejects_bad_horizon():
    with pytest.raises(ValueError):
        detect_cycle(fixed_point_spec(), 0)


def test_confirm_periodic_needs_enough_data():
    traj = simulate(fixed_point_spec(2, 3), 10)
    assert confirm_periodic(traj, 0, 1, cycles=2)
    with pytest.raises(ValueError):
        confirm_periodic(traj, 0, 5, cycles=2)
    with pytest.raises(ValueError):
        confirm_periodic(traj, 0, 0)
