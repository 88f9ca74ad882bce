"""Exact simulation and symbolic periodicity analysis for the coupled
rational recurrence x_n = a/y_{n-p}, y_n = b y_{n-p} / (x_{n-q} y_{n-q}).

Two independent routes answer the same questions: brute-force exact
trajectory analysis (simulator, cycle, closedform) and characteristic-root
analysis (spectral).  The CLI ties them together and cross-checks them.
"""

from .closedform import (
    DriftReport,
    Monotonicity,
    block_ratio_check,
    drift,
    growth_slope,
    monotone_check,
    second_difference_check,
)
from .cycle import (
    CycleResult,
    NoCycleWithinHorizon,
    Periodic,
    confirm_periodic,
    default_horizon,
    detect_cycle,
    find_cycle,
    find_window_cycle,
)
from .errors import (
    BitLengthExceededError,
    NotOddQuotientError,
    NotPeriodicRegimeError,
    PerisysError,
    ShapeError,
    SpecSyntaxError,
    TooFewPointsError,
    WrongBackendError,
    WrongRegimeError,
    ZeroValueError,
)
from .model import (
    SystemSpec,
    ValidationReport,
    load_spec,
    parse_spec,
    random_positive_spec,
    spec_to_json,
    spec_to_obj,
    validate,
)
from .numerics import (
    DEFAULT_MAX_BITS,
    ENV_MAX_BITS,
    SignedLog,
    component_bits,
    format_rational,
    parse_rational,
    resolve_max_bits,
    to_signed_log,
)
from .simulator import (
    BACKEND_EXACT,
    BACKEND_SIGNEDLOG,
    Trajectory,
    iter_pairs,
    product_invariant_check,
    simulate,
    subsequence,
    trajectory_records,
    trajectory_to_obj,
    write_trajectory_csv,
    x_relation_check,
)
from .spectral import (
    Classification,
    Decomposition,
    Reason,
    Regime,
    SpectrumReport,
    classify,
    decompose,
    enumerate_roots,
    has_repeated_root,
    negation_root_turns,
    predicted_period,
    repeated_root_by_condition,
    repeated_root_by_intersection,
    turn,
    two_adic_valuation,
    unit_root_turns,
)

__version__ = "0.1.0"
