"""Streak-conditional success rates for binary sequences.

Exact distributions (enumeration and dynamic programming), closed forms for
streak length 1, and seeded Monte Carlo cross-validation of the downward
bias of the hot hand statistic under i.i.d. Bernoulli data.
"""

from .bernoulli import (
    Probability,
    ZeroProbabilityError,
    as_probability,
    format_probability,
    parse_probability,
    prob_all_failures,
    prob_any_success,
)
from .exact import (
    ENUMERATION_LIMIT,
    ConditioningError,
    EnumerationLimitError,
    JointCountDistribution,
    conditional_expectation,
    distribution_to_json,
    dp_joint,
    enumerate_joint,
    per_term_expectation_k1,
    prob_denominator_zero,
)
from .formulas import (
    bias_gap_k1,
    expected_hot_hand_k1,
    interior_term_expectation_k1,
    last_term_expectation_k1,
    recip_one_plus_binomial,
    recip_two_plus_binomial,
    verify_amgm_inequality,
)
from .sequences import (
    BinarySequence,
    SequenceParseError,
    StreakCounts,
    count_streak_terms,
    hot_hand_statistic,
    parse_sequence,
)
from .simulate import (
    GENERATOR_NAME,
    AcceptanceShortfallError,
    SimulationConfig,
    SimulationResult,
    result_to_json,
    simulate,
)

__version__ = "0.1.0"

__all__ = [
    "BinarySequence",
    "StreakCounts",
    "SequenceParseError",
    "count_streak_terms",
    "hot_hand_statistic",
    "parse_sequence",
    "Probability",
    "ZeroProbabilityError",
    "as_probability",
    "parse_probability",
    "format_probability",
    "prob_all_failures",
    "prob_any_success",
    "recip_one_plus_binomial",
    "recip_two_plus_binomial",
    "expected_hot_hand_k1",
    "last_term_expectation_k1",
    "interior_term_expectation_k1",
    "bias_gap_k1",
    "verify_amgm_inequality",
    "ENUMERATION_LIMIT",
    "EnumerationLimitError",
    "ConditioningError",
    "JointCountDistribution",
    "enumerate_joint",
    "dp_joint",
    "conditional_expectation",
    "prob_denominator_zero",
    "per_term_expectation_k1",
    "distribution_to_json",
    "GENERATOR_NAME",
    "AcceptanceShortfallError",
    "SimulationConfig",
    "SimulationResult",
    "simulate",
    "result_to_json",
]
