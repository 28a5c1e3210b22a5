"""Closed forms for the streak-length-1 conditional success rate.

Everything here is analytic: reciprocal moments of a shifted binomial
variable, the explicit conditional expectation of the hot hand statistic at
streak length 1, its decomposition into a boundary term and identical
interior terms, and the strict-bias inequality.  All functions run on both
arithmetic paths (see ``bernoulli``).
"""

from fractions import Fraction

from .bernoulli import Probability, as_probability, prob_all_failures, prob_any_success

Expectation = Probability  # exact rational or double, matching the p path


def _check_min(name: str, value: int, lo: int) -> None:
    if value < lo:
        raise ValueError(f"{name} must be >= {lo}, got {name}={value}")


def recip_one_plus_binomial(n: int, p) -> Expectation:
    """E[1/(1+Z)] for Z ~ Binomial(n, p): (1-(1-p)^(n+1)) / ((n+1)p)."""
    p = as_probability(p)
    _check_min("n", n, 0)
    return prob_any_success(p, n + 1) / ((n + 1) * p)


def recip_two_plus_binomial(n: int, p) -> Expectation:
    """E[1/(2+Z)] for Z ~ Binomial(n, p): ((1-p)^(n+2)+(n+2)p-1) / ((n+1)(n+2)p^2)."""
    p = as_probability(p)
    _check_min("n", n, 0)
    if isinstance(p, Fraction):
        numerator = (1 - p) ** (n + 2) + (n + 2) * p - 1
    else:
        # (n+2)p and 1-(1-p)^(n+2) nearly cancel for small p; subtracting the
        # compensated complement keeps ~3 more digits than direct powering
        numerator = (n + 2) * p - prob_any_success(p, n + 2)
    return numerator / ((n + 1) * (n + 2) * p * p)


def expected_hot_hand_k1(n: int, p) -> Expectation:
    """Conditional mean of the k=1 hot hand statistic given it is defined.

    Returns p/(1-(1-p)^(n-1)) + (p-1)/(n-1).  Exact for Fraction p.  n=2 is
    accepted as a degenerate boundary where the value reduces to p.
    """
    p = as_probability(p)
    _check_min("n", n, 2)
    return p / prob_any_success(p, n - 1) + (p - 1) / (n - 1)


def last_term_expectation_k1(n: int, p) -> Expectation:
    """Contribution of the final numerator term to the k=1 conditional mean: p/(n-1)."""
    p = as_probability(p)
    _check_min("n", n, 3)
    return p / (n - 1)


def interior_term_expectation_k1(n: int, p) -> Expectation:
    """Common contribution of each non-final numerator term to the k=1 conditional mean.

    Equals (p/(1-(1-p)^(n-1)) - 1/(n-1)) / (n-2); by exchangeability the value
    does not depend on which interior position is taken.
    """
    p = as_probability(p)
    _check_min("n", n, 3)
    one = Fraction(1) if isinstance(p, Fraction) else 1.0
    return (p / prob_any_success(p, n - 1) - one / (n - 1)) / (n - 2)


def bias_gap_k1(n: int, p) -> Expectation:
    """p minus the k=1 conditional mean; strictly positive for n >= 3, p in (0,1).

    n=2 is accepted as the degenerate boundary where the gap vanishes.
    """
    p = as_probability(p, allow_one=False)
    _check_min("n", n, 2)
    return p - expected_hot_hand_k1(n, p)


def verify_amgm_inequality(n: int, p) -> bool:
    """Check (n-1)(1-p)^(n-2) < 1 + (n-2)(1-p)^(n-1).

    This is the inequality (a weighted AM-GM instance) equivalent to the
    strict downward bias of the k=1 statistic; it must hold throughout
    n >= 3, p in (0,1).
    """
    p = as_probability(p, allow_one=False)
    _check_min("n", n, 3)
    lhs = (n - 1) * prob_all_failures(p, n - 2)
    rhs = 1 + (n - 2) * prob_all_failures(p, n - 1)
    return lhs < rhs
