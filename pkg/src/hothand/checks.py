"""Self-contained invariant battery behind the CLI ``verify`` command.

Each check recomputes a result by an independent route (direct sums, brute
enumeration, algebraic identities) and compares.  All checks are
deterministic, including the Monte Carlo smoke test, which runs on a pinned
seed.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import conditional_expectation, dp_joint, enumerate_joint, per_term_expectation_k1
from .formulas import (
    bias_gap_k1,
    expected_hot_hand_k1,
    interior_term_expectation_k1,
    last_term_expectation_k1,
    recip_one_plus_binomial,
    recip_two_plus_binomial,
    verify_amgm_inequality,
)
from .simulate import SimulationConfig, simulate


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _recip_sum_exact(n: int, p: Fraction, shift: int) -> Fraction:
    # direct sum over the binomial pmf with a common integer denominator
    a, b = p.numerator, p.denominator
    scale = math.lcm(*range(shift, n + shift + 1))
    total = 0
    comb = 1
    for i in range(n + 1):
        total += comb * a**i * (b - a) ** (n - i) * (scale // (shift + i))
        comb = comb * (n - i) // (i + 1)
    return Fraction(total, b**n * scale)


def _check_recip_moment_sums() -> CheckResult:
    grid = [Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(9, 10), Fraction(1)]
    for n in range(0, 41):
        for p in grid:
            if recip_one_plus_binomial(n, p) != _recip_sum_exact(n, p, 1):
                return CheckResult("recip-moment-sums", False, f"E[1/(1+Z)] mismatch at n={n} p={p}")
            if recip_two_plus_binomial(n, p) != _recip_sum_exact(n, p, 2):
                return CheckResult("recip-moment-sums", False, f"E[1/(2+Z)] mismatch at n={n} p={p}")
    return CheckResult("recip-moment-sums", True, "closed forms equal direct sums, n <= 40")


def _check_recip_moment_recursion() -> CheckResult:
    grid = [Fraction(1, 100), Fraction(1, 3), Fraction(2, 3), Fraction(99, 100)]
    for n in range(0, 51):
        for p in grid:
            lhs = p * recip_two_plus_binomial(n, p) + (1 - p) * recip_one_plus_binomial(n, p)
            if lhs != recip_one_plus_binomial(n + 1, p):
                return CheckResult("recip-moment-recursion", False, f"mismatch at n={n} p={p}")
    return CheckResult("recip-moment-recursion", True, "Bernoulli-step recursion exact, n <= 50")


def _check_formula_vs_enumeration() -> CheckResult:
    for n in range(2, 11):
        for p in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
            enum = conditional_expectation(enumerate_joint(n, 1, p))
            if enum != expected_hot_hand_k1(n, p):
                return CheckResult("formula-vs-enumeration", False, f"mismatch at n={n} p={p}")
    return CheckResult("formula-vs-enumeration", True, "closed form equals enumeration, n <= 10")


def _check_dp_vs_enumeration() -> CheckResult:
    for n in range(2, 11):
        for k in range(1, n):
            for p in (Fraction(1, 2), Fraction(1, 3)):
                if dp_joint(n, k, p).pmf != enumerate_joint(n, k, p).pmf:
                    return CheckResult(
                        "dp-vs-enumeration", False, f"pmf mismatch at n={n} k={k} p={p}"
                    )
    return CheckResult("dp-vs-enumeration", True, "DP reproduces enumeration, n <= 10, all k")


def _check_term_decomposition() -> CheckResult:
    grid = [Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10)]
    for n in range(3, 31):
        for p in grid:
            total = last_term_expectation_k1(n, p) + (n - 2) * interior_term_expectation_k1(n, p)
            if total != expected_hot_hand_k1(n, p):
                return CheckResult("term-decomposition", False, f"mismatch at n={n} p={p}")
    return CheckResult("term-decomposition", True, "boundary + interior terms sum to the mean")


def _check_per_term_enumeration() -> CheckResult:
    for n in range(3, 9):
        for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            if per_term_expectation_k1(n, n, p) != last_term_expectation_k1(n, p):
                return CheckResult("per-term", False, f"boundary term mismatch at n={n} p={p}")
            interior = interior_term_expectation_k1(n, p)
            for j in range(2, n):
                if per_term_expectation_k1(n, j, p) != interior:
                    return CheckResult("per-term", False, f"interior mismatch at n={n} j={j} p={p}")
    return CheckResult("per-term", True, "per-term enumeration matches both closed forms")


def _check_bias_positive() -> CheckResult:
    for n in range(3, 31):
        for i in range(1, 20):
            p = Fraction(i, 20)
            if bias_gap_k1(n, p) <= 0:
                return CheckResult("bias-positive", False, f"gap not positive at n={n} p={p}")
            if not verify_amgm_inequality(n, p):
                return CheckResult("bias-positive", False, f"AM-GM check failed at n={n} p={p}")
    return CheckResult("bias-positive", True, "gap > 0 and AM-GM inequality hold on the grid")


def _check_dp_normalization() -> CheckResult:
    for n, k, p in ((40, 1, Fraction(1, 2)), (35, 4, Fraction(9, 10)), (30, 2, Fraction(1, 3))):
        dist = dp_joint(n, k, p)
        if dist.total_mass() != 1:
            return CheckResult("dp-normalization", False, f"exact mass != 1 at n={n} k={k}")
        for cont, opp in dist.pmf:
            if not (0 <= cont <= opp <= n - k):
                return CheckResult("dp-normalization", False, f"bad support pair ({cont},{opp})")
    dist = dp_joint(200, 2, 0.3)
    if abs(dist.total_mass() - 1.0) > 1e-12:
        return CheckResult("dp-normalization", False, "double-path mass drifted beyond 1e-12")
    return CheckResult("dp-normalization", True, "pmf mass and support invariants hold")


def _check_monte_carlo_smoke() -> CheckResult:
    for n, k, seed in ((6, 1, 20240601), (8, 2, 20240602)):
        exact = conditional_expectation(dp_joint(n, k, 0.5))
        result = simulate(SimulationConfig(n=n, k=k, p=0.5, samples=20000, seed=seed))
        if abs(result.estimate - exact) > 4 * result.stderr:
            return CheckResult(
                "monte-carlo-smoke",
                False,
                f"estimate {result.estimate:.5f} beyond 4 stderr of {exact:.5f} at n={n} k={k}",
            )
    return CheckResult("monte-carlo-smoke", True, "pinned-seed estimates within 4 stderr")


def run_all() -> list[CheckResult]:
    """Run the whole battery; order is fixed so output is reproducible."""
    return [
        _check_recip_moment_sums(),
        _check_recip_moment_recursion(),
        _check_formula_vs_enumeration(),
        _check_dp_vs_enumeration(),
        _check_term_decomposition(),
        _check_per_term_enumeration(),
        _check_bias_positive(),
        _check_dp_normalization(),
        _check_monte_carlo_smoke(),
    ]
