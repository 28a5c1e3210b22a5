"""Exact joint law of the hot hand statistic's numerator and denominator counts.

Two independent routes produce the same distribution: brute-force enumeration
of all 2^n sequences (the oracle, capped at n=20) and a forward dynamic
program over positions whose state is the trailing run of ones capped at k+1
plus the counts accumulated so far.  The capped run is a sufficient statistic
for window counting, so the DP is lossless and scales to large n.

On the exact path the DP carries integer path weights a^ones * (b-a)^zeros
for p = a/b and divides by b^n only when building the final pmf; this avoids
per-step rational normalization.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Union

from .bernoulli import Probability, as_probability
from .sequences import _check_streak_length, _raw_counts

ENUMERATION_LIMIT = 20

CountPair = tuple[int, int]  # (continuations N, opportunities D)


class EnumerationLimitError(ValueError):
    """Requested brute-force enumeration beyond the 2^n guard; use dp_joint."""


class ConditioningError(ValueError):
    """The event that the statistic is defined carries zero probability."""


@dataclass(frozen=True)
class JointCountDistribution:
    """Sparse pmf over (N, D) count pairs for given (n, k, p).

    ``mode`` is 'rational' (Fraction probabilities, exact) or 'double'.
    Only reachable pairs with nonzero mass are stored.
    """

    n: int
    k: int
    p: Probability
    pmf: dict[CountPair, Union[Fraction, float]]
    mode: str

    def total_mass(self) -> Union[Fraction, float]:
        return sum(self.pmf.values())


def _as_dist_probability(p) -> Probability:
    # distribution building tolerates the degenerate endpoints 0 and 1
    if isinstance(p, bool):
        raise TypeError("p must be a Fraction, float, or int, not bool")
    if isinstance(p, int):
        p = Fraction(p)
    elif not isinstance(p, (Fraction, float)):
        raise TypeError(f"p must be a Fraction, float, or int, got {type(p).__name__}")
    if p < 0 or p > 1:
        raise ValueError(f"success probability must lie in [0, 1], got p={p}")
    return p


@lru_cache(maxsize=None)
def _count_histogram(n: int, k: int) -> dict[tuple[int, int, int], int]:
    """Multiplicity of each (N, D, ones) triple over all 2^n sequences."""
    hist: dict[tuple[int, int, int], int] = {}
    for bits in product((0, 1), repeat=n):
        key = _raw_counts(bits, k) + (sum(bits),)
        hist[key] = hist.get(key, 0) + 1
    return hist


def enumerate_joint(n: int, k: int, p) -> JointCountDistribution:
    """Brute-force joint pmf of (N, D); the oracle route, guarded at n <= 20."""
    _check_streak_length(k, n)
    if n > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"enumeration is limited to n <= {ENUMERATION_LIMIT} "
            f"(got n={n}); use dp_joint for larger n"
        )
    p = _as_dist_probability(p)
    hist = _count_histogram(n, k)
    pmf: dict[CountPair, Union[Fraction, float]] = {}
    if isinstance(p, Fraction):
        a, b = p.numerator, p.denominator
        wpow = [a**i * (b - a) ** (n - i) for i in range(n + 1)]
        denom = b**n
        for (cont, opp, ones), mult in hist.items():
            w = mult * wpow[ones]
            if w:
                key = (cont, opp)
                pmf[key] = pmf.get(key, 0) + w
        return JointCountDistribution(
            n, k, p, {key: Fraction(w, denom) for key, w in pmf.items()}, "rational"
        )
    fpow = [p**i * (1.0 - p) ** (n - i) for i in range(n + 1)]
    for (cont, opp, ones), mult in hist.items():
        w = mult * fpow[ones]
        if w:
            key = (cont, opp)
            pmf[key] = pmf.get(key, 0.0) + w
    return JointCountDistribution(n, k, p, pmf, "double")


def dp_joint(n: int, k: int, p) -> JointCountDistribution:
    """Joint pmf of (N, D) by forward recursion; same law as enumerate_joint.

    State is (trailing run capped at k+1, N so far, D so far).  On a one the
    run advances and D is bumped while the window still has a successor
    position, N once the run covers k+1; on a zero the run resets.
    """
    _check_streak_length(k, n)
    p = _as_dist_probability(p)
    exact = isinstance(p, Fraction)
    if exact:
        w1: Union[int, float] = p.numerator
        w0: Union[int, float] = p.denominator - p.numerator
        zero: Union[int, float] = 0
    else:
        w1, w0, zero = p, 1.0 - p, 0.0

    cap = k + 1
    states: dict[tuple[int, int, int], Union[int, float]] = {(0, 0, 0): w1**0}
    for i in range(1, n + 1):
        nxt: dict[tuple[int, int, int], Union[int, float]] = {}
        inner = i <= n - 1
        for (run, cont, opp), w in states.items():
            if w0:
                key = (0, cont, opp)
                nxt[key] = nxt.get(key, zero) + w * w0
            if w1:
                run2 = run + 1 if run < cap else cap
                opp2 = opp + 1 if (run2 >= k and inner) else opp
                cont2 = cont + 1 if run2 == cap else cont
                key = (run2, cont2, opp2)
                nxt[key] = nxt.get(key, zero) + w * w1
        states = nxt

    pmf: dict[CountPair, Union[Fraction, float]] = {}
    for (_, cont, opp), w in states.items():
        if w:
            key = (cont, opp)
            pmf[key] = pmf.get(key, zero) + w
    if exact:
        denom = p.denominator**n
        pmf = {key: Fraction(w, denom) for key, w in pmf.items()}
    return JointCountDistribution(n, k, p, pmf, "rational" if exact else "double")


def prob_denominator_zero(dist: JointCountDistribution) -> Union[Fraction, float]:
    """Mass on D = 0, i.e. the probability that the statistic is undefined."""
    zero = Fraction(0) if dist.mode == "rational" else 0.0
    return sum((w for (_, opp), w in dist.pmf.items() if opp == 0), zero)


def conditional_expectation(dist: JointCountDistribution) -> Union[Fraction, float]:
    """E[N/D | D > 0] under the distribution; errors when that event is null."""
    if dist.mode == "rational":
        num = Fraction(0)
        den = Fraction(0)
        for (cont, opp), w in dist.pmf.items():
            if opp > 0:
                num += Fraction(cont, opp) * w
                den += w
    else:
        num = 0.0
        den = 0.0
        for (cont, opp), w in dist.pmf.items():
            if opp > 0:
                num += (cont / opp) * w
                den += w
    if den == 0:
        raise ConditioningError(
            "all probability mass sits at D=0; the statistic is never defined"
        )
    return num / den


def per_term_expectation_k1(n: int, j: int, p) -> Union[Fraction, float]:
    """Enumeration of one numerator term's share of the k=1 conditional mean.

    Computes E[x_{j-1} x_j / (x_1+...+x_{n-1}) | D > 0] for 2 <= j <= n.  The
    value for j = n matches the boundary closed form, and for j < n the
    common interior closed form, independently of j.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got n={n}")
    if n > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"per-term enumeration is limited to n <= {ENUMERATION_LIMIT}, got n={n}"
        )
    if not 2 <= j <= n:
        raise ValueError(f"term index j must lie in 2..{n}, got j={j}")
    p = as_probability(p, allow_one=False)

    if isinstance(p, Fraction):
        a, b = p.numerator, p.denominator
        wpow = [a**i * (b - a) ** (n - i) for i in range(n + 1)]
        scale = math.lcm(*range(1, n))  # clears every denominator sum s <= n-1
        num_int = 0
        den_int = 0
        for bits in product((0, 1), repeat=n):
            s = sum(bits[: n - 1])
            if s == 0:
                continue
            w = wpow[sum(bits)]
            den_int += w
            if bits[j - 2] and bits[j - 1]:
                num_int += w * (scale // s)
        if den_int == 0:
            raise ConditioningError("conditioning event has zero mass")
        return Fraction(num_int, scale * den_int)

    fpow = [p**i * (1.0 - p) ** (n - i) for i in range(n + 1)]
    num = 0.0
    den = 0.0
    for bits in product((0, 1), repeat=n):
        s = sum(bits[: n - 1])
        if s == 0:
            continue
        w = fpow[sum(bits)]
        den += w
        if bits[j - 2] and bits[j - 1]:
            num += w / s
    if den == 0.0:
        raise ConditioningError("conditioning event has zero mass")
    return num / den


def distribution_to_json(dist: JointCountDistribution) -> dict:
    """JSON-ready form: {n, k, p, mode, entries:[{N, D, prob_*}]}, entries sorted."""
    if dist.mode == "rational":
        p_field: Union[str, float] = str(dist.p)
        entries = [
            {"N": cont, "D": opp, "prob_num": w.numerator, "prob_den": w.denominator}
            for (cont, opp), w in sorted(dist.pmf.items())
        ]
    else:
        p_field = dist.p
        entries = [
            {"N": cont, "D": opp, "prob_float": w}
            for (cont, opp), w in sorted(dist.pmf.items())
        ]
    return {"n": dist.n, "k": dist.k, "p": p_field, "mode": dist.mode, "entries": entries}
