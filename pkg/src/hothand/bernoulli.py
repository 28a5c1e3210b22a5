"""Success-probability parameters with an exact and a floating-point path.

A probability is either a ``fractions.Fraction`` (exact path: results stay
exact rationals) or a ``float`` (double path: results are doubles).  Plain
ints 0/1 are coerced to Fractions.  All routines here preserve the chosen
arithmetic path.
"""

import math
from fractions import Fraction
from typing import Union

Probability = Union[Fraction, float]


class ZeroProbabilityError(ValueError):
    """p = 0 was supplied where success probability must be positive.

    With p = 0 the event that the statistic is well-defined has probability
    zero, so no conditional quantity exists and the formulas divide by p.
    """


def as_probability(p, *, allow_one: bool = True) -> Probability:
    """Validate p and normalize it onto the exact or the double path.

    Fractions and ints take the exact path, floats the double path.
    Requires 0 < p <= 1 (or 0 < p < 1 when ``allow_one`` is false).
    """
    if isinstance(p, bool):
        raise TypeError("p must be a Fraction, float, or int, not bool")
    if isinstance(p, int):
        p = Fraction(p)
    elif not isinstance(p, (Fraction, float)):
        raise TypeError(f"p must be a Fraction, float, or int, got {type(p).__name__}")
    if p == 0:
        raise ZeroProbabilityError("success probability p must be positive, got p=0")
    if p < 0 or p > 1:
        raise ValueError(f"success probability must lie in (0, 1], got p={p}")
    if not allow_one and p == 1:
        raise ValueError("success probability must lie strictly below 1 here, got p=1")
    return p


def prob_all_failures(p: Probability, m: int) -> Probability:
    """(1-p)^m: probability that m independent trials all fail."""
    if m < 0:
        raise ValueError(f"trial count must be >= 0, got {m}")
    if isinstance(p, Fraction):
        return (1 - p) ** m
    if m == 0:
        return 1.0
    if p == 1.0:
        return 0.0
    # exp(m*log(1-p)) keeps small-p accuracy where (1-p)**m loses digits
    return math.exp(m * math.log1p(-p))


def prob_any_success(p: Probability, m: int) -> Probability:
    """1-(1-p)^m: probability of at least one success in m trials."""
    if m < 0:
        raise ValueError(f"trial count must be >= 0, got {m}")
    if isinstance(p, Fraction):
        return 1 - (1 - p) ** m
    if m == 0:
        return 0.0
    if p == 1.0:
        return 1.0
    return -math.expm1(m * math.log1p(-p))


def parse_probability(text: str) -> Probability:
    """Parse a probability literal: 'a/b' or an int stay exact, decimals go double.

    The literal form decides the arithmetic path, so exactness is never
    silently faked for decimal input.
    """
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            value: Probability = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational literal {text!r}: {exc}") from None
    else:
        try:
            value = Fraction(int(text))
        except ValueError:
            try:
                value = float(text)
            except ValueError:
                raise ValueError(f"invalid probability literal {text!r}") from None
    if not 0 <= value <= 1:
        raise ValueError(f"probability literal {text!r} outside [0, 1]")
    return value


def format_probability(p: Probability) -> str:
    """Shortest faithful text form: 'a/b' for Fractions, repr for floats."""
    if isinstance(p, Fraction):
        return str(p)
    return repr(p)
