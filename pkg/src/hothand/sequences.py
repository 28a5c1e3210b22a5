"""Binary sequences, streak-window counts, and the hot hand statistic.

For a 0/1 sequence of length n and a streak length k, a streak window is a
run of k consecutive ones.  The hot hand statistic is the fraction of streak
windows ending before the last position that are immediately followed by
another one.  It is undefined when no such window exists.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union


class SequenceParseError(ValueError):
    """Raised when text cannot be parsed as a binary sequence.

    ``position`` is the 0-based offset of the offending character, or None
    when the input contains no bits at all.
    """

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class BinarySequence:
    """An immutable, non-empty sequence of 0/1 values."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) == 0:
            raise ValueError("a binary sequence must contain at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("all elements must be 0 or 1")
        # normalize bools / numpy ints to plain ints
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    @property
    def n(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class StreakCounts:
    """Streak-window tallies for one sequence at streak length k.

    ``opportunities`` counts the length-k all-ones windows ending before the
    last position (the denominator of the statistic, printed as D), and
    ``continuations`` counts those followed by another one, i.e. the
    length-(k+1) all-ones windows (the numerator, printed as N).
    """

    continuations: int
    opportunities: int
    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.continuations <= self.opportunities <= self.n - self.k:
            raise ValueError(
                f"inconsistent counts: need 0 <= N <= D <= n-k, got "
                f"N={self.continuations} D={self.opportunities} n-k={self.n - self.k}"
            )


SequenceLike = Union[BinarySequence, Iterable[int]]


def _as_bits(x: SequenceLike) -> tuple[int, ...]:
    if isinstance(x, BinarySequence):
        return x.bits
    return BinarySequence(tuple(x)).bits


def _check_streak_length(k: int, n: int) -> None:
    if k < 1:
        raise ValueError(f"streak length k must be >= 1, got k={k}")
    if k > n - 1:
        raise ValueError(f"streak length k must be <= n-1 = {n - 1}, got k={k}")


def _raw_counts(bits: tuple[int, ...], k: int) -> tuple[int, int]:
    # single pass over the trailing run length; O(n) regardless of k
    n = len(bits)
    run = 0
    continuations = 0
    opportunities = 0
    for i, bit in enumerate(bits, start=1):
        if bit:
            run += 1
            if run >= k and i <= n - 1:
                opportunities += 1
            if run >= k + 1:
                continuations += 1
        else:
            run = 0
    return continuations, opportunities


def count_streak_terms(x: SequenceLike, k: int) -> StreakCounts:
    """Count the numerator and denominator windows of the hot hand statistic."""
    bits = _as_bits(x)
    _check_streak_length(k, len(bits))
    continuations, opportunities = _raw_counts(bits, k)
    return StreakCounts(continuations, opportunities, k=k, n=len(bits))


def hot_hand_statistic(x: SequenceLike, k: int) -> Optional[Fraction]:
    """Exact value of the hot hand statistic, or None when it is undefined.

    The statistic is the ratio continuations/opportunities; it is undefined
    (None) exactly when the sequence has no length-k all-ones window ending
    before the last position.
    """
    counts = count_streak_terms(x, k)
    if counts.opportunities == 0:
        return None
    return Fraction(counts.continuations, counts.opportunities)


def parse_sequence(text: str) -> BinarySequence:
    """Parse '0'/'1' characters into a BinarySequence, ignoring whitespace."""
    bits = []
    for pos, ch in enumerate(text):
        if ch in "01":
            bits.append(ch == "1")
        elif not ch.isspace():
            raise SequenceParseError(
                f"invalid character {ch!r} at offset {pos}", position=pos
            )
    if not bits:
        raise SequenceParseError("no bits found in input", position=None)
    return BinarySequence(tuple(int(b) for b in bits))
