"""Seeded rejection-sampling estimate of the conditional hot hand statistic mean.

Draws i.i.d. Bernoulli(p) sequences, discards those where the statistic is
undefined (rejection realizes the conditioning on D != 0), and averages N/D
over the accepted draws.  The generator is numpy's PCG64 seeded through
SeedSequence; shard s of a sharded run uses spawn_key=(s,), so results are a
pure function of (config, shard count) and reproduce bit-identically.
"""

import math
from dataclasses import dataclass

import numpy as np

GENERATOR_NAME = "numpy-pcg64"

# rows per batch, sized so one uniform block stays around 32 MB
_BATCH_DOUBLES = 1 << 22


class AcceptanceShortfallError(RuntimeError):
    """Attempt cap hit before enough accepted samples; carries partial counts.

    Signals that P(D != 0) is too small for this (n, k, p) and cap.
    """

    def __init__(self, message: str, accepted: int, rejected: int):
        super().__init__(message)
        self.accepted = accepted
        self.rejected = rejected


@dataclass(frozen=True)
class SimulationConfig:
    n: int
    k: int
    p: float
    samples: int
    seed: int
    max_attempt_factor: int = 10
    shards: int = 1

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(
                f"streak length k must satisfy 1 <= k <= n-1 = {self.n - 1}, got k={self.k}"
            )
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie strictly in (0, 1), got p={self.p}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed}")
        if self.max_attempt_factor < 1:
            raise ValueError(
                f"max_attempt_factor must be >= 1, got {self.max_attempt_factor}"
            )
        if self.shards < 1:
            raise ValueError(f"shards must be >= 1, got {self.shards}")


@dataclass(frozen=True)
class SimulationResult:
    estimate: float
    stderr: float
    accepted: int
    rejected: int
    empirical_p_d_zero: float
    generator: str = GENERATOR_NAME

    def __post_init__(self):
        if not 0.0 <= self.estimate <= 1.0:
            raise ValueError(f"estimate outside [0, 1]: {self.estimate}")


def _batch_counts(bits: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-row (N, D) for a (rows, n) boolean matrix."""
    n = bits.shape[1]
    windows = bits[:, k - 1 :].copy()  # all-ones windows of length k, by end position
    for i in range(1, k):
        windows &= bits[:, k - 1 - i : n - i]
    opportunities = windows[:, :-1].sum(axis=1)
    continuations = (windows[:, :-1] & bits[:, k:]).sum(axis=1)
    return continuations, opportunities


def _run_shard(
    rng: np.random.Generator, n: int, k: int, p: float, quota: int, attempt_cap: int
) -> tuple[float, float, int, int]:
    """Draw until quota acceptances or the cap; returns (sum, sumsq, accepted, rejected).

    Attempts are consumed in a fixed order, so the outcome does not depend on
    the batch size.
    """
    batch = max(1, min(_BATCH_DOUBLES // n, attempt_cap))
    total = 0.0
    total_sq = 0.0
    accepted = 0
    rejected = 0
    attempts = 0
    while accepted < quota and attempts < attempt_cap:
        rows = min(batch, attempt_cap - attempts)
        bits = rng.random((rows, n)) < p
        cont, opp = _batch_counts(bits, k)
        keep = opp > 0
        cum = np.cumsum(keep)
        hits = int(cum[-1]) if rows else 0
        if accepted + hits >= quota:
            # cut right at the draw that fills the quota
            last = int(np.searchsorted(cum, quota - accepted))
            cont, opp, keep = cont[: last + 1], opp[: last + 1], keep[: last + 1]
            rows = last + 1
        ratios = cont[keep] / opp[keep]
        total += float(ratios.sum())
        total_sq += float((ratios * ratios).sum())
        accepted += int(keep.sum())
        rejected += rows - int(keep.sum())
        attempts += rows
    return total, total_sq, accepted, rejected


def simulate(config: SimulationConfig) -> SimulationResult:
    """Estimate E[N/D | D != 0] by rejection sampling; deterministic per config."""
    base = config.samples // config.shards
    extra = config.samples % config.shards
    total = 0.0
    total_sq = 0.0
    accepted = 0
    rejected = 0
    for shard in range(config.shards):
        quota = base + (1 if shard < extra else 0)
        if quota == 0:
            continue
        seq = np.random.SeedSequence(entropy=config.seed, spawn_key=(shard,))
        rng = np.random.Generator(np.random.PCG64(seq))
        s, sq, acc, rej = _run_shard(
            rng, config.n, config.k, config.p, quota, config.max_attempt_factor * quota
        )
        total += s
        total_sq += sq
        accepted += acc
        rejected += rej
    if accepted < config.samples:
        raise AcceptanceShortfallError(
            f"attempt cap reached with {accepted}/{config.samples} accepted draws "
            f"({rejected} rejected); P(D != 0) is too small for this cap",
            accepted=accepted,
            rejected=rejected,
        )
    mean = total / accepted
    if accepted >= 2:
        var = max(total_sq - accepted * mean * mean, 0.0) / (accepted - 1)
        stderr = math.sqrt(var / accepted)
    else:
        stderr = float("nan")
    return SimulationResult(
        estimate=mean,
        stderr=stderr,
        accepted=accepted,
        rejected=rejected,
        empirical_p_d_zero=rejected / (accepted + rejected),
    )


def result_to_json(config: SimulationConfig, result: SimulationResult) -> dict:
    """JSON-ready report: config echo plus estimate, error, and bookkeeping."""
    return {
        "config": {
            "n": config.n,
            "k": config.k,
            "p": config.p,
            "samples": config.samples,
            "seed": config.seed,
            "max_attempt_factor": config.max_attempt_factor,
            "shards": config.shards,
        },
        "estimate": result.estimate,
        "stderr": result.stderr,
        "accepted": result.accepted,
        "rejected": result.rejected,
        "empirical_p_d_zero": result.empirical_p_d_zero,
        "generator_name": result.generator,
    }
