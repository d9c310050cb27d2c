"""Random and deterministic interval ensembles for multiscale detection.

The random ensemble draws (s, e) uniformly from all pairs with
1 <= s < e <= T and e - s > 2(d - 1), with replacement (duplicates kept:
removing them would bias the ensemble toward short intervals at small T).
The generator is pinned to PCG64 seeded through ``numpy.random.SeedSequence``
so that a given (seed, T, M, scenario) reproduces the same ensemble on any
platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Interval, Scenario

__all__ = ["IntervalEnsemble", "draw_ensemble", "deterministic_grid", "DEFAULT_M"]

#: Default ensemble size; adequate for series lengths in the thousands.
DEFAULT_M = 10000


@dataclass(frozen=True)
class IntervalEnsemble:
    """A fixed collection of candidate intervals for one series length."""

    intervals: tuple[Interval, ...]
    seed: int | None
    T: int
    scenario: Scenario

    def __post_init__(self):
        min_gap = 2 * (self.scenario.d - 1)
        for iv in self.intervals:
            if iv.e > self.T or iv.e - iv.s <= min_gap:
                raise ValueError(f"interval [{iv.s}, {iv.e}] is not admissible "
                                 f"for {self.scenario.name} with T={self.T}")

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


def rng_from_seed(seed: int) -> np.random.Generator:
    """The package-wide pinned generator: PCG64 via SeedSequence."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def derive_seeds(seed: int, index: int, count: int = 2) -> tuple[int, ...]:
    """Deterministic child seeds for replicate ``index`` of a run seeded by
    ``seed``; spawned through SeedSequence so streams do not collide."""
    child = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return tuple(int(w) for w in child.generate_state(count, dtype=np.uint64))


def draw_ensemble(T: int, M: int, scenario: Scenario, seed: int) -> IntervalEnsemble:
    """Draw M interval endpoints uniformly from the admissible pair set.

    Rejection sampling on {1..T}^2: a draw is kept when s < e and
    e - s > 2(d - 1).  Draws are independent, so duplicates may occur.

    Raises
    ------
    ValueError
        If M < 1 or no admissible pair exists (T <= 2d - 1).
    """
    if M < 1:
        raise ValueError("M must be at least 1")
    min_gap = 2 * (scenario.d - 1)
    if T <= min_gap + 1:
        raise ValueError(
            f"series of length {T} admits no interval with e-s > {min_gap}")
    rng = rng_from_seed(seed)
    out: list[Interval] = []
    while len(out) < M:
        n = max(64, int(2.5 * (M - len(out))))
        s = rng.integers(1, T + 1, size=n)
        e = rng.integers(1, T + 1, size=n)
        ok = (e - s) > min_gap
        for si, ei in zip(s[ok], e[ok]):
            out.append(Interval(int(si), int(ei)))
            if len(out) == M:
                break
    return IntervalEnsemble(tuple(out), seed, T, scenario)


def deterministic_grid(T: int, scenario: Scenario) -> IntervalEnsemble:
    """A fixed dyadic multiscale grid, mainly for regression testing.

    Scale k uses windows of length w_k = ceil(T / 2^k) placed every
    w_k // 2 positions, clipped to [1, T]; windows too short to admit a
    split are dropped and duplicates removed (first occurrence kept, so
    coarser scales come first).
    """
    min_gap = 2 * (scenario.d - 1)
    if T <= min_gap + 1:
        raise ValueError(
            f"series of length {T} admits no interval with e-s > {min_gap}")
    seen: dict[tuple[int, int], None] = {}
    k = 0
    while True:
        w = math.ceil(T / 2**k)
        if w < 2 * scenario.d:
            break
        step = max(1, w // 2)
        for s in range(1, T + 1, step):
            e = min(s + w - 1, T)
            if e - s > min_gap:
                seen.setdefault((s, e))
        k += 1
    intervals = tuple(Interval(s, e) for s, e in seen)
    return IntervalEnsemble(intervals, None, T, scenario)
