"""Narrowest-over-threshold detection at a fixed threshold.

Every ensemble interval's contrast profile is reduced up front to its
maximum value and smallest maximiser; an interval's profile does not
depend on the segment currently being searched, so this work is done
exactly once and shared by every recursion step (and by the solution
path).  The recursion itself then only filters intervals by containment:
on the current segment it keeps the intervals lying fully inside whose
maximum contrast strictly exceeds the threshold, takes the narrowest
(ties: smallest ensemble index), records that interval's best split b,
and recurses to the left and right of b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contrast import Workspace, evaluate_window
from .core import ChangePointSet, Interval, Scenario, as_values
from .fitting import var_floor
from .sampler import IntervalEnsemble

__all__ = ["DetectionConfig", "ProfileCache", "not_detect"]


@dataclass(frozen=True)
class DetectionConfig:
    """Inputs of a fixed-threshold detection run.

    ``eps_var`` (mean/variance scenario only) floors segment standard
    deviations inside the contrast; None means a tenth of the series'
    MAD noise scale.
    """

    threshold: float
    scenario: Scenario
    ensemble: IntervalEnsemble
    eps_var: float | None = None

    def __post_init__(self):
        if not (self.threshold >= 0):
            raise ValueError("threshold must be nonnegative")


class ProfileCache:
    """Per-interval contrast summaries, ordered for narrowest-first queries.

    Duplicate ensemble intervals are profiled once; each unique interval
    keeps the smallest ensemble index it appeared at, which is the
    tie-breaking identity among equal-length candidates.
    """

    def __init__(self, y, ensemble: IntervalEnsemble,
                 eps_var: float | None = None):
        values = as_values(y)
        if values.size != ensemble.T:
            raise ValueError(f"ensemble was drawn for T={ensemble.T}, "
                             f"series has length {values.size}")
        self.T = ensemble.T
        self.scenario = ensemble.scenario
        if eps_var is None:
            eps_var = (var_floor(values)
                       if self.scenario is Scenario.PCWS_CONST_MEAN_VAR else 1e-10)
        self.eps_var = eps_var

        first_index: dict[Interval, int] = {}
        for m, iv in enumerate(ensemble):
            first_index.setdefault(iv, m)

        n = len(first_index)
        s = np.empty(n, dtype=np.int64)
        e = np.empty(n, dtype=np.int64)
        b = np.empty(n, dtype=np.int64)
        c = np.empty(n, dtype=np.float64)
        idx = np.empty(n, dtype=np.int64)
        ws = Workspace(self.T)
        for i, (iv, m) in enumerate(first_index.items()):
            s[i], e[i], idx[i] = iv.s, iv.e, m
            try:
                vals, off = evaluate_window(values[iv.s - 1 : iv.e],
                                            self.scenario, self.eps_var, ws)
            except ValueError:
                # Admissible as a draw but too short to test (possible for
                # the mean/variance scenario): never selectable.
                b[i], c[i] = iv.s, 0.0
                continue
            j = int(np.argmax(vals))  # first maximiser => smallest b
            b[i] = iv.s + off - 1 + j
            c[i] = vals[j]

        order = np.lexsort((idx, e - s))  # narrowest first, then first-drawn
        self._s, self._e = s[order], e[order]
        self._b, self._c = b[order], c[order]

        # min over intervals starting at >= s of their endpoint: an O(1)
        # "is any interval inside [s, e]" test for pruning empty segments.
        suffix = np.full(self.T + 2, np.iinfo(np.int64).max, dtype=np.int64)
        np.minimum.at(suffix, self._s, self._e)
        self._min_e_from = np.minimum.accumulate(suffix[::-1])[::-1]

        self.max_contrast = float(self._c.max()) if n else 0.0

    def __len__(self) -> int:
        return self._s.size

    def narrowest_over(self, s: int, e: int, zeta: float) -> tuple[int, float] | None:
        """Best split inside [s, e]: the (b, c) of the narrowest contained
        interval with max contrast > zeta, or None if there is none."""
        if self._min_e_from[s] > e:
            return None
        hit = (self._s >= s) & (self._e <= e) & (self._c > zeta)
        i = int(np.argmax(hit))
        if not hit[i]:
            return None
        return int(self._b[i]), float(self._c[i])


def not_detect(y, cfg: DetectionConfig) -> ChangePointSet:
    """Detect change-points at threshold ``cfg.threshold``.

    Returns the sorted set of recorded split points; empty when no
    ensemble interval beats the threshold anywhere.
    """
    cache = ProfileCache(y, cfg.ensemble, cfg.eps_var)
    return detect_from_cache(cache, cfg.threshold)


def detect_from_cache(cache: ProfileCache, threshold: float) -> ChangePointSet:
    """The containment-filtering recursion, reusing precomputed profiles.

    Implemented with an explicit work list so thresholds near zero on long
    series cannot exhaust the interpreter stack.
    """
    if not (threshold >= 0):
        raise ValueError("threshold must be nonnegative")
    found: list[int] = []
    work = [(1, cache.T)]
    while work:
        s, e = work.pop()
        if e - s < 1:
            continue
        hit = cache.narrowest_over(s, e, threshold)
        if hit is None:
            continue
        b, _ = hit
        found.append(b)
        work.append((s, b))
        work.append((b + 1, e))
    return ChangePointSet(tuple(sorted(found)), cache.T)
