"""Shared domain types for narrowest-over-threshold change-point detection.

All indices exposed by this package are 1-based: a series has positions
1..T, a candidate subsample is an inclusive interval [s, e], and a
change-point tau is the last index of the segment it terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Scenario",
    "TimeSeries",
    "Interval",
    "ChangePointSet",
    "admissible_b_range",
    "break_ties_min",
]


class Scenario(Enum):
    """Per-segment model family, together with its parameter dimension ``d``.

    The value tuple is ``(cli_label, d)`` where ``d`` is the number of free
    parameters describing a single segment (mean; intercept+slope;
    mean+standard deviation; quadratic coefficients).
    """

    PCWS_CONST_MEAN = ("pcws-const", 1)
    PCWS_LIN_CONT_MEAN = ("pcws-lin-cont", 2)
    PCWS_LIN_MEAN = ("pcws-lin", 2)
    PCWS_CONST_MEAN_VAR = ("mean-var", 2)
    PCWS_QUAD_MEAN = ("pcws-quad", 3)
    PCWS_CONST_MEAN_HT = ("pcws-const-ht", 1)

    def __init__(self, label: str, d: int):
        self.label = label
        self.d = d

    @classmethod
    def from_label(cls, label: str) -> "Scenario":
        for scen in cls:
            if scen.label == label:
                return scen
        raise ValueError(f"unknown scenario {label!r}; expected one of "
                         f"{[s.label for s in cls]}")


def _as_float_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class TimeSeries:
    """An immutable univariate series Y_1..Y_T with optional known noise scale.

    Parameters
    ----------
    values : sequence of float
        The observations; must be finite and nonempty.
    sigma0 : float, optional
        Known standard deviation of the noise, if available.
    """

    values: np.ndarray
    sigma0: float | None = None

    def __post_init__(self):
        arr = _as_float_array(self.values)
        if arr.size < 1:
            raise ValueError("a series needs at least one observation")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series values must be finite (no NaN/inf)")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        if self.sigma0 is not None:
            s = float(self.sigma0)
            if not np.isfinite(s) or s <= 0:
                raise ValueError("sigma0 must be a finite positive number")
            object.__setattr__(self, "sigma0", s)

    def __len__(self) -> int:
        return self.values.size

    @property
    def T(self) -> int:
        return self.values.size


def as_values(y) -> np.ndarray:
    """Extract a validated float array from a TimeSeries or array-like."""
    if isinstance(y, TimeSeries):
        return y.values
    arr = _as_float_array(y)
    if not np.all(np.isfinite(arr)):
        raise ValueError("series values must be finite (no NaN/inf)")
    return arr


@dataclass(frozen=True, order=True)
class Interval:
    """A candidate subsample [s, e], endpoints 1-based and inclusive."""

    s: int
    e: int

    def __post_init__(self):
        if not (1 <= self.s < self.e):
            raise ValueError(f"need 1 <= s < e, got [{self.s}, {self.e}]")

    @property
    def length(self) -> int:
        return self.e - self.s + 1

    def admissible_for(self, scenario: Scenario) -> bool:
        """Whether the interval is long enough to test for one feature."""
        return self.e - self.s > 2 * (scenario.d - 1)


@dataclass(frozen=True)
class ChangePointSet:
    """Sorted change-point locations tau_1 < ... < tau_q within a length-T series.

    tau_j is the *last* index of segment j, so segment j covers
    tau_{j-1}+1 .. tau_j with tau_0 = 0 and tau_{q+1} = T.
    """

    taus: tuple[int, ...]
    T: int

    def __post_init__(self):
        taus = tuple(int(t) for t in self.taus)
        if list(taus) != sorted(set(taus)):
            raise ValueError("change-points must be strictly increasing")
        if taus and not (1 <= taus[0] and taus[-1] <= self.T - 1):
            raise ValueError(f"change-points must lie in [1, T-1]={self.T - 1}")
        object.__setattr__(self, "taus", taus)

    @property
    def q(self) -> int:
        return len(self.taus)

    def segments(self) -> Iterable[tuple[int, int]]:
        """Yield (start, end) of every segment, 1-based inclusive."""
        bounds = (0, *self.taus, self.T)
        for a, b in zip(bounds[:-1], bounds[1:]):
            yield a + 1, b

    def __iter__(self):
        return iter(self.taus)

    def __len__(self) -> int:
        return len(self.taus)


def admissible_b_range(interval: Interval, scenario: Scenario) -> range:
    """Candidate split points b testable inside ``interval`` under ``scenario``.

    Returns {s+d-1, ..., e-d} except for the mean+variance scenario, which
    needs two observations on each side of b and uses {s+2, ..., e-2}.

    Raises
    ------
    ValueError
        If the interval is too short to contain any admissible b.
    """
    s, e = interval.s, interval.e
    if scenario is Scenario.PCWS_CONST_MEAN_VAR:
        rng = range(s + 2, e - 1)
    else:
        d = scenario.d
        rng = range(s + d - 1, e - d + 1)
    if len(rng) == 0:
        raise ValueError(
            f"interval [{s}, {e}] admits no split point under {scenario.name}")
    return rng


def break_ties_min(candidates: Sequence[tuple[float, int]]) -> int:
    """Among (key, id) pairs, return the smallest id achieving the minimal key.

    Used for both interval selection (smallest index among the narrowest)
    and split selection (smallest b among the contrast argmax), so that
    results are reproducible and independent of evaluation order.
    """
    if len(candidates) == 0:
        raise ValueError("no candidates to choose from")
    best_key, best_id = candidates[0]
    for key, cid in candidates[1:]:
        if key < best_key or (key == best_key and cid < best_id):
            best_key, best_id = key, cid
    return best_id
