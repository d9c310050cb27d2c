"""Evaluation metrics for benchmark runs.

The location metric is the two-sided Hausdorff distance between the true
and estimated change-point sets, both augmented with the endpoints 0 and
T, scaled by 1/T; augmentation makes the empty estimate well defined and
bounds the metric by 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import ChangePointSet

__all__ = ["hausdorff_scaled", "mse", "RunReport", "Q_DIFF_BUCKETS", "q_diff_bucket"]

Q_DIFF_BUCKETS = ("<=-3", "-2", "-1", "0", "1", "2", ">=3")


def q_diff_bucket(q_diff: int) -> str:
    if q_diff <= -3:
        return "<=-3"
    if q_diff >= 3:
        return ">=3"
    return str(q_diff)


def _augmented(cps: ChangePointSet, T: int) -> np.ndarray:
    return np.array([0, *cps.taus, T], dtype=np.float64)


def hausdorff_scaled(true_cps: ChangePointSet, est_cps: ChangePointSet,
                     T: int) -> float:
    """max over each set of the distance to the other, over T; in [0, 1]."""
    if true_cps.T != T or est_cps.T != T:
        raise ValueError("change-point sets must be for the given T")
    a = _augmented(true_cps, T)
    b = _augmented(est_cps, T)
    gaps = np.abs(a[:, None] - b[None, :])
    return float(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()) / T)


def mse(f, f_hat) -> float:
    """Mean squared deviation between a signal and its estimate."""
    f = np.asarray(f, dtype=np.float64)
    f_hat = np.asarray(f_hat, dtype=np.float64)
    if f.shape != f_hat.shape:
        raise ValueError(f"length mismatch: {f.shape} vs {f_hat.shape}")
    return float(np.mean((f - f_hat) ** 2))


@dataclass(frozen=True)
class RunReport:
    """Aggregated benchmark results over a number of replicates."""

    model_id: str
    noise: str
    q_diff_hist: dict[str, int]
    avg_mse: float
    avg_dh: float
    avg_runtime_s: float
    replicates: int

    def __post_init__(self):
        if sum(self.q_diff_hist.values()) != self.replicates:
            raise ValueError("histogram counts must sum to the replicate count")

    def to_json(self) -> str:
        payload = {
            "schema": "notseg/1",
            "model": self.model_id,
            "noise": self.noise,
            "replicates": self.replicates,
            "q_diff_hist": {k: self.q_diff_hist.get(k, 0) for k in Q_DIFF_BUCKETS},
            "avg_mse": self.avg_mse,
            "avg_dh": self.avg_dh,
            "avg_runtime_s": self.avg_runtime_s,
        }
        return json.dumps(payload, indent=2, sort_keys=False)

    def to_table(self) -> str:
        """Plain-text table: q-diff distribution, MSE, d_H x 100, time."""
        head = (f"{'model':>8} {'noise':>8} | "
                + " ".join(f"{k:>5}" for k in Q_DIFF_BUCKETS)
                + f" | {'MSE':>8} {'dH x 100':>9} {'time[s]':>8}")
        row = (f"{self.model_id:>8} {self.noise:>8} | "
               + " ".join(f"{self.q_diff_hist.get(k, 0):>5}" for k in Q_DIFF_BUCKETS)
               + f" | {self.avg_mse:>8.3f} {self.avg_dh * 100:>9.2f} "
               + f"{self.avg_runtime_s:>8.2f}")
        return head + "\n" + row
