"""Shared test oracles: dense, brute-force reimplementations of the
quantities the library computes in one pass.

Everything here is deliberately naive (dense basis vectors, per-candidate
least-squares via lstsq, plain recursion) so library results can be
checked against an independent route.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from notseg import (
    Interval,
    Scenario,
    gamma_vector,
    phi_vector,
    psi_vector,
)


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------------------
# Dense least-squares residuals.
# ---------------------------------------------------------------------------

def rss_poly(y: np.ndarray, s: int, e: int, degree: int) -> float:
    """RSS of an unconstrained degree-``degree`` fit on [s, e] (1-based)."""
    t = np.arange(s, e + 1, dtype=np.float64)
    X = np.vander(t - s, degree + 1, increasing=True)
    seg = y[s - 1 : e]
    coef, *_ = np.linalg.lstsq(X, seg, rcond=None)
    r = seg - X @ coef
    return float(r @ r)


def rss_const(y, s, e):
    return rss_poly(y, s, e, 0)


def rss_lin(y, s, e):
    return rss_poly(y, s, e, 1)


def rss_quad(y, s, e):
    return rss_poly(y, s, e, 2)


def rss_kink(y: np.ndarray, s: int, e: int, b: int) -> float:
    """RSS of the best continuous fit on [s, e] that is linear with one
    slope change at b."""
    t = np.arange(s, e + 1, dtype=np.float64)
    X = np.column_stack([np.ones(t.size), t, np.maximum(t - b, 0.0)])
    seg = y[s - 1 : e]
    coef, *_ = np.linalg.lstsq(X, seg, rcond=None)
    r = seg - X @ coef
    return float(r @ r)


# ---------------------------------------------------------------------------
# Naive per-b contrast computation via dense vectors / dense fits.
# ---------------------------------------------------------------------------

def naive_values(y: np.ndarray, s: int, e: int, scenario: Scenario,
                 eps: float = 1e-10) -> tuple[np.ndarray, int]:
    """(values, first admissible b), each b evaluated independently."""
    T = y.size
    d = scenario.d
    if scenario is Scenario.PCWS_CONST_MEAN_VAR:
        bs = range(s + 2, e - 1)
    else:
        bs = range(s + d - 1, e - d + 1)
    vals = np.empty(len(bs))
    for i, b in enumerate(bs):
        if scenario is Scenario.PCWS_CONST_MEAN:
            vals[i] = abs(y @ psi_vector(T, s, e, b))
        elif scenario is Scenario.PCWS_CONST_MEAN_HT:
            signed = np.zeros(T)
            signed[s - 1 : e] = np.sign(y[s - 1 : e] - y[s - 1 : e].mean())
            vals[i] = abs(signed @ psi_vector(T, s, e, b))
        elif scenario is Scenario.PCWS_LIN_CONT_MEAN:
            vals[i] = abs(y @ phi_vector(T, s, e, b))
        elif scenario is Scenario.PCWS_LIN_MEAN:
            r = ((y @ psi_vector(T, s, e, b)) ** 2
                 + (y @ gamma_vector(T, s, b)) ** 2
                 + (y @ gamma_vector(T, b + 1, e)) ** 2
                 - (y @ gamma_vector(T, s, e)) ** 2)
            vals[i] = math.sqrt(max(r, 0.0))
        elif scenario is Scenario.PCWS_QUAD_MEAN:
            r = rss_quad(y, s, e) - rss_quad(y, s, b) - rss_quad(y, b + 1, e)
            vals[i] = math.sqrt(max(r, 0.0))
        elif scenario is Scenario.PCWS_CONST_MEAN_VAR:
            def log_sd(a, c):
                seg = y[a - 1 : c]
                sd = math.sqrt(float(np.mean((seg - seg.mean()) ** 2)))
                return math.log(max(sd, eps))
            vals[i] = ((e - s + 1) * log_sd(s, e)
                       - (b - s + 1) * log_sd(s, b) - (e - b) * log_sd(b + 1, e))
    return vals, bs.start


# ---------------------------------------------------------------------------
# Reference detector: plain recursion over (interval, best_b, max) tuples.
# ---------------------------------------------------------------------------

def reference_detect(summaries: list[tuple[int, int, int, float]], T: int,
                     zeta: float) -> tuple[int, ...]:
    """Recursive narrowest-over-threshold detection from per-interval
    (s, e, best_b, max_value) tuples, in ensemble order."""
    found: list[int] = []

    def rec(lo: int, hi: int):
        if hi - lo < 1:
            return
        inside = [(se[1] - se[0], m, se) for m, se in enumerate(summaries)
                  if se[0] >= lo and se[1] <= hi and se[3] > zeta]
        if not inside:
            return
        _, _, chosen = min(inside, key=lambda item: (item[0], item[1]))
        b = chosen[2]
        found.append(b)
        rec(lo, b)
        rec(b + 1, hi)

    rec(1, T)
    return tuple(sorted(found))


def summarize(y: np.ndarray, intervals, scenario: Scenario,
              eps: float = 1e-10) -> list[tuple[int, int, int, float]]:
    """Per-interval (s, e, argmax_b, max) via the naive contrast."""
    out = []
    for iv in intervals:
        vals, b0 = naive_values(y, iv.s, iv.e, scenario, eps)
        if vals.size == 0:
            out.append((iv.s, iv.e, iv.s, 0.0))
            continue
        i = int(np.argmax(vals))
        out.append((iv.s, iv.e, b0 + i, float(vals[i])))
    return out


@pytest.fixture
def rng_factory():
    return rng
