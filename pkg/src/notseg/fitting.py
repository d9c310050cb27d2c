"""Noise-scale estimation and per-scenario segment fitting.

The MAD noise estimate differences the data just enough to annihilate the
scenario's segment polynomials (order 1, 2 or 3), takes the median of the
absolute differences, and rescales by the normal quantile times the root
of the differencing filter's squared norm — robust to however many
change-points the signal has.

Segment fitting is plain least squares / Gaussian maximum likelihood on
each stretch between change-points, except in the continuous
piecewise-linear scenario where continuity couples the segments and a
single global fit over the linear-spline basis {1, t, (t - tau_j)_+} is
used instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .core import ChangePointSet, Scenario, as_values

__all__ = ["SegmentFit", "mad_sigma", "fit_segments"]

# Order of differencing that removes the scenario's per-segment trend, and
# the variance of that difference filter applied to unit white noise.
_DIFF_ORDER = {
    Scenario.PCWS_CONST_MEAN: 1,
    Scenario.PCWS_CONST_MEAN_HT: 1,
    Scenario.PCWS_CONST_MEAN_VAR: 1,
    Scenario.PCWS_LIN_CONT_MEAN: 2,
    Scenario.PCWS_LIN_MEAN: 2,
    Scenario.PCWS_QUAD_MEAN: 3,
}
_DIFF_VARIANCE = {1: 2.0, 2: 6.0, 3: 20.0}


def var_floor(y) -> float:
    """Default floor for segment standard deviations in the mean/variance
    contrast: a tenth of the first-difference MAD noise scale.

    Tiny segments routinely show freakishly small sample variances; without
    a floor at the data's own scale their log-likelihood terms dwarf any
    real variance change.  Falls back to 1e-10 on (near-)noiseless data so
    exact steps still produce large finite contrasts.
    """
    values = as_values(y)
    if values.size < 2:
        return 1e-10
    return max(0.1 * mad_sigma(values, Scenario.PCWS_CONST_MEAN), 1e-10)


def mad_sigma(y, scenario: Scenario) -> float:
    """Robust noise standard deviation from differenced data.

    First differences for piecewise-constant scenarios (scaling constant
    0.9539 = ndtri(0.75) * sqrt(2)), second differences for the linear
    ones (1.6522 = ndtri(0.75) * sqrt(6)), third differences for the
    quadratic one (ndtri(0.75) * sqrt(20)).  The median of an even count
    is the lower middle value, for exact reproducibility.
    """
    values = as_values(y)
    order = _DIFF_ORDER[scenario]
    if values.size < order + 1:
        raise ValueError(f"need at least {order + 1} observations, "
                         f"got {values.size}")
    diffs = np.abs(np.diff(values, n=order))
    med = float(np.sort(diffs)[(diffs.size - 1) // 2])
    return med / (ndtri(0.75) * np.sqrt(_DIFF_VARIANCE[order]))


@dataclass(frozen=True)
class SegmentFit:
    """Fitted signal, noise scale, parameters and residual sum of squares."""

    fitted: np.ndarray
    sigma_t: np.ndarray
    per_segment_params: tuple[tuple[float, ...], ...]
    rss: float


def _polyfit_segment(t: np.ndarray, z: np.ndarray, degree: int) -> tuple[np.ndarray, tuple[float, ...]]:
    """LS polynomial fit on one segment; returns fitted values and the
    coefficients (a0, a1, ...) in global-t convention f = sum a_k t^k."""
    t0 = t[0]
    u = t - t0  # recentre for conditioning
    cols = np.vander(u, degree + 1, increasing=True)
    coef, _, rank, _ = np.linalg.lstsq(cols, z, rcond=None)
    if rank < degree + 1:
        raise RuntimeError("rank-deficient segment fit; segment too short")
    fitted = cols @ coef
    # shift coefficients from u = t - t0 back to t
    poly = np.polynomial.Polynomial(coef)(np.polynomial.Polynomial([-t0, 1.0]))
    global_coef = np.zeros(degree + 1)
    global_coef[: len(poly.coef)] = poly.coef
    return fitted, tuple(float(c) for c in global_coef)


def _fit_linear_spline(t: np.ndarray, values: np.ndarray,
                       taus: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Global continuous piecewise-linear fit with kinks at the taus.

    Returns the fitted values and the raw basis coefficients
    (intercept, slope, one slope change per tau).  Columns are normalised
    before the solve to keep the truncated-power basis well conditioned.
    """
    design = np.empty((values.size, 2 + len(taus)))
    design[:, 0] = 1.0
    design[:, 1] = t
    for j, tau in enumerate(taus):
        design[:, 2 + j] = np.maximum(t - tau, 0.0)
    norms = np.linalg.norm(design, axis=0)
    coef, _, rank, _ = np.linalg.lstsq(design / norms, values, rcond=None)
    if rank < design.shape[1]:
        raise RuntimeError("rank-deficient spline fit; segments too short")
    coef = coef / norms
    return design @ coef, coef


def fit_segments(y, cps: ChangePointSet, scenario: Scenario) -> SegmentFit:
    """Fit the scenario's segment model between consecutive change-points.

    Parameters
    ----------
    y : TimeSeries or array-like
    cps : ChangePointSet
        Must match the series length; every segment must contain at least
        ``scenario.d`` observations, otherwise the model is not
        identifiable and a ValueError is raised.

    Returns
    -------
    SegmentFit
        ``fitted`` has length T; ``sigma_t`` is the per-segment ML noise
        scale in the mean+variance scenario and the global root mean
        squared residual elsewhere; ``per_segment_params`` holds one
        parameter tuple per segment (mean; intercept+slope; mean+sd; or
        quadratic coefficients, all in global t).
    """
    values = as_values(y)
    T = values.size
    if cps.T != T:
        raise ValueError(f"change-point set is for T={cps.T}, series has {T}")
    segments = list(cps.segments())
    if any(b - a + 1 < scenario.d for a, b in segments):
        raise ValueError(f"every segment needs >= {scenario.d} observations "
                         f"under {scenario.name}")

    fitted = np.empty(T)
    params: list[tuple[float, ...]] = []

    if scenario in (Scenario.PCWS_CONST_MEAN, Scenario.PCWS_CONST_MEAN_HT):
        for a, b in segments:
            m = float(values[a - 1 : b].mean())
            fitted[a - 1 : b] = m
            params.append((m,))
    elif scenario is Scenario.PCWS_CONST_MEAN_VAR:
        sigma_t = np.empty(T)
        for a, b in segments:
            seg = values[a - 1 : b]
            m = float(seg.mean())
            sd = float(np.sqrt(np.mean((seg - m) ** 2)))
            fitted[a - 1 : b] = m
            sigma_t[a - 1 : b] = sd
            params.append((m, sd))
        rss = float(np.sum((values - fitted) ** 2))
        return SegmentFit(fitted, sigma_t, tuple(params), rss)
    elif scenario is Scenario.PCWS_LIN_CONT_MEAN:
        t = np.arange(1, T + 1, dtype=np.float64)
        fitted[:], coef = _fit_linear_spline(t, values, cps.taus)
        for j, (a, b) in enumerate(segments):
            slope = coef[1] + float(np.sum(coef[2 : 2 + j]))
            intercept = coef[0] - float(np.sum(coef[2 : 2 + j] * np.asarray(cps.taus[:j])))
            params.append((intercept, slope))
    elif scenario is Scenario.PCWS_LIN_MEAN:
        t = np.arange(1, T + 1, dtype=np.float64)
        for a, b in segments:
            fit, coefs = _polyfit_segment(t[a - 1 : b], values[a - 1 : b], 1)
            fitted[a - 1 : b] = fit
            params.append(coefs)
    elif scenario is Scenario.PCWS_QUAD_MEAN:
        t = np.arange(1, T + 1, dtype=np.float64)
        for a, b in segments:
            fit, coefs = _polyfit_segment(t[a - 1 : b], values[a - 1 : b], 2)
            fitted[a - 1 : b] = fit
            params.append(coefs)
    else:  # pragma: no cover
        raise ValueError(f"unsupported scenario {scenario}")

    rss = float(np.sum((values - fitted) ** 2))
    sigma_t = np.full(T, np.sqrt(rss / T))
    return SegmentFit(fitted, sigma_t, tuple(params), rss)
