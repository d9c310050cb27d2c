"""Benchmark signals and noise generators.

Every signal is built by accumulating jumps / slope changes / curvature
changes at its change-points on top of starting values, as truncated
power contributions in absolute t: a change at tau adds
jump + slope_change * (t - tau) + quad_change * (t - tau)^2 for t > tau.
Noise kinds are unit-variance apart from the Gaussian one, whose standard
deviation is a parameter; generation is reproducible from an integer seed
through the pinned generator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .core import ChangePointSet, Scenario
from .sampler import rng_from_seed

__all__ = ["SignalSpec", "NoiseSpec", "gen_signal", "gen_noise",
           "SIGNAL_MODELS", "NOISE_KINDS", "AR1_PHI"]

#: Fixed autoregression coefficient of the dependent-noise model.
AR1_PHI = 0.3

NOISE_KINDS = ("gauss", "laplace", "t5", "ar1")


@dataclass(frozen=True)
class SignalSpec:
    """A benchmark signal: mean, noise scale, truth, and its scenario."""

    model_id: str
    T: int
    f: np.ndarray
    sigma: np.ndarray
    true_cps: ChangePointSet
    scenario: Scenario


@dataclass(frozen=True)
class NoiseSpec:
    """Noise recipe: kind in NOISE_KINDS, sd (gauss only), and a seed."""

    kind: str
    seed: int
    sd: float = 1.0

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"unknown noise kind {self.kind!r}; "
                             f"expected one of {NOISE_KINDS}")
        if self.sd <= 0:
            raise ValueError("sd must be positive")


def _accumulate(T: int, f1: float, slope1: float, taus: tuple[int, ...],
                jumps=None, slope_changes=None, quad_changes=None) -> np.ndarray:
    t = np.arange(1, T + 1, dtype=np.float64)
    f = f1 + slope1 * (t - 1)
    q = len(taus)
    jumps = jumps or (0.0,) * q
    slope_changes = slope_changes or (0.0,) * q
    quad_changes = quad_changes or (0.0,) * q
    for tau, dj, ds, dq in zip(taus, jumps, slope_changes, quad_changes):
        after = t > tau
        f[after] += dj + ds * (t[after] - tau) + dq * (t[after] - tau) ** 2
    return f


def _alternating(first_sign: int, magnitudes) -> tuple[float, ...]:
    return tuple(first_sign * (-1) ** k * m for k, m in enumerate(magnitudes))


def _teeth() -> SignalSpec:
    T, taus = 512, tuple(range(64, 512, 64))
    f = _accumulate(T, 1.0, 0.0, taus, jumps=_alternating(-1, [2.0] * 7))
    return SignalSpec("teeth", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_CONST_MEAN)


def _blocks() -> SignalSpec:
    T = 2024
    taus = (205, 267, 308, 472, 512, 820, 902, 1332, 1557, 1598, 1659)
    jumps = (1.464, -1.830, 1.098, -1.464, 1.830, -1.537,
             0.768, 1.574, -1.135, 0.769, -1.537)
    f = _accumulate(T, 0.0, 0.0, taus, jumps=jumps)
    return SignalSpec("blocks", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_CONST_MEAN)


def _wave1() -> SignalSpec:
    T = 1408
    taus = (256, 512, 768, 1024, 1152, 1280, 1344)
    slopes = _alternating(+1, [(k + 1) * 2.0**-6 for k in range(7)])
    f = _accumulate(T, 1.0, 2.0**-8, taus, slope_changes=slopes)
    return SignalSpec("wave1", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_LIN_CONT_MEAN)


def _wave2() -> SignalSpec:
    T = 1500
    taus = tuple(range(150, 1500, 150))
    slopes = _alternating(+1, [2.0**-5] * 9)
    f = _accumulate(T, 2.0**-1, 2.0**-6, taus, slope_changes=slopes)
    return SignalSpec("wave2", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_LIN_CONT_MEAN)


def _mix() -> SignalSpec:
    T = 2048
    taus = tuple(range(256, 2048, 256))
    jumps = (0.0, -1.0, 0.0, 0.0, 2.0, -1.0, 0.0)
    slopes = (2.0**-6, -2.0**-6, -2.0**-6, 2.0**-6, 0.0, 2.0**-6, -2.0**-5)
    f = _accumulate(T, 0.0, 0.0, taus, jumps=jumps, slope_changes=slopes)
    return SignalSpec("mix", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_LIN_MEAN)


def _vol() -> SignalSpec:
    T = 2048
    taus = tuple(range(256, 2048, 256))
    f = _accumulate(T, 1.0, 0.0, taus, jumps=(1.0, 0.0, -2.0, 0.0, 2.0, -1.0, 0.0))
    sigma = _accumulate(T, 1.0, 0.0, taus, jumps=(0.0, 1.0, 0.0, 1.0, 0.0, -1.0, 1.0))
    return SignalSpec("vol", T, f, sigma,
                      ChangePointSet(taus, T), Scenario.PCWS_CONST_MEAN_VAR)


def _quad() -> SignalSpec:
    T = 1000
    taus = (100, 250, 500)
    f = _accumulate(T, 0.0, 0.0, taus,
                    jumps=(2.0, -2.0, 0.0),
                    slope_changes=(0.0, -1e-1, 1e-1),
                    quad_changes=(0.0, 0.0, 2e-5))
    return SignalSpec("quad", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_QUAD_MEAN)


def _smile() -> SignalSpec:
    T = 2048
    taus = (256, 512, 768, 1280, 1536, 1792)
    jumps = (0.0, -4.0, 0.0, 0.0, 4.0, 0.0)
    slopes = (-2.0**-5, 0.0, 2.0**-6, 2.0**-6, 0.0, -2.0**-5)
    f = _accumulate(T, 0.0, 2.0**-6, taus, jumps=jumps, slope_changes=slopes)
    return SignalSpec("smile", T, f, np.ones(T),
                      ChangePointSet(taus, T), Scenario.PCWS_LIN_MEAN)


SIGNAL_MODELS = {
    "teeth": _teeth,
    "blocks": _blocks,
    "wave1": _wave1,
    "wave2": _wave2,
    "mix": _mix,
    "vol": _vol,
    "quad": _quad,
    "smile": _smile,
}


def gen_signal(model_id: str) -> SignalSpec:
    """Construct a benchmark signal by name (see SIGNAL_MODELS)."""
    try:
        builder = SIGNAL_MODELS[model_id]
    except KeyError:
        raise ValueError(f"unknown signal model {model_id!r}; expected one of "
                         f"{sorted(SIGNAL_MODELS)}") from None
    return builder()


def gen_noise(spec: NoiseSpec, T: int) -> np.ndarray:
    """Draw a length-T noise sequence according to ``spec``.

    gauss: iid N(0, sd^2).  laplace: iid Laplace with scale 2**-0.5 (unit
    variance).  t5: iid sqrt(3/5) * t_5 (unit variance), generated by the
    normal-over-root-chi-square construction.  ar1: stationary Gaussian
    AR(1) with coefficient AR1_PHI, unit marginal variance, started from
    the stationary distribution (no burn-in needed).
    """
    if T < 1:
        raise ValueError("T must be at least 1")
    rng = rng_from_seed(spec.seed)
    if spec.kind == "gauss":
        return spec.sd * rng.standard_normal(T)
    if spec.kind == "laplace":
        return rng.laplace(0.0, 2.0**-0.5, T)
    if spec.kind == "t5":
        z = rng.standard_normal(T)
        w = rng.chisquare(5, T)
        return np.sqrt(3.0 / 5.0) * z / np.sqrt(w / 5.0)
    # ar1: x[0] from the stationary law, then the recursion via lfilter
    x = np.empty(T)
    x[0] = rng.standard_normal()
    if T > 1:
        x[1:] = np.sqrt(1.0 - AR1_PHI**2) * rng.standard_normal(T - 1)
    return lfilter([1.0], [1.0, -AR1_PHI], x)
