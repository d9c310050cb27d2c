"""Contrast functions: evidence for a single feature at each split point b.

For an interval [s, e] and every admissible b inside it, a contrast
measures how much better the data are explained by two segments meeting
at b than by a single segment.  Each scenario has its own contrast; all
of them are evaluated for every b in one linear-time pass over the
interval, using running partial sums accumulated in interval-local
coordinates (t recentred by s, and counted from e for right-hand
segments) so that no quantity ever mixes scales across the whole series.

Squared contrasts equal generalised likelihood-ratio statistics, which
the dense ``*_vector`` helpers below make directly testable.

The formula implementations live in ``_values_*`` kernels that write into
a reusable :class:`Workspace`; bulk evaluation over thousands of
intervals (see ``detector.ProfileCache``) reuses one workspace so the
inner loop performs no large allocations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Interval, Scenario, admissible_b_range, as_values

__all__ = [
    "ContrastProfile",
    "BasisVectors",
    "basis_vectors",
    "psi_vector",
    "one_vector",
    "gamma_vector",
    "phi_vector",
    "contrast_pcws_const",
    "contrast_pcws_lin_cont",
    "contrast_pcws_lin",
    "contrast_mean_var",
    "contrast_pcws_quad",
    "contrast_ht",
    "profile",
    "Workspace",
]

#: Default floor inside log(max(., eps)) for the mean+variance contrast.
#: Pipeline entry points default to a scale-aware floor instead (see
#: fitting.var_floor).
DEFAULT_EPS_VAR = 1e-10

#: Radicands this far below zero (relative to the size of their terms) are
#: treated as cancellation noise and clamped; anything worse is a bug.
_RADICAND_TOL = 1e-9


@dataclass(frozen=True)
class ContrastProfile:
    """Contrast values over all admissible split points of one interval.

    ``values[i]`` is the contrast at ``b = b_start + i``; ``best_b`` is the
    smallest maximiser and ``best_value`` the maximum.
    """

    interval: Interval
    b_start: int
    values: np.ndarray
    best_b: int
    best_value: float

    @property
    def b_grid(self) -> np.ndarray:
        """The admissible split points, aligned with ``values``."""
        return np.arange(self.b_start, self.b_start + self.values.size)

    def value_at(self, b: int) -> float:
        return float(self.values[b - self.b_start])


# ---------------------------------------------------------------------------
# Dense basis vectors (length-T, support on [s, e]); used by tests and by
# anyone wanting to inspect the geometry behind the contrasts.
# ---------------------------------------------------------------------------

def psi_vector(T: int, s: int, e: int, b: int) -> np.ndarray:
    """Jump contrast vector: positive on [s, b], negative on [b+1, e], unit norm."""
    if not (s <= b <= e - 1):
        return np.zeros(T)
    l = e - s + 1
    v = np.zeros(T)
    v[s - 1 : b] = np.sqrt((e - b) / (l * (b - s + 1)))
    v[b : e] = -np.sqrt((b - s + 1) / (l * (e - b)))
    return v


def one_vector(T: int, s: int, e: int) -> np.ndarray:
    """Normalised indicator of [s, e]."""
    v = np.zeros(T)
    v[s - 1 : e] = (e - s + 1) ** -0.5
    return v


def gamma_vector(T: int, s: int, e: int) -> np.ndarray:
    """Normalised centred linear ramp on [s, e]; orthogonal to one_vector."""
    l = e - s + 1
    v = np.zeros(T)
    t = np.arange(s, e + 1, dtype=np.float64)
    v[s - 1 : e] = (t - (e + s) / 2.0) / np.sqrt(l * (l * l - 1) / 12.0)
    return v


def phi_vector(T: int, s: int, e: int, b: int) -> np.ndarray:
    """Kink contrast vector: unit norm, orthogonal to both the constant and
    the linear vector on [s, e]; detects a slope change at b."""
    if not (s + 1 <= b <= e - 1):
        return np.zeros(T)
    l = e - s + 1
    alpha = np.sqrt(
        6.0 / (l * (l * l - 1) * (1 + (e - b + 1) * (b - s + 1) + (e - b) * (b - s))))
    beta = np.sqrt(((e - b + 1) * (e - b)) / ((b - s) * (b - s + 1)))
    v = np.zeros(T)
    t = np.arange(s, b + 1, dtype=np.float64)
    v[s - 1 : b] = alpha * beta * (
        (3 * (b - s + 1) + (e - b) - 1) * t - (b * (e - s) + 2 * s * (b - s + 1)))
    t = np.arange(b + 1, e + 1, dtype=np.float64)
    v[b : e] = -(alpha / beta) * (
        (3 * (e - b) + (b - s + 1) + 1) * t - (b * (e - s) + 2 * e * (e - b + 1)))
    return v


@dataclass(frozen=True)
class BasisVectors:
    """The four unit vectors underlying the jump and kink contrasts."""

    psi: np.ndarray
    one: np.ndarray
    gamma: np.ndarray
    phi: np.ndarray


def basis_vectors(T: int, s: int, e: int, b: int) -> BasisVectors:
    return BasisVectors(
        psi=psi_vector(T, s, e, b),
        one=one_vector(T, s, e),
        gamma=gamma_vector(T, s, e),
        phi=phi_vector(T, s, e, b),
    )


# ---------------------------------------------------------------------------
# Workspace-backed kernels.  Conventions, for a data window z of length l:
#   local coordinates u = 1..l; a cut at local b' puts u <= b' on the left;
#   right-hand moments use v = l - u + 1 so their magnitudes scale with the
#   right segment, not with l.
#   forward prefix P(k) = sum over u <= k   (length l+1, P(0) = 0)
#   backward prefix B(k) = sum over u > k   (length l+1, B(l) = 0)
# Each kernel returns (values, local_b_start); values is a view into the
# workspace, valid until the next kernel call.  Kernels allocate nothing.
# ---------------------------------------------------------------------------

class Workspace:
    """Preallocated buffers for evaluating profiles of windows up to a
    given length."""

    __slots__ = ("n", "u", "p1", "p2", "p3", "b1", "b2", "b3",
                 "t1", "t2", "t3", "t4", "sig", "out")

    def __init__(self, n: int):
        self.n = n
        self.u = np.arange(0.0, n + 1)  # u[k] = k; mL views come from here
        for name in ("p1", "p2", "p3", "b1", "b2", "b3",
                     "t1", "t2", "t3", "t4", "sig", "out"):
            setattr(self, name, np.empty(n + 1))


def _fwd(z: np.ndarray, buf: np.ndarray) -> np.ndarray:
    """buf[k] = z[0] + ... + z[k-1], k = 0..l."""
    out = buf[: z.size + 1]
    out[0] = 0.0
    np.cumsum(z, out=out[1:])
    return out


def _bwd(z: np.ndarray, buf: np.ndarray, scratch: np.ndarray) -> np.ndarray:
    """buf[k] = z[k] + ... + z[l-1], k = 0..l."""
    l = z.size
    out = buf[: l + 1]
    np.cumsum(z[::-1], out=scratch[:l])
    out[:l][::-1] = scratch[:l]
    out[l] = 0.0
    return out


def _values_const(z: np.ndarray, ws: Workspace) -> tuple[np.ndarray, int]:
    l = z.size
    P = _fwd(z, ws.p1)
    k = l - 1  # cuts at local b' = 1 .. l-1
    mL = ws.u[1:l]
    left = P[1:l]
    right = np.subtract(P[l], left, out=ws.t1[:k])
    wl = ws.t2[:k]
    tmp = ws.t3[:k]
    np.subtract(float(l), mL, out=wl)        # mR
    np.multiply(mL, float(l), out=tmp)       # l mL
    np.divide(wl, tmp, out=wl)
    np.sqrt(wl, out=wl)                      # sqrt(mR / (l mL))
    wr = ws.t4[:k]
    np.subtract(float(l), mL, out=wr)
    wr *= float(l)                           # l mR
    np.divide(mL, wr, out=wr)
    np.sqrt(wr, out=wr)                      # sqrt(mL / (l mR))
    out = ws.out[:k]
    np.multiply(wl, left, out=out)
    wr *= right
    out -= wr
    np.abs(out, out=out)
    return out, 1


def _values_ht(z: np.ndarray, ws: Workspace) -> tuple[np.ndarray, int]:
    signs = ws.sig[: z.size]
    np.subtract(z, z.mean(), out=signs)
    np.sign(signs, out=signs)
    return _values_const(signs, ws)


def _values_lin_cont(z: np.ndarray, ws: Workspace) -> tuple[np.ndarray, int]:
    l = z.size
    u = ws.u[1 : l + 1]
    prod = ws.t4[:l]
    Pz = _fwd(z, ws.p1)
    Pu1 = _fwd(np.multiply(u, z, out=prod), ws.p2)
    Bz = _bwd(z, ws.b1, ws.out)
    Bv1 = _bwd(np.multiply(u[::-1], z, out=prod), ws.b2, ws.out)

    k = l - 3  # cuts at local b' = 2 .. l-2
    mL = ws.u[2 : l - 1]
    left_1 = Pz[2 : l - 1]
    left_t = Pu1[2 : l - 1]
    right_1 = Bz[2 : l - 1]
    rv1 = Bv1[2 : l - 1]

    mR = ws.t1[:k]
    np.subtract(float(l), mL, out=mR)
    right_t = ws.t2[:k]                      # sum of u z over the right side
    np.multiply(right_1, l + 1.0, out=right_t)
    right_t -= rv1

    alpha = ws.t3[:k]                        # overall normaliser of phi
    np.add(mR, 1.0, out=alpha)
    alpha *= mL
    tmp = ws.t4[:k]
    np.subtract(mL, 1.0, out=tmp)
    tmp *= mR
    alpha += tmp
    alpha += 1.0
    alpha *= l * (l * l - 1.0)
    np.divide(6.0, alpha, out=alpha)
    np.sqrt(alpha, out=alpha)
    beta = ws.t4[:k]                         # left/right weight ratio
    np.subtract(mL, 1.0, out=beta)
    beta *= mL
    tmp2 = ws.p3[:k]
    np.add(mR, 1.0, out=tmp2)
    tmp2 *= mR
    np.divide(tmp2, beta, out=beta)
    np.sqrt(beta, out=beta)

    out = ws.out[:k]
    np.multiply(mL, 2.0, out=out)            # coef of t-sum: 3mL + mR - 1 = 2mL + l - 1
    out += l - 1.0
    out *= left_t
    tmp2 = ws.p3[:k]
    np.multiply(mL, l + 1.0, out=tmp2)       # coef of 1-sum on the left
    tmp2 *= left_1
    out -= tmp2
    out *= beta

    rgt = ws.p3[:k]
    np.multiply(mL, -2.0, out=rgt)           # coef of t-sum: 3mR + mL + 1 = 3l - 2mL + 1
    rgt += 3.0 * l + 1.0
    rgt *= right_t
    tmp3 = ws.t2[:k]                         # right_t consumed; reuse its slot
    np.subtract(2.0 * l, mL, out=tmp3)       # coef of 1-sum: (l+1)(2l - mL)
    tmp3 *= l + 1.0
    tmp3 *= right_1
    rgt -= tmp3
    rgt /= beta
    out -= rgt
    out *= alpha
    np.abs(out, out=out)
    return out, 2


def _p1_norm_sq(m, out):
    np.multiply(m, m, out=out)
    out -= 1.0
    out *= m
    out /= 12.0
    return out


def _values_lin(z: np.ndarray, ws: Workspace) -> tuple[np.ndarray, int]:
    l = z.size
    u = ws.u[1 : l + 1]
    prod = ws.t4[:l]
    Pz = _fwd(z, ws.p1)
    Pu1 = _fwd(np.multiply(u, z, out=prod), ws.p2)
    Bz = _bwd(z, ws.b1, ws.out)
    Bv1 = _bwd(np.multiply(u[::-1], z, out=prod), ws.b2, ws.out)

    k = l - 3  # cuts at local b' = 2 .. l-2
    mL = ws.u[2 : l - 1]
    left_1 = Pz[2 : l - 1]
    right_1 = Bz[2 : l - 1]
    mR = ws.t1[:k]
    np.subtract(float(l), mL, out=mR)

    out = ws.out[:k]
    a = ws.t2[:k]
    np.multiply(mL, float(l), out=a)
    np.divide(mR, a, out=a)
    np.sqrt(a, out=a)
    a *= left_1                              # weighted left mean part
    b = ws.t3[:k]
    np.multiply(mR, float(l), out=b)
    np.divide(mL, b, out=b)
    np.sqrt(b, out=b)
    b *= right_1
    a -= b                                   # <y, psi_b>
    np.multiply(a, a, out=out)

    gam = ws.t2[:k]
    np.add(mL, 1.0, out=gam)
    gam *= 0.5
    gam *= left_1
    np.subtract(Pu1[2 : l - 1], gam, out=gam)  # centred first moment, left
    gam *= gam
    norm = _p1_norm_sq(mL, ws.t3[:k])
    gam /= norm
    out += gam

    gam = ws.t2[:k]
    np.add(mR, 1.0, out=gam)
    gam *= 0.5
    gam *= right_1
    gam -= Bv1[2 : l - 1]                    # centred first moment, right
    gam *= gam
    norm = _p1_norm_sq(mR, ws.t3[:k])
    gam /= norm
    out += gam

    lf = float(l)
    gam_full_sq = ((Pu1[l] - (lf + 1.0) / 2.0 * Pz[l]) ** 2
                   / (lf * (lf * lf - 1.0) / 12.0))
    scale = np.add(out, gam_full_sq, out=ws.t2[:k])
    out -= gam_full_sq
    return _sqrt_clamped(out, scale), 2


def _values_mean_var(z: np.ndarray, eps: float,
                     ws: Workspace) -> tuple[np.ndarray, int]:
    l = z.size
    Pz = _fwd(z, ws.p1)
    Pzz = _fwd(np.multiply(z, z, out=ws.t4[:l]), ws.p2)

    k = l - 4  # cuts at local b' = 3 .. l-2
    mL = ws.u[3 : l - 1]
    mR = ws.t1[:k]
    np.subtract(float(l), mL, out=mR)

    log_sd_left = ws.t2[:k]
    np.divide(Pz[3 : l - 1], mL, out=log_sd_left)
    log_sd_left *= log_sd_left
    tmp = ws.t4[:k]
    np.divide(Pzz[3 : l - 1], mL, out=tmp)
    np.subtract(tmp, log_sd_left, out=log_sd_left)
    np.maximum(log_sd_left, 0.0, out=log_sd_left)
    np.sqrt(log_sd_left, out=log_sd_left)
    np.maximum(log_sd_left, eps, out=log_sd_left)
    np.log(log_sd_left, out=log_sd_left)

    log_sd_right = ws.t3[:k]
    np.subtract(Pz[l], Pz[3 : l - 1], out=log_sd_right)
    log_sd_right /= mR
    log_sd_right *= log_sd_right
    np.subtract(Pzz[l], Pzz[3 : l - 1], out=tmp)
    tmp /= mR
    np.subtract(tmp, log_sd_right, out=log_sd_right)
    np.maximum(log_sd_right, 0.0, out=log_sd_right)
    np.sqrt(log_sd_right, out=log_sd_right)
    np.maximum(log_sd_right, eps, out=log_sd_right)
    np.log(log_sd_right, out=log_sd_right)

    var_full = max(Pzz[l] / l - (Pz[l] / l) ** 2, 0.0)
    out = ws.out[:k]
    np.multiply(mL, log_sd_left, out=out)
    np.negative(out, out=out)
    log_sd_right *= mR
    out -= log_sd_right
    out += l * np.log(max(np.sqrt(var_full), eps))
    return out, 3


def _values_quad(z: np.ndarray, ws: Workspace) -> tuple[np.ndarray, int]:
    l = z.size
    u = ws.u[1 : l + 1]
    prod = ws.t4[:l]
    Pz = _fwd(z, ws.p1)
    np.multiply(u, z, out=prod)
    Pu1 = _fwd(prod, ws.p2)
    prod *= u
    Pu2 = _fwd(prod, ws.p3)
    v = u[::-1]
    Bz = _bwd(z, ws.b1, ws.out)
    np.multiply(v, z, out=prod)
    Bv1 = _bwd(prod, ws.b2, ws.out)
    prod *= v
    Bv2 = _bwd(prod, ws.b3, ws.out)

    k = l - 5  # cuts at local b' = 3 .. l-3
    sl = slice(3, l - 2)
    mL = ws.u[3 : l - 2]
    mR = ws.t1[:k]
    np.subtract(float(l), mL, out=mR)
    out = ws.out[:k]
    out[:] = 0.0

    def _acc_proj_sq(acc, m, s0, s1, s2):
        # acc += squared norm of the projection onto {1, linear, quadratic}
        # from raw sums s0 = sum z, s1 = sum w z, s2 = sum w^2 z with
        # side-local positions w = 1..m
        tmp = ws.t2[:k]
        aux = ws.t3[:k]
        aux2 = ws.t4[:k]
        np.multiply(s0, s0, out=tmp)
        tmp /= m
        acc += tmp                           # <y, P0>^2
        mu = np.add(m, 1.0, out=aux)
        mu *= 0.5
        np.multiply(mu, s0, out=tmp)
        np.subtract(s1, tmp, out=tmp)
        tmp *= tmp
        norm = _p1_norm_sq(m, aux2)
        tmp /= norm
        acc += tmp                           # <y, P1>^2
        np.multiply(mu, s1, out=tmp)
        tmp *= -2.0
        tmp += s2
        coef = np.multiply(mu, mu, out=aux)  # mu^2 - (m^2-1)/12
        np.multiply(m, m, out=aux2)
        aux2 -= 1.0
        aux2 /= 12.0
        coef -= aux2
        coef *= s0
        tmp += coef
        tmp *= tmp
        np.multiply(m, m, out=aux)           # the quadratic poly's norm^2:
        aux -= 1.0                           # m (m^2-1)(m^2-4) / 180
        np.multiply(m, m, out=aux2)
        aux2 -= 4.0
        aux *= aux2
        aux *= m
        aux /= 180.0
        tmp /= aux
        acc += tmp                           # <y, P2>^2

    _acc_proj_sq(out, mL, Pz[sl], Pu1[sl], Pu2[sl])
    _acc_proj_sq(out, mR, Bz[sl], Bv1[sl], Bv2[sl])

    lf = float(l)
    mu = (lf + 1.0) / 2.0
    v_full = (lf * lf - 1.0) / 12.0
    full = (Pz[l] ** 2 / lf
            + (Pu1[l] - mu * Pz[l]) ** 2 / (lf * (lf * lf - 1.0) / 12.0)
            + ((Pu2[l] - 2.0 * mu * Pu1[l] + (mu * mu - v_full) * Pz[l]) ** 2
               / (lf * (lf * lf - 1.0) * (lf * lf - 4.0) / 180.0)))
    scale = np.add(out, full, out=ws.t2[:k])
    out -= full
    return _sqrt_clamped(out, scale), 3


def _sqrt_clamped(radicand: np.ndarray, scale) -> np.ndarray:
    """sqrt after clamping cancellation-level negatives at zero, in place.

    ``scale`` is the magnitude of the terms that were subtracted; negatives
    beyond _RADICAND_TOL relative to it indicate a genuine computation bug.
    """
    np.maximum(scale, 1.0, out=scale)
    scale *= -_RADICAND_TOL
    if np.any(radicand < scale):
        raise FloatingPointError(
            "contrast radicand fell below the rounding tolerance; "
            "this indicates a bug, not cancellation noise")
    np.maximum(radicand, 0.0, out=radicand)
    return np.sqrt(radicand, out=radicand)


# ---------------------------------------------------------------------------
# Public per-interval API.
# ---------------------------------------------------------------------------

def _slice(y, iv: Interval) -> np.ndarray:
    arr = as_values(y)
    if iv.e > arr.size:
        raise ValueError(f"interval [{iv.s}, {iv.e}] exceeds series length {arr.size}")
    return arr[iv.s - 1 : iv.e]


_MIN_LEN = {
    Scenario.PCWS_CONST_MEAN: 2,
    Scenario.PCWS_CONST_MEAN_HT: 2,
    Scenario.PCWS_LIN_CONT_MEAN: 4,
    Scenario.PCWS_LIN_MEAN: 4,
    Scenario.PCWS_CONST_MEAN_VAR: 5,
    Scenario.PCWS_QUAD_MEAN: 6,
}


def evaluate_window(z: np.ndarray, scenario: Scenario, eps: float,
                    ws: Workspace) -> tuple[np.ndarray, int]:
    """Contrast values of one data window plus the local position of the
    first cut; the returned array is workspace-owned.

    Raises ValueError when the window is too short to admit any cut.
    """
    if z.size < _MIN_LEN[scenario]:
        raise ValueError(f"window of length {z.size} is too short for "
                         f"{scenario.name} (needs >= {_MIN_LEN[scenario]})")
    if scenario is Scenario.PCWS_CONST_MEAN:
        return _values_const(z, ws)
    if scenario is Scenario.PCWS_CONST_MEAN_HT:
        return _values_ht(z, ws)
    if scenario is Scenario.PCWS_LIN_CONT_MEAN:
        return _values_lin_cont(z, ws)
    if scenario is Scenario.PCWS_LIN_MEAN:
        return _values_lin(z, ws)
    if scenario is Scenario.PCWS_CONST_MEAN_VAR:
        return _values_mean_var(z, eps, ws)
    if scenario is Scenario.PCWS_QUAD_MEAN:
        return _values_quad(z, ws)
    raise ValueError(f"unsupported scenario {scenario}")  # pragma: no cover


def _profile(y, iv: Interval, scenario: Scenario, eps: float) -> ContrastProfile:
    z = _slice(y, iv)
    values, off = evaluate_window(z, scenario, eps, Workspace(z.size))
    values = values.copy()
    i = int(np.argmax(values))  # first maximiser => smallest b
    b_start = iv.s + off - 1
    return ContrastProfile(iv, b_start, values, b_start + i, float(values[i]))


def contrast_pcws_const(y, iv: Interval) -> ContrastProfile:
    """CUSUM contrast for a mean jump; admissible b: {s, ..., e-1}.

    Invariant to adding a constant to the data, and scale-equivariant.
    """
    return _profile(y, iv, Scenario.PCWS_CONST_MEAN, DEFAULT_EPS_VAR)


def contrast_ht(y, iv: Interval) -> ContrastProfile:
    """Heavy-tail-robust jump contrast: CUSUM applied to the signs of the
    interval-mean-centred data (sign(0) := 0), so values are bounded by
    sqrt(e-s+1) regardless of outliers."""
    return _profile(y, iv, Scenario.PCWS_CONST_MEAN_HT, DEFAULT_EPS_VAR)


def contrast_pcws_lin_cont(y, iv: Interval) -> ContrastProfile:
    """Kink contrast |<y, phi_b>| for a slope change in a continuous
    piecewise-linear mean; admissible b: {s+1, ..., e-2}."""
    return _profile(y, iv, Scenario.PCWS_LIN_CONT_MEAN, DEFAULT_EPS_VAR)


def contrast_pcws_lin(y, iv: Interval) -> ContrastProfile:
    """Joint jump/slope-change contrast for a discontinuous piecewise-linear
    mean; admissible b: {s+1, ..., e-2}.

    Equals the square root of the drop in affine least-squares RSS when the
    interval is split at b (both sub-fits unconstrained).
    """
    return _profile(y, iv, Scenario.PCWS_LIN_MEAN, DEFAULT_EPS_VAR)


def contrast_mean_var(y, iv: Interval, eps: float = DEFAULT_EPS_VAR) -> ContrastProfile:
    """Gaussian likelihood-ratio contrast for a simultaneous mean/variance
    change; admissible b: {s+2, ..., e-2}.

    Uses log(max(sigma_hat, eps)) of the segment standard deviations, so
    exactly constant segments telescope to zero rather than -inf.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    return _profile(y, iv, Scenario.PCWS_CONST_MEAN_VAR, eps)


def contrast_pcws_quad(y, iv: Interval) -> ContrastProfile:
    """Quadratic analogue of the jump+kink contrast; admissible b:
    {s+2, ..., e-3}.

    Computed as the square root of the drop in degree-2 least-squares RSS
    when splitting at b, via projections onto the discrete orthogonal
    polynomials of each side (closed-form norms, no normal equations).
    """
    return _profile(y, iv, Scenario.PCWS_QUAD_MEAN, DEFAULT_EPS_VAR)


# New feature detectors can be added by registering a callable
# (y, interval, eps) -> ContrastProfile here; this seam is internal and the
# set of shipped scenarios is the supported surface.
_CONTRASTS: dict[Scenario, Callable] = {
    Scenario.PCWS_CONST_MEAN: lambda y, iv, eps: contrast_pcws_const(y, iv),
    Scenario.PCWS_LIN_CONT_MEAN: lambda y, iv, eps: contrast_pcws_lin_cont(y, iv),
    Scenario.PCWS_LIN_MEAN: lambda y, iv, eps: contrast_pcws_lin(y, iv),
    Scenario.PCWS_CONST_MEAN_VAR: lambda y, iv, eps: contrast_mean_var(y, iv, eps),
    Scenario.PCWS_QUAD_MEAN: lambda y, iv, eps: contrast_pcws_quad(y, iv),
    Scenario.PCWS_CONST_MEAN_HT: lambda y, iv, eps: contrast_ht(y, iv),
}


def profile(y, iv: Interval, scenario: Scenario,
            eps_var: float = DEFAULT_EPS_VAR) -> ContrastProfile:
    """Evaluate the scenario's contrast over all admissible b of ``iv``."""
    prof = _CONTRASTS[scenario](y, iv, eps_var)
    rng = admissible_b_range(iv, scenario)
    assert prof.b_start == rng.start and prof.values.size == len(rng)
    return prof
