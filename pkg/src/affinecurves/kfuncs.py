"""Curvature-parametrized trigonometric profiles and their inverses.

A single real constant k selects among the oscillatory (k > 0), flat
(k = 0) and hyperbolic (k < 0) branches of the solutions of u'' + k u = 0.
Everything here reduces to four even power series in z = k*s**2,

    C0(z) = sum (-z)^n / (2n)!      -> ck
    C1(z) = sum (-z)^n / (2n+1)!    -> sk, xbar
    C2(z) = sum (-z)^n / (2n+2)!    -> ybar
    C3(z) = sum (-z)^n / (2n+3)!    -> abar

evaluated by closed trig/hyperbolic forms away from z = 0 and by the
series near it, so every function is smooth across the k = 0 transition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

# Below this |z| the closed forms for C2/C3 cancel catastrophically
# (about half the significand is lost by |z| ~ 1e-8); the series is
# exact to < 1e-18 here and costs at most a dozen terms.
_SERIES_CUTOFF = 0.1
_SERIES_TOL = 1e-20

_INF = math.inf


class DomainError(ValueError):
    """Argument outside a function's natural domain."""


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; hi may be +inf."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise ValueError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    def __contains__(self, s: float) -> bool:
        return self.lo <= s <= self.hi

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def clamp(self, s: float) -> float:
        return min(max(s, self.lo), self.hi)


def _series(z: float, j: int) -> float:
    # sum_{n>=0} (-z)^n / (2n+j)!
    term = 1.0 / math.factorial(j)
    total = term
    n = 1
    while abs(term) > _SERIES_TOL:
        term *= -z / ((2 * n + j) * (2 * n + j - 1))
        total += term
        n += 1
    return total


# The hyperbolic branches saturate to inf past u ~ 710 instead of raising,
# so the bracketing inversions can probe far overshoots safely.


def _cosh(u: float) -> float:
    try:
        return math.cosh(u)
    except OverflowError:
        return _INF


def _sinh(u: float) -> float:
    try:
        return math.sinh(u)
    except OverflowError:
        return _INF


def _c0(z: float) -> float:
    if abs(z) < _SERIES_CUTOFF:
        return _series(z, 0)
    if z > 0.0:
        return math.cos(math.sqrt(z))
    return _cosh(math.sqrt(-z))


def _c1(z: float) -> float:
    if abs(z) < _SERIES_CUTOFF:
        return _series(z, 1)
    if z > 0.0:
        u = math.sqrt(z)
        return math.sin(u) / u
    u = math.sqrt(-z)
    return _sinh(u) / u


def _c2(z: float) -> float:
    if abs(z) < _SERIES_CUTOFF:
        return _series(z, 2)
    if z > 0.0:
        return (1.0 - math.cos(math.sqrt(z))) / z
    u = math.sqrt(-z)
    return (_cosh(u) - 1.0) / (u * u)


def _c3(z: float) -> float:
    if abs(z) < _SERIES_CUTOFF:
        return _series(z, 3)
    if z > 0.0:
        u = math.sqrt(z)
        return (u - math.sin(u)) / (z * u)
    u = math.sqrt(-z)
    return (_sinh(u) - u) / (u ** 3)


def ck(k: float, s: float) -> float:
    """cos(sqrt(k) s) continued through k <= 0; even in s; ck(k, 0) = 1."""
    return _c0(k * s * s)


def sk(k: float, s: float) -> float:
    """sin(sqrt(k) s)/sqrt(k) continued through k <= 0; odd in s; sk' = ck."""
    return s * _c1(k * s * s)


def dck(k: float, s: float) -> float:
    """d/ds ck = -k sk."""
    return -k * sk(k, s)


def xbar(k: float, s: float) -> float:
    """First adapted coordinate of the constant-curvature-k profile.

    Solves x''' + k x' = 0 with x(0) = 0, x'(0) = 1, x''(0) = 0;
    identical to sk.
    """
    return sk(k, s)


def ybar(k: float, s: float) -> float:
    """Second adapted coordinate: (1 - ck(k, s))/k, continued to s**2/2 at k = 0."""
    return s * s * _c2(k * s * s)


def dybar(k: float, s: float) -> float:
    """d/ds ybar = sk."""
    return sk(k, s)


def abar(k: float, s: float) -> float:
    """Area profile of the constant-curvature-k curve.

    (s - sk(k, s))/(2k), continued to s**3/12 at k = 0.  Solves
    A''' + k A' = 1/2 with a triple zero at the origin and is strictly
    increasing in s >= 0 for k <= 0.
    """
    return 0.5 * s ** 3 * _c3(k * s * s)


def dabar(k: float, s: float) -> float:
    """d/ds abar = ybar/2."""
    return 0.5 * ybar(k, s)


def profile_interval(k: float) -> Interval:
    """Interval on which both adapted profiles increase: [0, inf) or [0, pi/(2 sqrt k)]."""
    if k <= 0.0:
        return Interval(0.0, _INF)
    return Interval(0.0, 0.5 * math.pi / math.sqrt(k))


def rect_area_interval(k: float) -> Interval:
    """Range of hk over profile_interval(k): [0, inf) or [0, k**-1.5]."""
    if k <= 0.0:
        return Interval(0.0, _INF)
    return Interval(0.0, _neg_three_halves(k))


# Relative fudge admitting arguments a hair past a float-rounded endpoint.
_EDGE_RTOL = 1e-12


def _neg_three_halves(k: float) -> float:
    """k**-1.5, saturating to inf for k small enough to overflow."""
    try:
        return k ** -1.5
    except OverflowError:
        return _INF


def hk(k: float, s: float) -> float:
    """Half-rectangle area profile xbar * ybar, strictly increasing on profile_interval(k).

    For k > 0 the right endpoint s = pi/(2 sqrt k) maps exactly to k**-1.5.
    Raises DomainError outside the interval.
    """
    if s < 0.0:
        raise DomainError(f"hk: s = {s} < 0")
    if k > 0.0:
        smax = 0.5 * math.pi / math.sqrt(k)
        if s > smax * (1.0 + _EDGE_RTOL):
            raise DomainError(f"hk: s = {s} beyond pi/(2 sqrt k) = {smax}")
        if s >= smax:
            return _neg_three_halves(k)
    return xbar(k, s) * ybar(k, s)


def dhk(k: float, s: float) -> float:
    """d/ds hk = ck*ybar + sk**2."""
    return ck(k, s) * ybar(k, s) + sk(k, s) ** 2


def _invert_increasing(f, df, target: float, hi0: float, hi_cap: float) -> float:
    """Root of f(s) = target for increasing f with f(0) = 0, by bracketed Brent."""
    if target == 0.0:
        return 0.0
    lo = 0.0
    hi = min(hi0, hi_cap)
    while f(hi) < target:
        if hi >= hi_cap:
            # target within rounding of the supremum on a capped domain
            return hi
        lo = hi
        hi = min(hi * 2.0, hi_cap)
    # pull an overflowed (saturated) upper end back to finite values
    while math.isinf(f(hi)):
        if hi - lo <= 1e-13 * max(1.0, hi):
            return hi
        mid = 0.5 * (lo + hi)
        if f(mid) >= target:
            hi = mid
        else:
            lo = mid
    root = brentq(lambda s: f(s) - target, lo, hi, xtol=1e-14, rtol=8.9e-16)
    # One guarded Newton polish; the derivative is available and positive
    # in the interior.
    d = df(root)
    if d > 0.0:
        step = (f(root) - target) / d
        if abs(step) < 1e-8 * max(1.0, abs(root)):
            root -= step
    return root


def gk(k: float, a: float) -> float:
    """Inverse of hk: the s in profile_interval(k) with hk(k, s) = a.

    gk(0, a) = (2a)**(1/3).  Raises DomainError for a outside
    rect_area_interval(k).
    """
    if not math.isfinite(a) or a < 0.0:
        raise DomainError(f"gk: a = {a} outside [0, inf)")
    if k > 0.0:
        amax = _neg_three_halves(k)
        if a > amax * (1.0 + _EDGE_RTOL):
            raise DomainError(f"gk: a = {a} beyond k**-1.5 = {amax}")
        if a >= amax:
            return 0.5 * math.pi / math.sqrt(k)
        hi_cap = 0.5 * math.pi / math.sqrt(k)
    else:
        hi_cap = _INF
    hi0 = max(1.0, (2.0 * a) ** (1.0 / 3.0))
    return _invert_increasing(lambda s: hk(k, s), lambda s: dhk(k, s), a, hi0, hi_cap)


def fk(k: float, a: float) -> float:
    """Inverse of abar: the s >= 0 with abar(k, s) = a.

    fk(0, a) = (12a)**(1/3).  For k > 0 the inversion is restricted to the
    first monotone span [0, 2 pi/sqrt k], whose upper area value is
    pi * k**-1.5; beyond it DomainError is raised.
    """
    if not math.isfinite(a) or a < 0.0:
        raise DomainError(f"fk: a = {a} outside [0, inf)")
    if k > 0.0:
        amax = math.pi * _neg_three_halves(k)
        if a > amax * (1.0 + _EDGE_RTOL):
            raise DomainError(f"fk: a = {a} beyond pi * k**-1.5 = {amax}")
        if a >= amax:
            return 2.0 * math.pi / math.sqrt(k)
        hi_cap = 2.0 * math.pi / math.sqrt(k)
    else:
        hi_cap = _INF
    hi0 = max(1.0, (12.0 * a) ** (1.0 / 3.0))
    return _invert_increasing(lambda s: abar(k, s), lambda s: dabar(k, s), a, hi0, hi_cap)
