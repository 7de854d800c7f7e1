"""Bose-Einstein functions, Riemann zeta values and the weighted double sum.

These are the numerical kernel of every condensation formula in the package:

* ``bose_function(nu, z)`` evaluates g_nu(z) = sum_{j>=1} z^j / j^nu for
  fugacities z in [0, 1], which equals the momentum integral
  (1/Gamma(nu)) int_0^inf x^(nu-1) / (exp(x)/z - 1) dx;
* ``zeta(nu)`` is g_nu(1) for nu > 1;
* ``g_double_sum(z)`` evaluates
  G(z) = sum_{i,j>=1} z^(i+j) / (i^(1/2) j^(3/2) (i+j)^(3/2)).

Two evaluation regimes are used for g_nu: the defining power series for
z <= 0.5, and for z > 0.5 the convergent expansion about z = 1 in powers of
alpha = -ln z (radius 2*pi), which needs zeta at descending arguments and is
therefore backed by an Euler-Maclaurin zeta evaluator plus the functional
equation for arguments below 1/2.

The double sum is organised over diagonals s = i + j, whose inner
coefficients A(s) = sum_i i^(-1/2) (s-i)^(-3/2) form a convolution computed
with one FFT.  At z = 1 the diagonal terms decay only like s^-2, so the
partial sums converge like 1/M; the returned value therefore adds the exact
zeta(3/2) * sum_{s>M} s^-2 leading tail and removes the remaining
O(M^-3/2) part by a short Hurwitz-zeta-basis extrapolation, after which
doubling the truncation radius moves the result at the 1e-11 level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import integrate
from scipy.special import zeta as _hurwitz_zeta

from .errors import ConvergenceError, DomainError

__all__ = [
    "SeriesAccuracy",
    "DEFAULT_ACCURACY",
    "bose_function",
    "bose_function_quadrature",
    "zeta",
    "g_double_sum",
    "g_double_sum_info",
    "g_double_sum_truncated",
    "GDoubleSumInfo",
    "check_derivative_identity",
]

#: Fugacity below which the defining series is summed directly.
_SERIES_SWITCH = 0.5
#: g_nu with nu <= 1 diverges at z = 1; evaluation is refused above this.
_DIVERGENCE_GUARD = 1.0 - 1e-9
#: z this close to 1 is evaluated at z = 1 in the double sum (the difference
#: is below 1e-10 because G'(z) diverges only logarithmically).
_GSUM_UNIT_WINDOW = 1e-12

# B_{2k} for k = 1..13, used by the Euler-Maclaurin zeta evaluator.
_BERNOULLI = (
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0,
)


@dataclass(frozen=True)
class SeriesAccuracy:
    """Accuracy request for the series evaluations.

    ``target_rel_error`` is the guaranteed relative truncation error;
    ``max_terms`` caps the work (series terms, or the diagonal radius i+j
    of the double sum) before ``ConvergenceError`` is raised.
    """

    target_rel_error: float = 1e-10
    max_terms: int = 2**22

    def __post_init__(self):
        if not (0.0 < self.target_rel_error < 1e-3):
            raise DomainError(
                f"target_rel_error must lie in (0, 1e-3), got {self.target_rel_error}"
            )
        if self.max_terms < 10:
            raise DomainError(f"max_terms must be >= 10, got {self.max_terms}")


DEFAULT_ACCURACY = SeriesAccuracy()

# zeta memo table; plain dict writes are atomic under the GIL, so concurrent
# readers at worst recompute a value.
_ZETA_CACHE: dict[float, float] = {}


def _zeta_euler_maclaurin(s: float, n: int = 24) -> float:
    """Riemann zeta for real s >= 0.5, s != 1, by Euler-Maclaurin summation."""
    total = sum(j ** -s for j in range(1, n))
    total += n ** (1.0 - s) / (s - 1.0) + 0.5 * n ** -s
    rising = s                      # s (s+1) ... (s+2k-2)
    power = n ** (-s - 1.0)
    fact = 2.0
    for k, b2k in enumerate(_BERNOULLI, start=1):
        total += b2k / fact * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= n * n
        fact *= (2 * k + 1) * (2 * k + 2)
    return total


def _zeta_any(s: float) -> float:
    """Riemann zeta for any real s != 1 (functional equation below 1/2)."""
    cached = _ZETA_CACHE.get(s)
    if cached is not None:
        return cached
    if s == 1.0:
        raise DomainError("zeta has a pole at 1")
    if s >= 0.5:
        value = _zeta_euler_maclaurin(s)
    elif s == 0.0:
        value = -0.5
    else:
        m = round(s)
        if m == s and m % 2 == 0:
            value = 0.0  # trivial zeros at the negative even integers
        else:
            value = (
                2.0 ** s * math.pi ** (s - 1.0) * math.sin(0.5 * math.pi * s)
                * math.gamma(1.0 - s) * _zeta_euler_maclaurin(1.0 - s)
            )
    _ZETA_CACHE[s] = value
    return value


def zeta(nu: float) -> float:
    """Riemann zeta(nu) for nu > 1; equals ``bose_function(nu, 1)``."""
    if not nu > 1.0:
        raise DomainError(f"zeta(nu) requires nu > 1, got {nu}")
    return _zeta_any(nu)


def _bose_series(nu: float, z: float, acc: SeriesAccuracy) -> float:
    """Direct summation of sum z^j / j^nu with a geometric tail bound."""
    total = 0.0
    power = 1.0
    for j in range(1, acc.max_terms + 1):
        power *= z
        term = power / j ** nu
        total += term
        # terms decrease, so the tail is below term * z / (1 - z)
        if term * z <= (1.0 - z) * max(1e-300, total) * min(acc.target_rel_error, 1e-15):
            return total
    raise ConvergenceError(
        f"g_{nu}({z}) series did not converge within {acc.max_terms} terms"
    )


def _bose_near_one(nu: float, z: float, acc: SeriesAccuracy) -> float:
    """Expansion of g_nu(e^-alpha) in powers of alpha = -ln z (alpha < 2 pi)."""
    alpha = -math.log(z)
    tol = min(acc.target_rel_error, 1e-15)
    n = round(nu)
    if n == nu:
        # integer order: the k = n-1 term degenerates into a logarithm
        n = int(n)
        harmonic = sum(1.0 / i for i in range(1, n))
        total = (-alpha) ** (n - 1) / math.factorial(n - 1) * (harmonic - math.log(alpha))
        skip = n - 1
    else:
        total = math.gamma(1.0 - nu) * alpha ** (nu - 1.0)
        skip = -1
    scale = max(abs(total), 1.0)
    power = 1.0  # (-alpha)^k / k!
    small = 0
    for k in range(0, 130):
        if k > 0:
            power *= -alpha / k
        if k == skip:
            continue
        term = _zeta_any(nu - k) * power
        total += term
        small = small + 1 if abs(term) <= tol * max(abs(total), 1e-3 * scale) else 0
        if small >= 2 and k >= 3:
            return total
    raise ConvergenceError(f"g_{nu}({z}) expansion about z=1 did not converge")


def bose_function(nu: float, z: float, acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """Bose-Einstein function g_nu(z) for nu > 0 and fugacity z in [0, 1].

    Supported orders are arbitrary real nu > 0 (half-integers and integers
    are the hot paths).  For nu <= 1 the function diverges as z -> 1 and
    evaluation is refused for z > 1 - 1e-9.
    """
    if not nu > 0.0:
        raise DomainError(f"bose_function requires nu > 0, got nu={nu}")
    if z < 0.0 or z > 1.0:
        raise DomainError(f"fugacity must lie in [0, 1], got {z}")
    if nu <= 1.0 and z > _DIVERGENCE_GUARD:
        raise DomainError(
            f"g_{nu}(z) diverges as z -> 1; refusing z={z} > {_DIVERGENCE_GUARD}"
        )
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return zeta(nu)
    if z <= _SERIES_SWITCH:
        return _bose_series(nu, z, acc)
    return _bose_near_one(nu, z, acc)


def bose_function_quadrature(nu: float, z: float, rel_tol: float = 1e-11) -> float:
    """g_nu(z) from its integral definition, by adaptive quadrature.

    Independent cross-check route for :func:`bose_function`: integrates
    x^(nu-1) / (exp(x)/z - 1) / Gamma(nu) after the substitution x = u^2,
    which removes the integrable endpoint singularity for nu < 2.
    """
    if not nu > 0.0 or z < 0.0 or z > 1.0 or (z == 1.0 and nu <= 1.0):
        raise DomainError(f"invalid arguments nu={nu}, z={z}")
    if z == 0.0:
        return 0.0

    def integrand(u: float) -> float:
        x = u * u
        if x > 700.0:
            return 2.0 * u ** (2.0 * nu - 1.0) * z * math.exp(-x)
        if z == 1.0:
            return 2.0 * u ** (2.0 * nu - 1.0) / math.expm1(x)
        w = z * math.exp(-x)
        return 2.0 * u ** (2.0 * nu - 1.0) * w / (1.0 - w)

    upper = math.sqrt(720.0)  # exp(-x) tail below 1e-300
    value, err = integrate.quad(integrand, 0.0, upper, epsabs=0.0,
                                epsrel=rel_tol, limit=300)
    if value != 0.0 and err > 1e-8 * abs(value):
        raise ConvergenceError(f"quadrature for g_{nu}({z}) reached only {err}")
    return value / math.gamma(nu)


def check_derivative_identity(nu: float, z: float,
                              acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """Relative residual of z * d/dz g_nu(z) = g_(nu-1)(z) at an interior z.

    The derivative is taken by central finite difference with step 1e-6 * z,
    so residuals at the 1e-8 level are expected even for exact evaluations.
    """
    if not nu > 1.0:
        raise DomainError(f"identity check needs nu > 1 so both orders are finite, got {nu}")
    if not 0.0 < z < 1.0:
        raise DomainError(f"z must be interior to (0, 1), got {z}")
    h = 1e-6 * z
    derivative = (bose_function(nu, z + h, acc) - bose_function(nu, z - h, acc)) / (2.0 * h)
    reference = bose_function(nu - 1.0, z, acc)
    return abs(z * derivative - reference) / reference


class GDoubleSumInfo(NamedTuple):
    """Converged double-sum value with its truncation provenance."""

    value: float
    truncation: int      # largest diagonal i + j included
    tail_error: float    # estimated magnitude of the neglected remainder


# cached diagonal data: (M, A[s] for s <= M, cumulative sum of s^-3/2 A[s])
_DIAG_CACHE: dict[str, tuple[int, np.ndarray, np.ndarray]] = {}

# rigorous bound A(s) <= sqrt(2) zeta(3/2) s^-1/2 + 4 / s used for tails
_A_BOUND_HALF = math.sqrt(2.0) * 2.6123753486854883

def _diagonal_data(m: int) -> tuple[np.ndarray, np.ndarray]:
    """A(s) and the prefix sums of D(s) = s^-3/2 A(s) for s = 0..m.

    A is the linear convolution of i^-1/2 and j^-3/2, done with one real FFT
    (positive terms, so the convolution is well conditioned).
    """
    cached = _DIAG_CACHE.get("diag")
    if cached is not None and cached[0] >= m:
        _, a, dcum = cached
        return a[: m + 1], dcum[: m + 1]
    size = 1 << (2 * m + 1).bit_length()
    idx = np.arange(m + 1, dtype=np.float64)
    u = np.zeros(m + 1)
    v = np.zeros(m + 1)
    u[1:] = idx[1:] ** -0.5
    v[1:] = idx[1:] ** -1.5
    a = np.fft.irfft(np.fft.rfft(u, size) * np.fft.rfft(v, size), size)[: m + 1]
    a[:2] = 0.0
    d = np.zeros(m + 1)
    d[2:] = a[2:] * idx[2:] ** -1.5
    dcum = np.cumsum(d)
    _DIAG_CACHE["diag"] = (m, a, dcum)
    return a, dcum


def g_double_sum_truncated(m: int) -> float:
    """Value of the z = 1 double sum truncated at diagonal radius i + j <= m.

    The truncated triangle is summed exactly, the leading zeta(3/2) * s^-2
    tail is added in closed form, and the subleading remainder is removed by
    extrapolation on a Hurwitz-zeta basis.  Diagnostic hook for truncation
    studies: doubling ``m`` must leave the value essentially unchanged.
    """
    if m < 1 << 10:
        raise DomainError(f"truncation radius too small for the tail model: {m}")
    _, dcum = _diagonal_data(m)
    marks = np.array([m >> j for j in range(6, -1, -1)], dtype=np.int64)
    corrected = dcum[marks] + zeta(1.5) * _hurwitz_zeta(2.0, marks + 1.0)
    basis = np.column_stack([
        np.ones(marks.size),
        -_hurwitz_zeta(2.5, marks + 1.0),
        -_hurwitz_zeta(3.0, marks + 1.0),
        -_hurwitz_zeta(3.5, marks + 1.0),
    ])
    coef, *_ = np.linalg.lstsq(basis, corrected, rcond=None)
    return float(coef[0])


def _gsum_at_unity(acc: SeriesAccuracy) -> GDoubleSumInfo:
    """G(1) by doubling the truncation radius until the value stabilises."""
    m = 1 << 17
    cap = 1 << max(17, int(acc.max_terms).bit_length())
    previous = None
    while True:
        value = g_double_sum_truncated(m)
        drift = abs(value - g_double_sum_truncated(m // 2))
        if previous is not None:
            drift = max(drift, abs(value - previous))
        if drift <= acc.target_rel_error * abs(value):
            return GDoubleSumInfo(value, m, drift)
        previous = value
        m *= 2
        if m > cap:
            raise ConvergenceError(
                f"double sum at z=1 still moving by {drift} at diagonal cap {cap}"
            )


def _gsum_truncation(z: float, tol_abs: float, cap: int) -> int:
    """Smallest diagonal radius whose rigorous tail bound is below tol_abs."""
    m = 64
    while m <= cap:
        tail = z ** (m + 1) * (
            _A_BOUND_HALF * (m + 1) ** -2.0 + 4.0 * (m + 1) ** -2.5
        ) / (1.0 - z)
        if tail <= tol_abs:
            return m
        m *= 2
    raise ConvergenceError(
        f"double sum tail bound not met below diagonal cap {cap} for z={z}"
    )


def g_double_sum_info(z: float, acc: SeriesAccuracy = DEFAULT_ACCURACY) -> GDoubleSumInfo:
    """G(z) together with its truncation radius and tail estimate."""
    if z < 0.0 or z > 1.0:
        raise DomainError(f"fugacity must lie in [0, 1], got {z}")
    if z == 0.0:
        return GDoubleSumInfo(0.0, 0, 0.0)
    if z >= 1.0 - _GSUM_UNIT_WINDOW:
        return _gsum_at_unity(acc)
    # positive terms: the i = j = 1 diagonal already gives the value's scale
    scale = 2.0 ** -1.5 * z * z
    tol_abs = acc.target_rel_error * scale
    m = _gsum_truncation(z, tol_abs, int(acc.max_terms))
    _, dcum = _diagonal_data(m)
    idx = np.arange(m + 1, dtype=np.float64)
    d = np.diff(dcum, prepend=0.0)
    with np.errstate(under="ignore"):
        weights = np.exp(idx * math.log(z))
    value = float(np.dot(d, weights))
    return GDoubleSumInfo(value, m, tol_abs)


def g_double_sum(z: float, acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """Weighted double sum over i, j >= 1 of z^(i+j) / (i^(1/2) j^(3/2) (i+j)^(3/2))."""
    return g_double_sum_info(z, acc).value
