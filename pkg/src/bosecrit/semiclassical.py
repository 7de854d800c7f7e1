"""Semiclassical thermodynamics of the trapped, weakly interacting gas.

The single-particle spectrum in the mean-field (Hartree-Fock) approximation

    E_p = p^2/2m + (g_int / 2 m c^2) n(r) + (lam / 4 m c^2) (kB T)^2 + m c^2 alpha r^2

(with ``g_int = lam / kappa^2`` and the rest mass dropped) folds, after an
exact momentum integration, into a local-fugacity description

    n(r) = (m kB T / 2 pi hbar^2)^(3/2) g_{3/2}(z(r)),
    z(r) = exp(beta (mu - (g_int/2mc^2) n(r) - (lam/4mc^2)(kB T)^2 - m c^2 alpha r^2)),

which is solved point by point as a damped fixed point (bracketed fall-back
near z -> 1, where the damped map's slope diverges).

Two analytic routes for the total particle number are kept side by side:

* ``paper-verbatim``   -- the published first-order expression, whose ideal
  prefactor 1/sqrt(2 alpha^3) does *not* reproduce the standard
  harmonic-trap result (it is a factor 2 high);
* ``derived-consistent`` -- the same expansion re-derived from the density
  above, with ideal prefactor 1/(2 alpha)^(3/2); this is the default and is
  the one cross-checked against the numeric quadrature oracle.

The numeric condensation temperature solves the two-level problem: the inner
constraint fixes mu from the particle number, the critical point is reached
when mu hits its semiclassical maximum

    mu_c = (g_int / 2 m c^2) n(0) + (lam / 4 m c^2) (kB T)^2 ,

equivalently (and that is how the outer root is driven) when the number held
by the excited states at mu = mu_c has dropped to N.

All operations are pure given immutable inputs; profile grid points and
parameter sweeps can be evaluated concurrently with no shared mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, NamedTuple

import numpy as np
from scipy import integrate
from scipy.optimize import brentq

from . import field as field_mod
from .errors import (ConvergenceError, DomainError, NonPhysical, PoleError,
                     QuadratureError)
from .specialfn import (DEFAULT_ACCURACY, SeriesAccuracy, GDoubleSumInfo,
                        bose_function, g_double_sum_info, zeta)
from .units import SI, GasParameters, PhysicalConstants, harmonic_length

MODES = ("paper-verbatim", "derived-consistent")

_PROFILE_TOL = 1e-10
_PROFILE_MAX_ITER = 200
_DAMPING = 0.5
_QUAD_RTOL = 1e-10
#: beta * m c^2 alpha * R^2 at the quadrature cutoff; the integrand there is
#: below 1e-16 of its peak.
_TAIL_EXPONENT = 45.0
#: diluteness guard a * n(0)^(1/3) above which the self-consistent loop is
#: not trusted.
_DILUTENESS_MAX = 0.05


@dataclass(frozen=True)
class ThermalState:
    """Temperature and chemical potential, with derived beta and fugacity.

    The semiclassical bound mu <= mu_c cannot be checked here (it needs the
    gas parameters and the central density); operations that would produce a
    local fugacity above 1 raise ``DomainError`` instead.
    """

    temperature: float
    chemical_potential: float
    constants: PhysicalConstants = SI
    beta: float = dataclass_field(init=False)
    fugacity: float = dataclass_field(init=False)

    def __post_init__(self):
        if not self.temperature > 0.0:
            raise NonPhysical(f"temperature must be positive, got {self.temperature}")
        beta = 1.0 / (self.constants.kB * self.temperature)
        object.__setattr__(self, "beta", beta)
        arg = beta * self.chemical_potential
        object.__setattr__(self, "fugacity", math.exp(arg) if arg < 709.0 else math.inf)


@dataclass(frozen=True)
class DensityProfile:
    """Radial grid with the self-consistent particle density."""

    radii: np.ndarray
    density: np.ndarray
    converged: np.ndarray


@dataclass(frozen=True)
class TemperatureReport:
    """All critical temperatures of one parameter set, with provenance notes."""

    t0: float              # ideal condensation temperature, K
    tc: float              # interacting condensation temperature (oracle), K
    shift: float           # (tc - t0) / t0
    t_sb: float            # symmetry-breaking temperature, K (inf at lam = 0)
    t_ratio: float         # tc / t0
    theta: float
    mode: str
    ordering_ok: bool      # t_sb > t0 > tc (lam > 0)
    shift_analytic: float
    notes: dict


def thermal_prefactor(mass: float, temperature: float,
                      constants: PhysicalConstants = SI) -> float:
    """Density scale (m kB T / 2 pi hbar^2)^(3/2), m^-3."""
    return (mass * constants.kB * temperature
            / (2.0 * math.pi * constants.hbar ** 2)) ** 1.5


def energy_spectrum(params: GasParameters, p: float, n_local: float,
                    temperature: float, r: float, include_rest_mass: bool = False,
                    constants: PhysicalConstants = SI) -> float:
    """Mean-field single-particle energy at momentum p, density n_local, radius r."""
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * temperature
    energy = (
        p * p / (2.0 * params.mass)
        + 0.5 * params.g_int / mc2 * n_local
        + 0.25 * params.lam / mc2 * kt * kt
        + mc2 * params.alpha * r * r
    )
    if include_rest_mass:
        energy += mc2
    return energy


def _bath_energy(params: GasParameters, kt: float, mc2: float,
                 include_thermal_bath: bool) -> float:
    if not include_thermal_bath:
        return 0.0
    return 0.25 * params.lam / mc2 * kt * kt


def local_fugacity(params: GasParameters, state: ThermalState, n_local: float,
                   r: float, constants: PhysicalConstants = SI,
                   include_thermal_bath: bool = True) -> float:
    """Position-dependent fugacity z(r), guaranteed <= 1 for mu <= mu_c."""
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * state.temperature
    exponent = state.beta * (
        state.chemical_potential
        - 0.5 * params.g_int / mc2 * n_local
        - _bath_energy(params, kt, mc2, include_thermal_bath)
        - mc2 * params.alpha * r * r
    )
    z = math.exp(exponent) if exponent < 0.0 else math.exp(min(exponent, 1.0))
    if z > 1.0 + 1e-12:
        raise DomainError(
            f"local fugacity {z} exceeds 1: chemical potential above the critical value"
        )
    return min(z, 1.0)


def _solve_density_point(ct: float, beta_g2m: float, exponent0: float,
                         tol: float = _PROFILE_TOL, damping: float = _DAMPING,
                         max_iter: int = _PROFILE_MAX_ITER) -> tuple[float, bool]:
    """Solve n = ct * g_{3/2}(exp(exponent0 - beta_g2m * n)) at one point.

    Damped fixed-point iteration; if the map is too steep (z -> 1 at strong
    effective fugacity) the same equation is finished by bracketed root
    finding on [0, ct * zeta(3/2)].
    """
    def rhs(n: float) -> float:
        x = exponent0 - beta_g2m * n
        return ct * bose_function(1.5, math.exp(x) if x < 0.0 else 1.0)

    if beta_g2m == 0.0:
        return rhs(0.0), True

    n = rhs(0.0)
    for _ in range(max_iter):
        fn = rhs(n)
        delta = fn - n
        if abs(delta) <= tol * max(fn, 1e-300):
            return fn, True
        n += damping * delta

    hi = ct * zeta(1.5) * (1.0 + 1e-12)
    if rhs(hi) - hi > 0.0:  # no sign change: saturated exactly at the cap
        return hi, True
    try:
        root = brentq(lambda x: rhs(x) - x, 0.0, hi,
                      xtol=max(hi * 1e-15, 5e-324), rtol=8.9e-16, maxiter=300)
        return root, True
    except RuntimeError:
        return n, False


def self_consistent_density(params: GasParameters, state: ThermalState,
                            radii, constants: PhysicalConstants = SI,
                            include_thermal_bath: bool = True,
                            tol: float = _PROFILE_TOL) -> DensityProfile:
    """Self-consistent density n(r) on the given radial grid.

    Each grid point is an independent scalar fixed-point problem (safe to
    evaluate concurrently).  Raises ``DomainError`` if the converged point
    implies a local fugacity above 1 (chemical potential beyond mu_c), and
    ``ConvergenceError`` if any point fails to converge.
    """
    radii = np.asarray(radii, dtype=float)
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * state.temperature
    ct = thermal_prefactor(params.mass, state.temperature, constants)
    mu_eff = state.chemical_potential - _bath_energy(params, kt, mc2, include_thermal_bath)
    beta_g2m = state.beta * 0.5 * params.g_int / mc2
    gb = state.beta * mc2 * params.alpha

    density = np.empty_like(radii)
    converged = np.empty(radii.shape, dtype=bool)
    for k, r in enumerate(radii):
        exponent0 = state.beta * mu_eff - gb * r * r
        n, ok = _solve_density_point(ct, beta_g2m, exponent0, tol=tol)
        residual_exponent = exponent0 - beta_g2m * n
        if residual_exponent > 1e-12:
            raise DomainError(
                f"fugacity bound violated at r={r}: chemical potential above mu_c"
            )
        density[k] = n
        converged[k] = ok
    if not converged.all():
        raise ConvergenceError(
            f"{int((~converged).sum())} of {radii.size} density points did not converge",
            history=DensityProfile(radii, density, converged),
        )
    return DensityProfile(radii, density, converged)


def first_order_density(params: GasParameters, state: ThermalState, r: float,
                        mode: str = "derived-consistent",
                        constants: PhysicalConstants = SI) -> float:
    """Density expanded to first order in the coupling at radius r.

    ``derived-consistent`` carries the expansion of the self-consistent
    density (agrees with it to second order in the coupling).
    ``paper-verbatim`` evaluates the published closed form unchanged; note
    its bracket is *not* dimensionally consistent and is kept only for
    verbatim reproduction.
    """
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    c, hbar = constants.c, constants.hbar
    mc2 = params.mass * c ** 2
    kt = constants.kB * state.temperature
    w_exponent = state.beta * (state.chemical_potential - mc2 * params.alpha * r * r)
    if w_exponent > math.log(1.0 - 1e-9):
        raise DomainError("first-order expansion needs w below the g_1/2 divergence")
    w = math.exp(w_exponent)
    ct = thermal_prefactor(params.mass, state.temperature, constants)
    n0 = ct * bose_function(1.5, w)
    if params.lam == 0.0:
        return n0
    g12 = bose_function(0.5, w)
    if mode == "derived-consistent":
        shift_energy = 0.5 * params.g_int / mc2 * n0 + 0.25 * params.lam / mc2 * kt * kt
        return n0 - ct * g12 * state.beta * shift_energy
    g32 = bose_function(1.5, w)
    bracket = (
        (kt / (2.0 * params.kappa * c)) ** 2
        * (params.mass / (math.pi * hbar ** 2)) ** 3 * g32
        - math.sqrt(kt ** 5 * params.mass / (32.0 * math.pi ** 3 * hbar ** 6 * c ** 4))
        * g32 / g12
    )
    return n0 - params.lam * g12 * bracket


def _radial_number(density_at: Callable[[float], float], gb: float) -> float:
    """Integral of 4 pi r^2 density_at(r) out past the Boltzmann tail."""
    r_max = math.sqrt(_TAIL_EXPONENT / gb)
    value, err = integrate.quad(
        lambda r: 4.0 * math.pi * r * r * density_at(r),
        0.0, r_max, epsabs=0.0, epsrel=_QUAD_RTOL, limit=256,
    )
    if value != 0.0 and err > 1e-7 * abs(value):
        raise QuadratureError(
            f"radial number integral error estimate {err} too large for value {value}"
        )
    return value


def _numeric_number(params: GasParameters, temperature: float, mu_eff: float,
                    constants: PhysicalConstants) -> float:
    """Quadrature of the self-consistent density for an effective mu (bath removed)."""
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * temperature
    beta = 1.0 / kt
    ct = thermal_prefactor(params.mass, temperature, constants)
    beta_g2m = beta * 0.5 * params.g_int / mc2
    gb = beta * mc2 * params.alpha

    def density_at(r: float) -> float:
        n, ok = _solve_density_point(ct, beta_g2m, beta * mu_eff - gb * r * r)
        if not ok:
            raise ConvergenceError(f"density point at r={r} did not converge")
        return n

    return _radial_number(density_at, gb)


def critical_chemical_potential(params: GasParameters, temperature: float,
                                n_center: float,
                                constants: PhysicalConstants = SI,
                                include_thermal_bath: bool = True) -> float:
    """Largest chemical potential the excited states support, mu_c (J)."""
    if n_center < 0.0:
        raise NonPhysical(f"central density must be >= 0, got {n_center}")
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * temperature
    return (0.5 * params.g_int / mc2 * n_center
            + _bath_energy(params, kt, mc2, include_thermal_bath))


def total_number(params: GasParameters, state: ThermalState,
                 mode: str = "numeric", constants: PhysicalConstants = SI,
                 include_thermal_bath: bool = True,
                 acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """Total particle number at the given thermal state.

    mode = ``numeric``: adaptive radial quadrature of the self-consistent
    density (the oracle route).  The analytic modes evaluate the first-order
    closed form with fugacity z = exp(beta mu); see the module docstring for
    how ``paper-verbatim`` and ``derived-consistent`` differ.
    """
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * state.temperature

    if mode == "numeric":
        mu_eff = state.chemical_potential - _bath_energy(params, kt, mc2,
                                                         include_thermal_bath)
        return _numeric_number(params, state.temperature, mu_eff, constants)

    if mode not in MODES:
        raise DomainError(f"mode must be 'numeric' or one of {MODES}, got {mode!r}")
    c, hbar = constants.c, constants.hbar
    z = state.fugacity
    if z > 1.0:
        raise DomainError("fugacity above 1 in the analytic number formula")
    g3 = bose_function(3.0, z, acc)

    if mode == "paper-verbatim":
        ideal = 1.0 / math.sqrt(2.0 * params.alpha ** 3) * (kt / (hbar * c)) ** 3 * g3
        if params.lam == 0.0:
            return ideal
        g2 = bose_function(2.0, z, acc)
        gg = g_double_sum_info(z, acc).value
        return ideal - (
            params.g_int / (8.0 * hbar ** 6 * c ** 5)
            * (params.mass / (math.pi * params.alpha)) ** 1.5 * gg * kt ** 3.5
            - params.lam / ((2.0 * params.alpha) ** 1.5 * params.mass
                            * hbar ** 3 * c ** 5) * g2 * kt ** 4
        )

    ideal_prefactor = (2.0 * params.alpha) ** -1.5 * (kt / (hbar * c)) ** 3
    if params.lam == 0.0:
        return ideal_prefactor * g3
    g2 = bose_function(2.0, z, acc)
    gg = g_double_sum_info(z, acc).value
    ct = thermal_prefactor(params.mass, state.temperature, constants)
    correction = 0.5 * params.g_int / mc2 * ct / kt * gg
    if include_thermal_bath:
        correction += 0.25 * params.lam * kt / mc2 * g2
    return ideal_prefactor * (g3 - correction)


def ideal_condensation_temperature(params: GasParameters,
                                   mode: str = "derived-consistent",
                                   constants: PhysicalConstants = SI) -> float:
    """Condensation temperature of the non-interacting trapped gas (K)."""
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    n = params.particle_number
    if mode == "paper-verbatim":
        kt0 = (n * math.sqrt(2.0 * params.alpha ** 3) / zeta(3.0)) ** (1.0 / 3.0) \
            * constants.hbar * constants.c
    else:
        kt0 = constants.hbar * params.omega0 * (n / zeta(3.0)) ** (1.0 / 3.0)
    return kt0 / constants.kB


_THETA_CACHE: dict[float, tuple[float, GDoubleSumInfo]] = {}


def theta_from_double_sum(g_at_unity: float) -> float:
    """The shift constant for a given value of the z = 1 double sum."""
    return (
        (zeta(3.0) * zeta(2.0) - g_at_unity)
        / (3.0 * (2.0 * math.pi) ** 1.25 * zeta(3.0))
        * (4.0 / (math.pi ** 3 * zeta(3.0))) ** (1.0 / 6.0)
    )


def theta_info(acc: SeriesAccuracy = DEFAULT_ACCURACY) -> tuple[float, GDoubleSumInfo]:
    """The shift constant Theta together with the double-sum provenance."""
    cached = _THETA_CACHE.get(acc.target_rel_error)
    if cached is not None:
        return cached
    info = g_double_sum_info(1.0, acc)
    theta = theta_from_double_sum(info.value)
    _THETA_CACHE[acc.target_rel_error] = (theta, info)
    return theta, info


def theta_constant(acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """The dimensionless constant entering the analytic condensation shift."""
    return theta_info(acc)[0]


def condensation_shift(params: GasParameters,
                       constants: PhysicalConstants = SI,
                       acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """Analytic first-order shift (Tc - T0)/T0.

    Written through g_int = lam / kappa^2 = 16 pi hbar^2 c^2 a, so the scale
    kappa cancels exactly and the result depends on (a, m, omega0, N) alone.
    Linear in the coupling; zero for the ideal gas.
    """
    if params.lam == 0.0:
        return 0.0
    theta = theta_constant(acc)
    return (
        -params.g_int * params.alpha ** 0.25
        * math.sqrt(params.mass) / (constants.c ** 1.5 * constants.hbar ** 2.5)
        * theta * params.particle_number ** (1.0 / 6.0)
    )


def _critical_number(params: GasParameters, temperature: float,
                     constants: PhysicalConstants,
                     include_thermal_bath: bool) -> float:
    """Particle number held by the excited states exactly at mu = mu_c."""
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * temperature
    ct = thermal_prefactor(params.mass, temperature, constants)
    n_center = ct * zeta(1.5)
    mu_c = critical_chemical_potential(params, temperature, n_center,
                                       constants, include_thermal_bath)
    mu_eff = mu_c - _bath_energy(params, kt, mc2, include_thermal_bath)
    return _numeric_number(params, temperature, mu_eff, constants)


def _diluteness(params: GasParameters, temperature: float,
                constants: PhysicalConstants) -> float:
    ct = thermal_prefactor(params.mass, temperature, constants)
    return (params.scattering_length or 0.0) * (ct * zeta(1.5)) ** (1.0 / 3.0)


def numeric_condensation_temperature(params: GasParameters,
                                     constants: PhysicalConstants = SI,
                                     include_thermal_bath: bool = True,
                                     rel_tol: float = 1e-9) -> float:
    """Condensation temperature from the self-consistent oracle (K).

    Outer bracketed root on the critical-number constraint
    N_excited(T, mu_c(T)) = N, which is where the inner chemical-potential
    solution reaches mu_c; no first-order expansion enters anywhere.
    """
    t0 = ideal_condensation_temperature(params, "derived-consistent", constants)
    dilute = _diluteness(params, t0, constants)
    if dilute > _DILUTENESS_MAX:
        raise ConvergenceError(
            f"gas parameter a n(0)^(1/3) = {dilute:.3g} too large for the "
            f"self-consistent loop (max {_DILUTENESS_MAX})"
        )
    history: list[tuple[float, float]] = []

    def mismatch(t: float) -> float:
        value = _critical_number(params, t, constants, include_thermal_bath) \
            - params.particle_number
        history.append((t, value))
        return value

    lo, hi = 0.85 * t0, 1.08 * t0
    for _ in range(8):
        if mismatch(lo) < 0.0:
            break
        lo *= 0.8
    else:
        raise ConvergenceError("could not bracket the condensation temperature from below",
                               history=history)
    for _ in range(8):
        if mismatch(hi) > 0.0:
            break
        hi *= 1.2
    else:
        raise ConvergenceError("could not bracket the condensation temperature from above",
                               history=history)
    try:
        return brentq(mismatch, lo, hi, xtol=t0 * 1e-12, rtol=max(rel_tol, 8.9e-16),
                      maxiter=200)
    except RuntimeError as exc:
        raise ConvergenceError(f"outer temperature root failed: {exc}",
                               history=history) from exc


def chemical_potential_from_number(params: GasParameters, temperature: float,
                                   constants: PhysicalConstants = SI,
                                   include_thermal_bath: bool = True) -> float:
    """Chemical potential mu(T) fixed by the particle number (J).

    Bracketed root on (-inf, mu_c]; raises ``ConvergenceError`` when even
    mu_c cannot hold N (temperature below the condensation point).
    """
    mc2 = params.mass * constants.c ** 2
    kt = constants.kB * temperature
    ct = thermal_prefactor(params.mass, temperature, constants)
    n_center = ct * zeta(1.5)
    mu_c = critical_chemical_potential(params, temperature, n_center,
                                       constants, include_thermal_bath)
    bath = _bath_energy(params, kt, mc2, include_thermal_bath)
    mu_eff_c = mu_c - bath
    n_target = params.particle_number
    n_max = _numeric_number(params, temperature, mu_eff_c, constants)
    if n_max < n_target * (1.0 - 1e-9):
        raise ConvergenceError(
            f"even mu = mu_c holds only {n_max:.6g} < N = {n_target:.6g}: "
            "temperature is below the condensation point",
            history=[(temperature, n_max)],
        )
    if n_max <= n_target:  # at criticality to within rounding
        return mu_eff_c + bath

    def mismatch(mu_eff: float) -> float:
        return _numeric_number(params, temperature, mu_eff, constants) - n_target

    lo = mu_eff_c - kt * (40.0 + math.log(n_max / n_target))
    for _ in range(8):
        if mismatch(lo) < 0.0:
            break
        lo -= 20.0 * kt
    mu_eff = brentq(mismatch, lo, mu_eff_c, xtol=kt * 1e-13, rtol=8.9e-16,
                    maxiter=200)
    return mu_eff + bath


class TsbTcRelation(NamedTuple):
    """Symmetry-breaking temperature from the condensation ratio, both routes."""

    general: float                 # K, from the alpha^(1/8) form
    harmonic: float                # K, from the published oscillator form
    ratio: float                   # general / harmonic
    harmonic_constant: float       # the constant printed in the oscillator form
    harmonic_constant_rederived: float  # value that would make both routes agree


#: constant appearing inside the published harmonic-oscillator form
_HO_PRINTED_CONSTANT = 5.2


def tsb_tc_relation(params: GasParameters, t_ratio: float,
                    constants: PhysicalConstants = SI,
                    acc: SeriesAccuracy = DEFAULT_ACCURACY) -> TsbTcRelation:
    """Symmetry-breaking temperature implied by T_r = Tc / T0.

    Evaluates both the general form and the harmonic-oscillator form and
    reports their (parameter-independent) ratio; the published constant 5.2
    in the oscillator form is kept verbatim, next to the value re-derived by
    direct substitution, 2^(9/4) pi^(-3/2) Theta^2.
    """
    if t_ratio >= 1.0:
        raise PoleError(f"the relation has a pole at T_r = 1; got T_r = {t_ratio}")
    if not (params.lam > 0.0 and params.kappa and params.kappa > 0.0):
        raise NonPhysical("the relation needs a positive coupling and scale")
    c, hbar, kb = constants.c, constants.hbar, constants.kB
    theta = theta_constant(acc)
    n_12 = params.particle_number ** (1.0 / 12.0)
    pole = 1.0 / (1.0 - t_ratio)
    general = pole * params.alpha ** 0.125 / (params.kappa * kb) \
        * (params.mass * c / (2.0 * math.pi * hbar)) ** 1.25 * 2.0 * theta * n_12
    a_ho = harmonic_length(params, constants)
    harmonic = pole * params.mass * c / (params.kappa * hbar * kb) \
        * math.sqrt(_HO_PRINTED_CONSTANT / (8.0 * math.pi * a_ho)) * n_12
    rederived = 2.0 ** 2.25 * math.pi ** -1.5 * theta * theta
    return TsbTcRelation(general, harmonic, general / harmonic,
                         _HO_PRINTED_CONSTANT, rederived)


def build_temperature_report(params: GasParameters,
                             mode: str = "derived-consistent",
                             constants: PhysicalConstants = SI) -> TemperatureReport:
    """Assemble every temperature of one parameter set into a report."""
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    theta, info = theta_info()
    t0 = ideal_condensation_temperature(params, mode, constants)
    shift_analytic = condensation_shift(params, constants)
    notes = {
        "t0": f"[CTI] closed form, {mode} prefactor",
        "theta": f"[CTE] with double sum truncated at diagonal {info.truncation}",
        "shift_analytic": "[SHIFT] first order in the coupling",
    }
    if params.lam == 0.0:
        notes["tc"] = "ideal gas: tc = t0 exactly"
        notes["t_sb"] = "[TCS] divergent in the zero-coupling limit"
        return TemperatureReport(
            t0=t0, tc=t0, shift=0.0, t_sb=math.inf, t_ratio=1.0, theta=theta,
            mode=mode, ordering_ok=False, shift_analytic=0.0, notes=notes,
        )
    tc = numeric_condensation_temperature(params, constants)
    t_sb = field_mod.symmetry_breaking_temperature(params, 0.0, constants)
    shift = (tc - t0) / t0
    notes["tc"] = "self-consistent oracle on [DE1]+[F1]+[NC]+[PQ]"
    notes["t_sb"] = "[TCS] at the trap centre"
    return TemperatureReport(
        t0=t0, tc=tc, shift=shift, t_sb=t_sb, t_ratio=tc / t0, theta=theta,
        mode=mode, ordering_ok=t_sb > t0 > tc, shift_analytic=shift_analytic,
        notes=notes,
    )


def discrepancy_report(params: GasParameters,
                       constants: PhysicalConstants = SI) -> dict:
    """Quantify the published-vs-derived differences for one parameter set.

    Returns a flat dict: the ideal-number prefactor ratio between the two
    analytic modes, the two ideal temperatures, the numeric shift measured
    against each mode's T0, its ratio to the analytic shift, and the two
    routes of the symmetry-breaking relation.
    """
    t0_dc = ideal_condensation_temperature(params, "derived-consistent", constants)
    t0_pv = ideal_condensation_temperature(params, "paper-verbatim", constants)
    pref_pv = 1.0 / math.sqrt(2.0 * params.alpha ** 3)
    pref_dc = (2.0 * params.alpha) ** -1.5
    report = {
        "nc1_prefactor_ratio": pref_pv / pref_dc,
        "t0_derived_consistent_k": t0_dc,
        "t0_paper_verbatim_k": t0_pv,
        "shift_analytic": condensation_shift(params, constants),
    }
    if params.lam > 0.0:
        tc = numeric_condensation_temperature(params, constants)
        shift_dc = (tc - t0_dc) / t0_dc
        shift_pv = (tc - t0_pv) / t0_pv
        report.update({
            "tc_numeric_k": tc,
            "shift_numeric_derived_consistent": shift_dc,
            "shift_numeric_paper_verbatim": shift_pv,
            "shift_ratio_derived_consistent": shift_dc / report["shift_analytic"],
            "shift_ratio_paper_verbatim": shift_pv / report["shift_analytic"],
        })
        relation = tsb_tc_relation(params, tc / t0_dc, constants)
        report.update({
            "rel_over_ho": relation.ratio,
            "ho_constant_printed": relation.harmonic_constant,
            "ho_constant_rederived": relation.harmonic_constant_rederived,
        })
    return report
