"""Invariant suite behind the CLI ``verify`` command.

Runs the library-level identities (special functions, unit round trips,
field-potential structure) on fixed synthetic parameters, then whatever the
scenario supports: the gas pipeline checks when trap and mass are present,
the scale checks when a healing length is present.  Every check yields one
pass/fail line; informational discrepancy numbers (published-vs-derived
prefactors and shift ratios) are reported separately and never fail.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

from . import field as field_mod
from . import scale as scale_mod
from . import semiclassical as sc
from .errors import BosecritError
from .scenario import Scenario
from .specialfn import (SeriesAccuracy, bose_function, bose_function_quadrature,
                        check_derivative_identity, g_double_sum_truncated, zeta)
from .units import SI, GasParameters, PhysicalConstants, validate


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


class VerificationReport(NamedTuple):
    checks: list
    info: dict

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name, bool(passed), detail)


_ZETA_REFERENCE = {
    1.5: 2.6123753486854883,
    2.0: math.pi ** 2 / 6.0,
    3.0: 1.2020569031595943,
}


def _specialfn_checks(acc: SeriesAccuracy) -> list:
    checks = []
    worst = max(abs(zeta(nu) - ref) / ref for nu, ref in _ZETA_REFERENCE.items())
    checks.append(_check("specialfn/zeta-values", worst < 1e-10,
                         f"worst relative deviation {worst:.3e} (tol 1e-10)"))
    worst = 0.0
    for nu in (1.5, 2.0, 3.0):
        for z in (0.1, 0.5, 0.9):
            series = bose_function(nu, z, acc)
            integral = bose_function_quadrature(nu, z)
            worst = max(worst, abs(series - integral) / integral)
    checks.append(_check("specialfn/series-vs-integral", worst < 1e-8,
                         f"worst relative deviation {worst:.3e} on 9 points (tol 1e-8)"))
    worst = 0.0
    for nu in (1.5, 2.0, 2.5, 3.0):
        for z in (0.1, 0.3, 0.5, 0.7, 0.9):
            worst = max(worst, check_derivative_identity(nu, z, acc))
    checks.append(_check("specialfn/derivative-identity", worst < 1e-6,
                         f"worst residual {worst:.3e} on 20 points (tol 1e-6)"))
    m = 1 << 18
    g_m, g_2m = g_double_sum_truncated(m), g_double_sum_truncated(2 * m)
    drift = abs(g_2m - g_m)
    checks.append(_check("specialfn/double-sum-stability", drift < 1e-8,
                         f"|G(2M) - G(M)| = {drift:.3e} at M = {m} (tol 1e-8)"))
    theta_m = sc.theta_from_double_sum(g_m)
    theta_2m = sc.theta_from_double_sum(g_2m)
    drift = abs(theta_2m - theta_m)
    checks.append(_check("specialfn/theta-stability", drift < 1e-8,
                         f"|Theta(2M) - Theta(M)| = {drift:.3e} (tol 1e-8)"))
    return checks


def _units_checks(constants: PhysicalConstants) -> list:
    checks = []
    worst = 0.0
    for kappa, a in ((3e39, 5.77e-9), (1e38, 1e-10), (7.7e40, 3.3e-8)):
        p = validate(GasParameters(mass=1.443e-25, kappa=kappa, scattering_length=a,
                                   omega0=2.0 * math.pi * 100.0), constants)
        q = validate(GasParameters(mass=1.443e-25, lam=p.lam, scattering_length=a,
                                   alpha=p.alpha), constants)
        worst = max(worst, abs(q.kappa - kappa) / kappa,
                    abs(q.omega0 - p.omega0) / p.omega0)
    checks.append(_check("units/round-trip", worst < 1e-12,
                         f"worst relative deviation {worst:.3e} (tol 1e-12)"))
    return checks


def _field_checks() -> list:
    # library identities on synthetic natural-unit parameters
    nat = PhysicalConstants.natural()
    checks = []
    symmetric = True
    residual = 0.0
    for lam in (0.5, 4.0, 25.0):
        p = validate(GasParameters(mass=1.0, lam=lam, scattering_length=1e-3,
                                   omega0=1.0), nat)
        inp = field_mod.FieldPotentialInput(p, temperature=0.3, external_phi=0.1)
        for phi in (0.0, 0.37, 1.4):
            if field_mod.potential_value(inp, phi, nat) != \
                    field_mod.potential_value(inp, -phi, nat):
                symmetric = False
        residual = max(residual, field_mod.thermal_term_identity(p, 0.8, nat))
    checks.append(_check("field/z2-symmetry", symmetric,
                         "potential exactly even in the field amplitude"))
    checks.append(_check("field/thermal-identity", residual < 1e-12,
                         f"worst residual {residual:.3e} (tol 1e-12)"))
    worst = 0.0
    for k, lam in enumerate((0.5, 1.0, 2.0, 5.0, 10.0)):
        p = validate(GasParameters(mass=1.0, lam=lam, scattering_length=1e-3,
                                   omega0=1.0), nat)
        t_sb = field_mod.symmetry_breaking_temperature(p, 0.0, nat)
        for t_frac in (0.25, 0.65):
            t = t_frac * t_sb
            report = field_mod.minima(p, t, 0.0, nat)
            inp = field_mod.FieldPotentialInput(p, temperature=t)
            res = minimize_scalar(
                lambda phi: field_mod.potential_value(inp, phi, nat),
                bounds=(0.25 * report.phi_min_plus, 2.0 * report.phi_min_plus),
                method="bounded", options={"xatol": report.phi_min_plus * 1e-12},
            )
            worst = max(worst, abs(res.x - report.phi_min_plus) / report.phi_min_plus)
    checks.append(_check("field/minima-match", worst < 1e-8,
                         f"worst relative deviation {worst:.3e} on 10 points (tol 1e-8)"))
    return checks


def _gas_checks(params: GasParameters, constants: PhysicalConstants) -> tuple[list, dict]:
    checks = []
    ideal = validate(GasParameters(mass=params.mass, lam=0.0, omega0=params.omega0,
                                   particle_number=params.particle_number), constants)
    t0 = sc.ideal_condensation_temperature(ideal, "derived-consistent", constants)
    n_num = sc.total_number(ideal, sc.ThermalState(t0, 0.0, constants),
                            "numeric", constants)
    closure = abs(n_num - ideal.particle_number) / ideal.particle_number
    checks.append(_check("semiclassical/ideal-closure", closure < 1e-3,
                         f"numeric number at (T0, mu=0) off by {closure:.3e} (tol 1e-3)"))
    info: dict = {}
    if params.lam > 0.0:
        report = sc.build_temperature_report(params, "derived-consistent", constants)
        checks.append(_check(
            "semiclassical/ordering", report.ordering_ok,
            f"T_sb = {report.t_sb:.6g} K > T0 = {report.t0:.6g} K > Tc = {report.tc:.6g} K",
        ))
        checks.append(_check("semiclassical/shift-sign", report.shift < 0.0,
                             f"numeric shift {report.shift:.6e} < 0"))
        tc_no_bath = sc.numeric_condensation_temperature(
            params, constants, include_thermal_bath=False)
        drift = abs(tc_no_bath - report.tc) / report.tc
        checks.append(_check("semiclassical/bath-independence", drift < 1e-8,
                             f"thermal-bath toggle moves Tc by {drift:.3e} (tol 1e-8)"))
        beta = 1.0 / (constants.kB * report.tc)
        mc2 = params.mass * constants.c ** 2
        gb = beta * mc2 * params.alpha
        radii = np.linspace(0.0, math.sqrt(45.0 / gb), 64)
        n_c0 = sc.thermal_prefactor(params.mass, report.tc, constants) * zeta(1.5)
        mu_c = sc.critical_chemical_potential(params, report.tc, n_c0, constants)
        profile = sc.self_consistent_density(
            params, sc.ThermalState(report.tc, mu_c, constants), radii, constants)
        z_worst = 0.0
        for r, n in zip(profile.radii, profile.density):
            z_worst = max(z_worst, sc.local_fugacity(
                params, sc.ThermalState(report.tc, mu_c, constants), n, r, constants))
        checks.append(_check("semiclassical/fugacity-bound", z_worst <= 1.0 + 1e-12,
                             f"max local fugacity on the critical profile {z_worst:.12f}"))
        monotone = bool(np.all(np.diff(profile.density) <= 0.0))
        checks.append(_check("semiclassical/density-monotone", monotone,
                             "n(r) non-increasing on the critical profile"))
        info = sc.discrepancy_report(params, constants)
    else:
        info = sc.discrepancy_report(params, constants)
    return checks, info


def _scale_checks(scenario: Scenario, constants: PhysicalConstants) -> tuple[list, dict]:
    checks = []
    inp = scenario.healing_input()
    densities, kappas = scale_mod.kappa_sweep(inp, constants=constants)
    monotone = bool(np.all(np.diff(kappas) < 0.0))
    checks.append(_check("scale/monotone-in-density", monotone,
                         "kappa strictly decreasing over the density sweep"))
    info = {
        "kappa_sweep_n_per_m3": [float(x) for x in densities],
        "kappa_sweep_si": [float(x) for x in kappas],
        "critical_density_per_m3":
            scale_mod.kappa_from_healing(inp, constants).critical_density,
        "scattering_length_note": "a_nm interpreted in nanometres",
    }
    if scenario.name == "rb87-paper":
        within = [abs(math.log10(k / 3e39)) <= 1.0 for k in kappas]
        checks.append(_check(
            "scale/kappa-magnitude", any(within),
            f"{sum(within)}/{len(within)} sweep points within one order of 3e39",
        ))
    return checks, info


def run_verification(scenario: Scenario,
                     constants: PhysicalConstants = SI,
                     acc: SeriesAccuracy | None = None) -> VerificationReport:
    """Run every applicable check for the scenario; never raises on failures."""
    acc = acc or SeriesAccuracy()
    checks = []
    checks += _specialfn_checks(acc)
    checks += _units_checks(constants)
    checks += _field_checks()
    info: dict = {}
    if scenario.mass is not None and (scenario.omega0 is not None
                                      or scenario.alpha is not None):
        try:
            gas_checks, gas_info = _gas_checks(scenario.gas_parameters(constants),
                                               constants)
            checks += gas_checks
            info.update(gas_info)
        except BosecritError as exc:
            checks.append(_check("semiclassical/pipeline", False, f"error: {exc}"))
    if scenario.xi is not None:
        try:
            scale_checks, scale_info = _scale_checks(scenario, constants)
            checks += scale_checks
            info.update(scale_info)
        except BosecritError as exc:
            checks.append(_check("scale/pipeline", False, f"error: {exc}"))
    return VerificationReport(checks, info)
