"""Command-line front end.

Usage::

    bosecrit <command> --scenario <path-or-builtin>
             [--mode paper-verbatim|derived-consistent] [--out table.csv]

Commands: ``tsb`` (symmetry-breaking temperature), ``t0`` (ideal
condensation temperature, both prefactor modes), ``shift`` (analytic shift
and its constant), ``tc-numeric`` (self-consistent oracle), ``kappa``
(scale estimate with a density sweep), ``density`` (radial profile as CSV),
``verify`` (full invariant suite plus the discrepancy report).

Exit codes: 0 success, 1 validation/parse error, 2 convergence failure,
3 invariant-suite failure.  ``BOSECRIT_TOL`` overrides the relative series
accuracy target (a float in (0, 1e-3)).

Table files are CSV with a fixed column order and every number printed with
17 significant digits, so identical scenarios produce byte-identical files.
Report lines carry short bracketed formula tags ([TCS0], [CTI], ...) for
cross-referencing between commands.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from . import scale as scale_mod
from . import semiclassical as sc
from .errors import (BosecritError, ConvergenceError, QuadratureError,
                     ValidationError)
from .field import symmetry_breaking_temperature
from .scenario import (MODES, Scenario, load_scenario, sweep_scenarios)
from .specialfn import SeriesAccuracy, zeta
from .units import SI
from .verify import run_verification

COMMANDS = ("tsb", "t0", "shift", "tc-numeric", "kappa", "density", "verify")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CONVERGENCE = 2
EXIT_VERIFY_FAILED = 3


def _fmt(value) -> str:
    """One CSV cell: 17 significant digits for floats, bools as 0/1."""
    if isinstance(value, bool) or isinstance(value, np.bool_):
        return "1" if value else "0"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _write_table(path: str, header: list[str], rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(",".join(header) + "\n")
        for row in rows:
            handle.write(",".join(_fmt(row[h]) for h in header) + "\n")


def _sweep_rows(scenario: Scenario, one) -> list[dict]:
    """Evaluate a per-point row over the sweep axis, concurrently, in order."""
    points = sweep_scenarios(scenario)
    key = scenario.sweep.key
    with ThreadPoolExecutor(max_workers=min(8, len(points))) as pool:
        rows = list(pool.map(lambda pair: dict(one(pair[1]), **{key: pair[0]}),
                             points))
    return rows


def _cmd_tsb(scenario: Scenario, acc: SeriesAccuracy):
    def one(scn: Scenario) -> dict:
        params = scn.gas_parameters()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            t_sb = symmetry_breaking_temperature(params)
        return {"name": scn.name, "lambda": params.lam, "t_sb_k": t_sb}

    if scenario.sweep is not None:
        key = scenario.sweep.key
        rows = _sweep_rows(scenario, one)
        header = ["name", key, "lambda", "t_sb_k"]
        lines = [f"T_c^SB [TCS0] swept over {key}: {len(rows)} points"]
        return lines, header, rows
    row = one(scenario)
    if math.isinf(row["t_sb_k"]):
        lines = ["warning: zero coupling, T_c^SB [TCS] -> infinity (ideal-gas limit)",
                 "T_c^SB [TCS0] = inf K"]
    else:
        lines = [f"T_c^SB [TCS0] at the trap centre = {row['t_sb_k']:.12g} K"]
    return lines, ["name", "lambda", "t_sb_k"], [row]


def _cmd_t0(scenario: Scenario, acc: SeriesAccuracy):
    params = scenario.gas_parameters()
    rows, lines = [], []
    for mode in MODES:
        t0 = sc.ideal_condensation_temperature(params, mode)
        rows.append({"name": scenario.name, "mode": mode,
                     "n": params.particle_number, "t0_k": t0})
        lines.append(f"T_0 [CTI] ({mode}) = {t0:.12g} K")
    lines.append("note: the two prefactors differ by 2^(1/3) in T_0; "
                 "derived-consistent recovers the harmonic-oscillator closure")
    return lines, ["name", "mode", "n", "t0_k"], rows


def _cmd_shift(scenario: Scenario, acc: SeriesAccuracy):
    def one(scn: Scenario) -> dict:
        params = scn.gas_parameters()
        theta, info = sc.theta_info(acc)
        return {"name": scn.name, "theta": theta,
                "shift_analytic": sc.condensation_shift(params, acc=acc),
                "g_sum_truncation": info.truncation}

    if scenario.sweep is not None:
        key = scenario.sweep.key
        rows = _sweep_rows(scenario, one)
        header = ["name", key, "theta", "shift_analytic", "g_sum_truncation"]
        return [f"shift [SHIFT] swept over {key}: {len(rows)} points"], header, rows
    row = one(scenario)
    lines = [
        f"Theta [CTE] = {row['theta']:.12g} "
        f"(double sum truncated at diagonal {row['g_sum_truncation']})",
        f"analytic shift [SHIFT] = {row['shift_analytic']:.12g}",
    ]
    return lines, ["name", "theta", "shift_analytic", "g_sum_truncation"], [row]


def _cmd_tc_numeric(scenario: Scenario, acc: SeriesAccuracy):
    params = scenario.gas_parameters()
    t0 = sc.ideal_condensation_temperature(params, "derived-consistent")
    tc = sc.numeric_condensation_temperature(params) if params.lam > 0.0 else t0
    shift = (tc - t0) / t0
    lines = [
        f"T_c oracle on [DE1]+[F1]+[NC]+[PQ] = {tc:.12g} K",
        f"T_0 [CTI] (derived-consistent) = {t0:.12g} K",
        f"numeric shift (T_c - T_0)/T_0 = {shift:.12g}",
    ]
    rows = [{"name": scenario.name, "tc_k": tc, "t0_k": t0, "shift_numeric": shift}]
    return lines, ["name", "tc_k", "t0_k", "shift_numeric"], rows


def _cmd_kappa(scenario: Scenario, acc: SeriesAccuracy):
    inp = scenario.healing_input()
    base = scale_mod.kappa_from_healing(inp)
    if scenario.sweep is not None and scenario.sweep.key == "n_per_m3":
        spec = scenario.sweep
        densities = np.geomspace(spec.start, spec.stop, spec.points)
    else:
        densities = None
    densities, kappas = scale_mod.kappa_sweep(inp, densities)
    rows = [{"name": scenario.name, "n_per_m3": n, "kappa_si": k}
            for n, k in zip(densities, kappas)]
    lines = [
        f"kappa [kappa] at n = {inp.central_density:.12g} m^-3: "
        f"{base.kappa:.12g} J^-1 m^-3/2",
        f"critical density n* = {base.critical_density:.12g} m^-3 "
        "(radicand vanishes there)",
        "note: scattering length a_nm interpreted in nanometres; the "
        "centimetre reading leaves no positive radicand anywhere in the sweep",
        f"swept n over [{densities[0]:.12g}, {densities[-1]:.12g}] m^-3, "
        f"{len(rows)} radicand-positive points",
    ]
    if base.mu is not None:
        lines.insert(1, f"implied chemical potential [HL] mu = {base.mu:.12g} J")
    return lines, ["name", "n_per_m3", "kappa_si"], rows


def _cmd_density(scenario: Scenario, acc: SeriesAccuracy):
    params = scenario.gas_parameters()
    if scenario.temperature is not None:
        temperature = scenario.temperature
        mu = sc.chemical_potential_from_number(params, temperature)
        origin = "temperature_nk from the scenario, mu from the particle number"
    else:
        if params.lam > 0.0:
            temperature = sc.numeric_condensation_temperature(params)
        else:
            temperature = sc.ideal_condensation_temperature(params, "derived-consistent")
        n_c0 = sc.thermal_prefactor(params.mass, temperature) * zeta(1.5)
        mu = sc.critical_chemical_potential(params, temperature, n_c0)
        origin = "critical point: T = T_c, mu = mu_c [PQ]"
    state = sc.ThermalState(temperature, mu)
    gb = state.beta * params.mass * SI.c ** 2 * params.alpha
    radii = np.linspace(0.0, math.sqrt(45.0 / gb), 256)
    profile = sc.self_consistent_density(params, state, radii)
    rows = [{"r_m": r, "n_per_m3": n, "converged": bool(c)}
            for r, n, c in zip(profile.radii, profile.density, profile.converged)]
    lines = [
        f"density profile [DE1] at T = {temperature:.12g} K, mu = {mu:.12g} J ({origin})",
        f"central density n(0) = {profile.density[0]:.12g} m^-3",
        f"{len(rows)} grid points out to r = {radii[-1]:.12g} m",
    ]
    return lines, ["r_m", "n_per_m3", "converged"], rows


def _cmd_verify(scenario: Scenario, acc: SeriesAccuracy):
    report = run_verification(scenario, acc=acc)
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{status} {check.name}: {check.detail}")
    lines.append("-- discrepancy report --")
    for key in sorted(report.info):
        value = report.info[key]
        if isinstance(value, list):
            value = "[" + ", ".join(f"{v:.6g}" for v in value) + "]"
        elif isinstance(value, float):
            value = f"{value:.12g}"
        lines.append(f"{key} = {value}")
    failed = sum(1 for c in report.checks if not c.passed)
    lines.append(f"{len(report.checks) - failed}/{len(report.checks)} checks passed")
    rows = [{"check": c.name, "status": "pass" if c.passed else "fail",
             "detail": c.detail.replace(",", ";")} for c in report.checks]
    return lines, ["check", "status", "detail"], rows, report.all_passed


def _series_accuracy_from_env() -> SeriesAccuracy:
    raw = os.environ.get("BOSECRIT_TOL")
    if raw is None:
        return SeriesAccuracy()
    try:
        tol = float(raw)
    except ValueError:
        raise ValidationError(f"BOSECRIT_TOL must be a float, got {raw!r}") from None
    if not 0.0 < tol < 1e-3:
        raise ValidationError(f"BOSECRIT_TOL must lie in (0, 1e-3), got {tol}")
    return SeriesAccuracy(target_rel_error=tol)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bosecrit",
        description="Critical temperatures of a trapped, weakly interacting "
                    "condensing gas and of the underlying self-interacting field.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--scenario", required=True,
                        help="scenario file path, or a built-in name "
                             "(ideal-gas, rb87-paper)")
    parser.add_argument("--mode", choices=list(MODES), default=None,
                        help="override the scenario's formula mode")
    parser.add_argument("--out", default=None, help="write the table file (CSV)")
    args = parser.parse_args(argv)

    try:
        acc = _series_accuracy_from_env()
        scenario = load_scenario(args.scenario)
        if args.mode is not None:
            scenario = replace(scenario, mode=args.mode)
        all_passed = True
        if args.command == "verify":
            lines, header, rows, all_passed = _cmd_verify(scenario, acc)
        else:
            handler = {
                "tsb": _cmd_tsb,
                "t0": _cmd_t0,
                "shift": _cmd_shift,
                "tc-numeric": _cmd_tc_numeric,
                "kappa": _cmd_kappa,
                "density": _cmd_density,
            }[args.command]
            lines, header, rows = handler(scenario, acc)
        for line in lines:
            print(line)
        if args.out:
            _write_table(args.out, header, rows)
            print(f"table written to {args.out}")
        if not all_passed:
            return EXIT_VERIFY_FAILED
        return EXIT_OK
    except (ConvergenceError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except BosecritError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
