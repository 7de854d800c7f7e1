"""Line-oriented ``key = value`` scenario files and the built-in scenarios.

The format is deliberately flat so it can be documented bit-exactly:
``#`` starts a comment, keys carry their unit as a suffix and are converted
to SI on parsing, unknown keys are rejected with the offending line number.

Documented keys::

    name            identifier (string)
    mode            paper-verbatim | derived-consistent
    mass_kg         particle mass, kg
    lambda          self-coupling (dimensionless)
    kappa_si        field-density scale, J^-1 m^-3/2
    a_nm            s-wave scattering length, nanometres
    alpha_per_m2    trap stiffness, m^-2
    omega0_hz       trap frequency f in Hz (omega0 = 2 pi f)
    N               particle number
    n_per_m3        central density, m^-3
    xi_um           healing length, micrometres
    tc_nk           condensation temperature, nanokelvin
    temperature_nk  evaluation temperature, nanokelvin
    sweep_key       name of one numeric key above to sweep
    sweep_start     sweep start (in sweep_key's unit)
    sweep_stop      sweep stop (in sweep_key's unit)
    sweep_points    number of sweep points
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, NamedTuple

import numpy as np

from .errors import ParseError, ValidationError
from .scale import HealingInput
from .units import SI, GasParameters, PhysicalConstants, validate

MODES = ("paper-verbatim", "derived-consistent")


class SweepSpec(NamedTuple):
    key: str        # scenario key being swept
    start: float    # in the key's file unit
    stop: float
    points: int


@dataclass(frozen=True)
class Scenario:
    """One parsed scenario; every physical field is SI or ``None``."""

    name: str = "unnamed"
    mode: str = "derived-consistent"
    mass: float | None = None
    lam: float | None = None
    kappa: float | None = None
    scattering_length: float | None = None
    alpha: float | None = None
    omega0: float | None = None
    particle_number: float | None = None
    n_density: float | None = None
    xi: float | None = None
    tc: float | None = None
    temperature: float | None = None
    sweep: SweepSpec | None = None

    def gas_parameters(self, constants: PhysicalConstants = SI) -> GasParameters:
        """Validated gas parameters; raises ValidationError on missing blocks."""
        if self.mass is None:
            raise ValidationError(f"scenario {self.name!r} does not define mass_kg")
        return validate(
            GasParameters(
                mass=self.mass,
                lam=self.lam,
                kappa=self.kappa,
                scattering_length=self.scattering_length,
                alpha=self.alpha,
                omega0=self.omega0,
                particle_number=self.particle_number
                if self.particle_number is not None else 1.0,
            ),
            constants,
        )

    def healing_input(self) -> HealingInput:
        missing = [key for key, value in (
            ("xi_um", self.xi), ("a_nm", self.scattering_length),
            ("n_per_m3", self.n_density), ("tc_nk", self.tc),
        ) if value is None]
        if missing:
            raise ValidationError(
                f"scenario {self.name!r} lacks {', '.join(missing)} for the scale estimate"
            )
        return HealingInput(
            healing_length=self.xi,
            scattering_length=self.scattering_length,
            central_density=self.n_density,
            tc=self.tc,
            mass=self.mass,
        )


def _identity(v: float) -> float:
    return v


# key -> (scenario attribute, file-unit -> SI converter)
_NUMERIC_KEYS: dict[str, tuple[str, Callable[[float], float]]] = {
    "mass_kg": ("mass", _identity),
    "lambda": ("lam", _identity),
    "kappa_si": ("kappa", _identity),
    "a_nm": ("scattering_length", lambda v: v * 1e-9),
    "alpha_per_m2": ("alpha", _identity),
    "omega0_hz": ("omega0", lambda v: 2.0 * math.pi * v),
    "N": ("particle_number", _identity),
    "n_per_m3": ("n_density", _identity),
    "xi_um": ("xi", lambda v: v * 1e-6),
    "tc_nk": ("tc", lambda v: v * 1e-9),
    "temperature_nk": ("temperature", lambda v: v * 1e-9),
}
_SWEEPABLE = tuple(k for k in _NUMERIC_KEYS if k != "temperature_nk")


def parse_scenario(text: str) -> Scenario:
    """Parse scenario file contents; raises ParseError with the line number."""
    fields: dict[str, object] = {}
    raw: dict[str, float] = {}
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ParseError(f"line {lineno}: expected 'key = value', got {body!r}",
                             line=lineno)
        key, _, value = body.partition("=")
        key, value = key.strip(), value.strip()
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate key {key!r}", line=lineno)
        seen.add(key)
        if key == "name":
            fields["name"] = value
        elif key == "mode":
            if value not in MODES:
                raise ParseError(f"line {lineno}: mode must be one of {MODES}",
                                 line=lineno)
            fields["mode"] = value
        elif key == "sweep_key":
            if value not in _SWEEPABLE:
                raise ParseError(
                    f"line {lineno}: sweep_key must name a sweepable parameter "
                    f"({', '.join(_SWEEPABLE)})", line=lineno)
            raw["sweep_key"] = value
        elif key in ("sweep_start", "sweep_stop", "sweep_points"):
            try:
                raw[key] = float(value)
            except ValueError:
                raise ParseError(f"line {lineno}: {key} must be numeric, got {value!r}",
                                 line=lineno) from None
        elif key in _NUMERIC_KEYS:
            attr, convert = _NUMERIC_KEYS[key]
            try:
                fields[attr] = convert(float(value))
            except ValueError:
                raise ParseError(f"line {lineno}: {key} must be numeric, got {value!r}",
                                 line=lineno) from None
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}", line=lineno)

    has_sweep = [k for k in ("sweep_key", "sweep_start", "sweep_stop", "sweep_points")
                 if k in raw]
    if has_sweep:
        missing = {"sweep_key", "sweep_start", "sweep_stop", "sweep_points"} - set(has_sweep)
        if missing:
            raise ParseError(f"incomplete sweep: missing {', '.join(sorted(missing))}")
        points = int(raw["sweep_points"])
        if points < 2 or points != raw["sweep_points"]:
            raise ParseError("sweep_points must be an integer >= 2")
        fields["sweep"] = SweepSpec(str(raw["sweep_key"]), raw["sweep_start"],
                                    raw["sweep_stop"], points)
    return Scenario(**fields)


def sweep_scenarios(scenario: Scenario) -> list[tuple[float, Scenario]]:
    """Expand a sweep into (value-in-file-units, scenario) pairs, in order."""
    if scenario.sweep is None:
        raise ValidationError(f"scenario {scenario.name!r} has no sweep axis")
    spec = scenario.sweep
    attr, convert = _NUMERIC_KEYS[spec.key]
    values = np.geomspace(spec.start, spec.stop, spec.points) \
        if spec.start > 0 and spec.stop > 0 else np.linspace(spec.start, spec.stop, spec.points)
    return [(float(v), replace(scenario, sweep=None, **{attr: convert(float(v))}))
            for v in values]


#: Built-in scenarios usable by name in place of a file path.
BUILTIN_SCENARIOS: dict[str, str] = {
    "ideal-gas": (
        "name = ideal-gas\n"
        "mass_kg = 1.443e-25\n"
        "omega0_hz = 100\n"
        "N = 1000000\n"
        "a_nm = 0\n"
    ),
    "rb87-paper": (
        "name = rb87-paper\n"
        "mass_kg = 1.443e-25\n"
        "a_nm = 5.77\n"
        "xi_um = 0.4\n"
        "n_per_m3 = 1e19\n"
        "tc_nk = 200\n"
    ),
}


def load_scenario(path_or_name: str) -> Scenario:
    """Read a scenario file, or fall back to a built-in scenario name."""
    try:
        with open(path_or_name, "r", encoding="utf-8") as handle:
            return parse_scenario(handle.read())
    except OSError:
        if path_or_name in BUILTIN_SCENARIOS:
            return parse_scenario(BUILTIN_SCENARIOS[path_or_name])
        raise ParseError(
            f"{path_or_name!r} is neither a readable file nor a built-in scenario "
            f"({', '.join(sorted(BUILTIN_SCENARIOS))})"
        ) from None
