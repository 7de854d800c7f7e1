"""Estimate of the field-density scale kappa from the healing length.

Below the condensation temperature the chemical potential at the trap centre
sets the healing length through hbar^2 / (2 m xi^2) = mu; combined with the
critical chemical potential this inverts to

    kappa = sqrt( (xi^-2 - 16 pi a n) / (8 pi a (kB Tc)^2) )   [J^-1 m^-3/2]

which is real only while the central density stays below
n* = xi^-2 / (16 pi a).

The shipped ``rb87-paper`` scenario uses xi = 0.4 um, a = 5.77 nm,
Tc = 200 nK and sweeps n over 1e19..1e21 m^-3; only the low end of that
density range keeps the radicand positive.  The scattering length is
interpreted in nanometres (the centimetre-scale reading would make the
radicand negative for every density in the range and put kappa nowhere near
its expected 1e39 order of magnitude).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NegativeRadicand, NonPhysical
from .units import SI, PhysicalConstants


@dataclass(frozen=True)
class HealingInput:
    """Inputs of the scale estimate; mass is optional and only feeds the
    implied-chemical-potential diagnostic."""

    healing_length: float        # xi, m
    scattering_length: float     # a, m
    central_density: float       # n, m^-3
    tc: float                    # condensation temperature, K
    mass: float | None = None    # kg

    def __post_init__(self):
        for name in ("healing_length", "scattering_length", "central_density", "tc"):
            if not getattr(self, name) > 0.0:
                raise NonPhysical(f"{name} must be strictly positive")


class KappaResult(NamedTuple):
    kappa: float                  # J^-1 m^-3/2
    critical_density: float       # n* where the radicand crosses zero, m^-3
    mu: float | None              # implied chemical potential (J), needs mass


#: the rb87-paper scenario values (scattering length read as nanometres)
RB87_PAPER = HealingInput(
    healing_length=0.4e-6,
    scattering_length=5.77e-9,
    central_density=1e19,
    tc=200e-9,
    mass=1.443e-25,
)

#: density range swept by the built-in scenario, m^-3
RB87_DENSITY_RANGE = (1e19, 1e21)


def healing_length_from_mu(mass: float, mu: float,
                           constants: PhysicalConstants = SI) -> float:
    """Healing length xi = hbar / sqrt(2 m mu) for mu > 0."""
    if not mu > 0.0:
        raise DomainError(f"healing length needs mu > 0, got {mu}")
    if not mass > 0.0:
        raise NonPhysical(f"mass must be positive, got {mass}")
    return constants.hbar / math.sqrt(2.0 * mass * mu)


def kappa_from_healing(inp: HealingInput,
                       constants: PhysicalConstants = SI) -> KappaResult:
    """Scale kappa implied by the healing length at the given density.

    Raises ``NegativeRadicand`` (carrying the critical density
    n* = xi^-2 / 16 pi a) once the density term overwhelms xi^-2.
    """
    xi_m2 = inp.healing_length ** -2
    a, n = inp.scattering_length, inp.central_density
    critical = xi_m2 / (16.0 * math.pi * a)
    numerator = xi_m2 - 16.0 * math.pi * a * n
    if numerator < 0.0:
        raise NegativeRadicand(
            f"density {n} m^-3 exceeds the critical n* = {critical:.6g} m^-3",
            critical_density=critical,
        )
    kt = constants.kB * inp.tc
    kappa = math.sqrt(numerator / (8.0 * math.pi * a * kt * kt))
    mu = None
    if inp.mass is not None:
        mu = constants.hbar ** 2 * xi_m2 / (2.0 * inp.mass)
    return KappaResult(kappa, critical, mu)


def kappa_sweep(inp: HealingInput, densities=None, points: int = 12,
                constants: PhysicalConstants = SI):
    """kappa over a density sweep, restricted to the radicand-positive part.

    Returns (densities, kappas) arrays; with no explicit densities the sweep
    is log-spaced over the valid part of the rb87-paper range.
    """
    if densities is None:
        critical = inp.healing_length ** -2 / (16.0 * math.pi * inp.scattering_length)
        low, high = RB87_DENSITY_RANGE
        high = min(high, 0.999 * critical)
        if high <= low:
            raise NegativeRadicand(
                "no density in the sweep range keeps the radicand positive",
                critical_density=critical,
            )
        densities = np.geomspace(low, high, points)
    densities = np.asarray(densities, dtype=float)
    kappas = np.array([
        kappa_from_healing(
            HealingInput(inp.healing_length, inp.scattering_length, float(n),
                         inp.tc, inp.mass),
            constants,
        ).kappa
        for n in densities
    ])
    return densities, kappas
