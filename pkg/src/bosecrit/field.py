"""One-loop thermal potential of the self-interacting scalar field.

The double-well potential acquires a temperature-dependent quadratic term in
a thermal bath; above the symmetry-breaking temperature the origin is the
single minimum, below it two degenerate minima appear at +/-Phi_min and the
field's sign symmetry is spontaneously broken.  Field amplitudes carry units
of energy (J), consistent with ``kappa**2 |Phi|**2`` being a number density.

The quartic (T^4) vacuum term only offsets the potential and never moves the
minima in Phi, so it is dropped by default and kept behind a flag.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import IdealGasDivergence, NonPhysical
from .units import SI, GasParameters, PhysicalConstants


@dataclass(frozen=True)
class FieldPotentialInput:
    """Evaluation context for the total potential.

    ``external_phi`` is the dimensionless external potential at the point of
    interest (``alpha * r**2`` for the harmonic trap).
    """

    params: GasParameters
    temperature: float
    external_phi: float = 0.0
    include_T4: bool = False

    def __post_init__(self):
        if self.temperature < 0.0:
            raise NonPhysical(f"temperature must be >= 0, got {self.temperature}")
        if self.external_phi < 0.0:
            raise NonPhysical(f"external potential must be >= 0, got {self.external_phi}")


@dataclass(frozen=True)
class SymmetryReport:
    """Symmetry-breaking temperature and the minima of the potential."""

    t_sb: float            # K
    phi_min_plus: float    # J
    phi_min_minus: float   # J
    broken: bool           # True iff T < t_sb (radicand positive)


def potential_value(inp: FieldPotentialInput, phi_field: float,
                    constants: PhysicalConstants = SI) -> float:
    """Total potential at field amplitude ``phi_field`` (even in Phi)."""
    c, hbar, kB = constants.c, constants.hbar, constants.kB
    m = inp.params.mass
    lam = inp.params.lam
    kt = kB * inp.temperature
    phi2 = phi_field * phi_field
    value = (
        -0.5 * (m * c / hbar) ** 2 * phi2
        + 0.25 * lam / (hbar * c) ** 2 * phi2 * phi2
        + 0.125 * lam / (hbar * c) ** 2 * kt * kt * phi2
        - (m * c / hbar) ** 2 * inp.external_phi * phi2
    )
    if inp.include_T4:
        value -= math.pi ** 2 / 90.0 * kt ** 4 / (hbar * c) ** 2
    return value


def symmetry_breaking_temperature(params: GasParameters, external_phi: float = 0.0,
                                  constants: PhysicalConstants = SI) -> float:
    """Temperature at which the origin turns from minimum into maximum.

    kB T_sb = (2 m c^2 / sqrt(lam)) (1 + 2 phi)^(1/2).  The zero-coupling
    limit diverges; it is reported as ``inf`` with an
    :class:`IdealGasDivergence` warning rather than an exception.
    """
    if params.lam == 0.0:
        warnings.warn(
            "symmetry-breaking temperature diverges in the zero-coupling limit",
            IdealGasDivergence,
            stacklevel=2,
        )
        return math.inf
    mc2 = params.mass * constants.c ** 2
    return 2.0 * mc2 / (constants.kB * math.sqrt(params.lam)) \
        * math.sqrt(1.0 + 2.0 * external_phi)


def minima(params: GasParameters, temperature: float, external_phi: float = 0.0,
           constants: PhysicalConstants = SI) -> SymmetryReport:
    """Locations of the potential minima at the given temperature.

    Phi_min = +/- (m c^2 / sqrt(lam)) (1 + 2 phi - lam (kB T / 2 m c^2)^2)^(1/2)
    while the radicand is positive; otherwise both minima collapse to zero
    and the symmetry is restored.
    """
    if not params.lam > 0.0:
        raise NonPhysical("minima are defined only for positive coupling")
    mc2 = params.mass * constants.c ** 2
    t_sb = symmetry_breaking_temperature(params, external_phi, constants)
    radicand = (
        1.0 + 2.0 * external_phi
        - params.lam * (constants.kB * temperature / (2.0 * mc2)) ** 2
    )
    if radicand > 0.0:
        location = mc2 / math.sqrt(params.lam) * math.sqrt(radicand)
        return SymmetryReport(t_sb, location, -location, True)
    return SymmetryReport(t_sb, 0.0, 0.0, False)


def thermal_term_identity(params: GasParameters, temperature: float,
                          constants: PhysicalConstants = SI) -> float:
    """Relative residual of the two forms of the thermal term.

    lam kB^2 T^2 / (8 m c^2)  must equal  (m c^2 / 2) (T / T_sb)^2
    identically once T_sb is substituted; the residual is returned relative
    to the common magnitude (zero when both forms vanish at T = 0).
    """
    if not params.lam > 0.0:
        raise NonPhysical("identity requires positive coupling")
    mc2 = params.mass * constants.c ** 2
    direct = params.lam * (constants.kB * temperature) ** 2 / (8.0 * mc2)
    t_sb = symmetry_breaking_temperature(params, 0.0, constants)
    via_tsb = 0.5 * mc2 * (temperature / t_sb) ** 2
    scale = max(abs(direct), abs(via_tsb))
    if scale == 0.0:
        return 0.0
    return abs(direct - via_tsb) / scale
