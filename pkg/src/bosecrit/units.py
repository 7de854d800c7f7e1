"""Physical constants, gas parameters and the internal unit system.

Everything downstream computes in SI. Natural units (c = hbar = kB = 1) are
supported by overriding :class:`PhysicalConstants`; results in the two systems
are related by exact dimensional rescaling.

Conventions fixed here and used everywhere else:

* field amplitude carries units of energy (J), so that ``kappa**2 * |Phi|**2``
  is a number density in m^-3 and ``kappa`` has units J^-1 m^-3/2;
* the self-coupling ``lam`` is dimensionless and tied to the s-wave
  scattering length by ``lam = 16 pi hbar^2 c^2 kappa^2 a``;
* the trap stiffness ``alpha`` (m^-2) and angular frequency ``omega0``
  (rad/s) are tied by ``alpha = (omega0 / c)^2 / 2`` so the dimensionless
  external potential is ``phi = alpha r^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import InconsistentParameters, NonPhysical, ValidationError

#: Relative tolerance for the two redundant-parameter consistency checks.
CONSISTENCY_RTOL = 1e-12


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in SI (CODATA 2018 recommended values)."""

    c: float = 299792458.0          # speed of light, m/s (exact)
    hbar: float = 1.054571817e-34   # reduced Planck constant, J s
    kB: float = 1.380649e-23        # Boltzmann constant, J/K (exact)

    def __post_init__(self):
        if not (self.c > 0.0 and self.hbar > 0.0 and self.kB > 0.0):
            raise NonPhysical("c, hbar and kB must all be strictly positive")

    @classmethod
    def natural(cls) -> "PhysicalConstants":
        """Constants for natural-unit evaluation, c = hbar = kB = 1."""
        return cls(c=1.0, hbar=1.0, kB=1.0)


#: Default SI constants shared by every module.
SI = PhysicalConstants()


@dataclass(frozen=True)
class GasParameters:
    """Parameters of the trapped, self-interacting gas.

    Any of the redundant members may be left ``None`` and filled by
    :func:`validate`; ``g_int`` (= lam / kappa^2, units J^2 m^3) is always
    derived, never supplied.
    """

    mass: float                              # particle mass m, kg
    lam: float | None = None                 # self-coupling, dimensionless
    kappa: float | None = None               # field-density scale, J^-1 m^-3/2
    scattering_length: float | None = None   # s-wave scattering length a, m
    alpha: float | None = None               # trap stiffness, m^-2
    omega0: float | None = None              # trap angular frequency, rad/s
    particle_number: float = 1.0             # N
    g_int: float = 0.0                       # lam * kappa^-2, J^2 m^3 (derived)

    @property
    def is_ideal(self) -> bool:
        return self.lam == 0.0


def _close(x: float, y: float, rtol: float = CONSISTENCY_RTOL) -> bool:
    return abs(x - y) <= rtol * max(abs(x), abs(y))


def validate(params: GasParameters, constants: PhysicalConstants = SI) -> GasParameters:
    """Fill the redundant members of ``params`` and check all invariants.

    The coupling block {lam, (kappa, a)} and the trap block {alpha, omega0}
    are each completed from whichever members were supplied, enforcing

        lam = 16 pi hbar^2 c^2 kappa^2 a      and      alpha = (omega0/c)^2 / 2

    to within ``CONSISTENCY_RTOL`` when both sides of a pair are given.

    Raises
    ------
    NonPhysical
        A positivity invariant fails (mass, N, alpha, ...).
    InconsistentParameters
        Both members of a redundant pair are supplied and disagree, or the
        coupling block is underdetermined (lam > 0 with neither kappa nor a).
    ValidationError
        A required block is entirely missing.
    """
    c, hbar = constants.c, constants.hbar
    if not params.mass > 0.0:
        raise NonPhysical(f"mass must be positive, got {params.mass}")
    if not params.particle_number >= 1.0:
        raise NonPhysical(f"particle number must be >= 1, got {params.particle_number}")

    lam, kappa, a = params.lam, params.kappa, params.scattering_length
    if lam is None and (kappa is None or a is None):
        # a single vanishing member already forces lam = 0 for any partner
        if a == 0.0 or kappa == 0.0:
            lam = 0.0
        else:
            raise ValidationError("supply lam, or kappa together with scattering_length")
    if lam is not None and lam < 0.0:
        raise NonPhysical(f"lam must be >= 0, got {lam}")
    if kappa is not None and kappa < 0.0:
        raise NonPhysical(f"kappa must be >= 0, got {kappa}")
    if a is not None and a < 0.0:
        raise NonPhysical(f"scattering_length must be >= 0, got {a}")

    cpl = 16.0 * math.pi * hbar**2 * c**2  # lam = cpl * kappa^2 * a

    if kappa is not None and a is not None:
        lam_from_pair = cpl * kappa**2 * a
        if lam is None:
            lam = lam_from_pair
        elif not _close(lam, lam_from_pair):
            raise InconsistentParameters(
                f"lam={lam} disagrees with 16 pi hbar^2 c^2 kappa^2 a = {lam_from_pair}"
            )
    elif lam is not None:
        if lam == 0.0:
            kappa = 0.0 if kappa is None else kappa
            a = 0.0 if a is None else a
            if cpl * kappa**2 * a != 0.0:
                raise InconsistentParameters(
                    "lam = 0 requires kappa = 0 or scattering_length = 0"
                )
        elif kappa is not None:
            if kappa == 0.0:
                raise InconsistentParameters("lam > 0 with kappa = 0 has no solution for a")
            a = lam / (cpl * kappa**2)
        elif a is not None:
            if a == 0.0:
                raise InconsistentParameters("lam > 0 with a = 0 has no solution for kappa")
            kappa = math.sqrt(lam / (cpl * a))
        else:
            raise InconsistentParameters(
                "lam > 0 alone is underdetermined; supply kappa or scattering_length"
            )

    alpha, omega0 = params.alpha, params.omega0
    if alpha is None and omega0 is None:
        raise ValidationError("supply alpha or omega0 for the trap")
    if omega0 is not None:
        if not omega0 > 0.0:
            raise NonPhysical(f"omega0 must be positive, got {omega0}")
        alpha_from_omega = 0.5 * (omega0 / c) ** 2
        if alpha is None:
            alpha = alpha_from_omega
        elif not _close(alpha, alpha_from_omega):
            raise InconsistentParameters(
                f"alpha={alpha} disagrees with (omega0/c)^2 / 2 = {alpha_from_omega}"
            )
    else:
        if not alpha > 0.0:
            raise NonPhysical(f"alpha must be positive, got {alpha}")
        omega0 = c * math.sqrt(2.0 * alpha)
    if not alpha > 0.0:
        raise NonPhysical(f"alpha must be positive, got {alpha}")

    # lam * kappa^-2 written through a so the kappa-dependence cancels exactly
    # in every downstream density formula; zero coupling stays zero.
    g_int = cpl * a if lam > 0.0 else 0.0

    return replace(
        params,
        lam=lam,
        kappa=kappa,
        scattering_length=a,
        alpha=alpha,
        omega0=omega0,
        g_int=g_int,
    )


def harmonic_length(params: GasParameters, constants: PhysicalConstants = SI) -> float:
    """Characteristic oscillator length (hbar / (m omega0))^(1/2), in metres."""
    if params.omega0 is None or not params.omega0 > 0.0:
        raise NonPhysical("harmonic_length needs omega0 > 0; validate the parameters first")
    if not params.mass > 0.0:
        raise NonPhysical("harmonic_length needs mass > 0")
    return math.sqrt(constants.hbar / (params.mass * params.omega0))
