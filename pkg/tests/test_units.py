import math

import pytest

from bosecrit.errors import (InconsistentParameters, NonPhysical,
                             ValidationError)
from bosecrit.field import symmetry_breaking_temperature
from bosecrit.semiclassical import ideal_condensation_temperature
from bosecrit.units import (SI, GasParameters, PhysicalConstants,
                            harmonic_length, validate)

TRAP = dict(omega0=2.0 * math.pi * 100.0)


def test_constants_defaults_are_codata():
    assert SI.c == 299792458.0
    assert SI.kB == 1.380649e-23
    assert SI.hbar == 1.054571817e-34


def test_constants_must_be_positive():
    with pytest.raises(NonPhysical):
        PhysicalConstants(c=0.0)


def test_zero_kappa_gives_ideal_gas():
    p = validate(GasParameters(mass=1e-25, kappa=0.0, scattering_length=1e-9, **TRAP))
    assert p.lam == 0.0
    assert p.g_int == 0.0


def test_omega_equal_c_gives_alpha_half():
    nat = PhysicalConstants.natural()
    p = validate(GasParameters(mass=1.0, lam=0.0, omega0=1.0), nat)
    assert p.alpha == 0.5


def test_lambda_round_trip_through_kappa():
    kappa, a = 3e39, 5.77e-9
    p = validate(GasParameters(mass=1.443e-25, kappa=kappa, scattering_length=a, **TRAP))
    # frozen from 16 pi hbar^2 c^2 kappa^2 a with CODATA constants
    assert p.lam == pytest.approx(2.60904701659116e21, rel=1e-12)
    # re-invert lam to recover kappa
    q = validate(GasParameters(mass=1.443e-25, lam=p.lam, scattering_length=a, **TRAP))
    assert q.kappa == pytest.approx(kappa, rel=1e-12)
    r = validate(GasParameters(mass=1.443e-25, lam=p.lam, kappa=kappa, **TRAP))
    assert r.scattering_length == pytest.approx(a, rel=1e-12)


@pytest.mark.parametrize("kappa,a", [(1e38, 1e-10), (3e39, 5.77e-9), (7.7e40, 3.3e-8)])
def test_round_trip_all_positive_inputs(kappa, a):
    p = validate(GasParameters(mass=1.443e-25, kappa=kappa, scattering_length=a, **TRAP))
    q = validate(GasParameters(mass=1.443e-25, lam=p.lam, scattering_length=a,
                               alpha=p.alpha))
    assert q.kappa == pytest.approx(kappa, rel=1e-12)
    assert q.omega0 == pytest.approx(p.omega0, rel=1e-12)


def test_alpha_omega_round_trip():
    p = validate(GasParameters(mass=1e-25, lam=0.0, alpha=1.7e-12))
    q = validate(GasParameters(mass=1e-25, lam=0.0, omega0=p.omega0))
    assert q.alpha == pytest.approx(1.7e-12, rel=1e-12)


def test_inconsistent_pair_rejected():
    with pytest.raises(InconsistentParameters):
        validate(GasParameters(mass=1e-25, lam=1.0, kappa=3e39,
                               scattering_length=5.77e-9, **TRAP))
    with pytest.raises(InconsistentParameters):
        validate(GasParameters(mass=1e-25, lam=0.0, kappa=3e39,
                               scattering_length=5.77e-9, **TRAP))
    with pytest.raises(InconsistentParameters):
        validate(GasParameters(mass=1e-25, alpha=1.0, omega0=1.0, lam=0.0,
                               scattering_length=0.0))


def test_positive_lambda_alone_is_underdetermined():
    with pytest.raises(InconsistentParameters):
        validate(GasParameters(mass=1e-25, lam=2.0, **TRAP))


def test_positivity_violations():
    with pytest.raises(NonPhysical):
        validate(GasParameters(mass=-1.0, lam=0.0, **TRAP))
    with pytest.raises(NonPhysical):
        validate(GasParameters(mass=1e-25, lam=0.0, particle_number=0.5, **TRAP))
    with pytest.raises(NonPhysical):
        validate(GasParameters(mass=1e-25, lam=-1.0, **TRAP))
    with pytest.raises(NonPhysical):
        validate(GasParameters(mass=1e-25, lam=0.0, alpha=-1.0))


def test_missing_trap_rejected():
    with pytest.raises(ValidationError):
        validate(GasParameters(mass=1e-25, lam=0.0))


def test_harmonic_length_identity_cases():
    nat = PhysicalConstants.natural()
    p = validate(GasParameters(mass=1.0, lam=0.0, omega0=1.0), nat)
    assert harmonic_length(p, nat) == 1.0
    p4 = validate(GasParameters(mass=4.0, lam=0.0, omega0=1.0), nat)
    assert harmonic_length(p4, nat) == 0.5


def test_harmonic_length_rb87():
    p = validate(GasParameters(mass=1.443e-25, lam=0.0, **TRAP))
    a_ho = harmonic_length(p)
    assert a_ho == pytest.approx(math.sqrt(SI.hbar / (1.443e-25 * TRAP["omega0"])),
                                 rel=1e-15)
    assert a_ho == pytest.approx(1.08e-6, rel=5e-3)


def _natural_rescaling(params_si, energy_unit):
    """Map SI parameters into the natural-unit system with energy unit E0."""
    c, hbar, kb = SI.c, SI.hbar, SI.kB
    length = hbar * c / energy_unit
    time = hbar / energy_unit
    return GasParameters(
        mass=params_si.mass * c ** 2 / energy_unit,
        kappa=params_si.kappa * energy_unit * length ** 1.5,
        scattering_length=params_si.scattering_length / length,
        omega0=params_si.omega0 * time,
        particle_number=params_si.particle_number,
    )


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_si_and_natural_units_related_by_rescaling(seed):
    import random

    rng = random.Random(seed)
    p_si = validate(GasParameters(
        mass=1.443e-25 * rng.uniform(0.3, 3.0),
        kappa=3e39 * rng.uniform(0.1, 10.0),
        scattering_length=5e-9 * rng.uniform(0.2, 5.0),
        omega0=2.0 * math.pi * rng.uniform(20.0, 500.0),
        particle_number=rng.uniform(1e4, 1e7),
    ))
    energy_unit = SI.kB * rng.uniform(1e-7, 1e-5)  # an arbitrary energy scale
    nat = PhysicalConstants.natural()
    p_nat = validate(_natural_rescaling(p_si, energy_unit), nat)

    assert p_nat.lam == pytest.approx(p_si.lam, rel=1e-10)

    # temperatures map as T_nat = kB T_SI / E0
    t_sb_si = symmetry_breaking_temperature(p_si, 0.2)
    t_sb_nat = symmetry_breaking_temperature(p_nat, 0.2, nat)
    assert t_sb_nat == pytest.approx(SI.kB * t_sb_si / energy_unit, rel=1e-10)

    t0_si = ideal_condensation_temperature(p_si, "derived-consistent")
    t0_nat = ideal_condensation_temperature(p_nat, "derived-consistent", nat)
    assert t0_nat == pytest.approx(SI.kB * t0_si / energy_unit, rel=1e-10)

    t0p_si = ideal_condensation_temperature(p_si, "paper-verbatim")
    t0p_nat = ideal_condensation_temperature(p_nat, "paper-verbatim", nat)
    assert t0p_nat == pytest.approx(SI.kB * t0p_si / energy_unit, rel=1e-10)
