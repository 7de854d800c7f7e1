import math

import pytest

from bosecrit.units import GasParameters, PhysicalConstants, validate

RB87_MASS = 1.443e-25
TRAP_OMEGA = 2.0 * math.pi * 100.0


@pytest.fixture
def rb87_ideal():
    """Non-interacting Rb-87-like gas, N = 1e6."""
    return validate(GasParameters(mass=RB87_MASS, lam=0.0, omega0=TRAP_OMEGA,
                                  particle_number=1e6))


@pytest.fixture
def rb87_coupled():
    """Weakly interacting Rb-87-like gas, a/a_ho = 2e-5, N = 1e5."""
    a_ho = math.sqrt(1.054571817e-34 / (RB87_MASS * TRAP_OMEGA))
    return validate(GasParameters(mass=RB87_MASS, kappa=3e39,
                                  scattering_length=2e-5 * a_ho,
                                  omega0=TRAP_OMEGA, particle_number=1e5))


@pytest.fixture
def natural():
    return PhysicalConstants.natural()


def make_coupled(ratio_a_aho, n_particles, kappa=3e39):
    a_ho = math.sqrt(1.054571817e-34 / (RB87_MASS * TRAP_OMEGA))
    return validate(GasParameters(mass=RB87_MASS, kappa=kappa,
                                  scattering_length=ratio_a_aho * a_ho,
                                  omega0=TRAP_OMEGA,
                                  particle_number=n_particles))
