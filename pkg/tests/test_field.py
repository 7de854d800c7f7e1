import math

import pytest
from scipy.optimize import minimize_scalar

from bosecrit.errors import IdealGasDivergence, NonPhysical
from bosecrit.field import (FieldPotentialInput, minima, potential_value,
                            symmetry_breaking_temperature,
                            thermal_term_identity)
from bosecrit.units import GasParameters, PhysicalConstants, validate

NAT = PhysicalConstants.natural()


def coupled(lam):
    return validate(GasParameters(mass=1.0, lam=lam, scattering_length=1e-3,
                                  omega0=1.0), NAT)


class TestPotential:
    def test_vanishes_at_origin_and_zero_temperature(self):
        p = coupled(4.0)
        inp = FieldPotentialInput(p, temperature=0.0)
        assert potential_value(inp, 0.0, NAT) == 0.0

    def test_value_at_zero_temperature_minimum(self):
        # Phi^2 = m^2 c^4 / lam gives V = -m^4 c^6 / (4 lam hbar^2)
        for lam in (0.5, 4.0, 9.0):
            p = coupled(lam)
            phi_min = 1.0 / math.sqrt(lam)
            inp = FieldPotentialInput(p, temperature=0.0)
            assert potential_value(inp, phi_min, NAT) == \
                pytest.approx(-1.0 / (4.0 * lam), rel=1e-12)

    def test_t4_term_only_offsets(self):
        p = coupled(2.0)
        with_t4 = FieldPotentialInput(p, temperature=0.4, include_T4=True)
        without = FieldPotentialInput(p, temperature=0.4, include_T4=False)
        offset = math.pi ** 2 / 90.0 * 0.4 ** 4
        for phi in (0.0, 0.3, 1.0):
            assert potential_value(without, phi, NAT) - potential_value(with_t4, phi, NAT) \
                == pytest.approx(offset, rel=1e-12)

    @pytest.mark.parametrize("phi", [0.0, 0.17, 0.8, 2.5])
    def test_even_in_field_amplitude(self, phi):
        p = coupled(3.0)
        inp = FieldPotentialInput(p, temperature=0.6, external_phi=0.2)
        assert potential_value(inp, phi, NAT) == potential_value(inp, -phi, NAT)

    def test_curvature_vanishes_at_critical_temperature(self):
        p = coupled(4.0)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        inp = FieldPotentialInput(p, temperature=t_sb)
        h = 1e-5
        curvature = (potential_value(inp, h, NAT) - 2.0 * potential_value(inp, 0.0, NAT)
                     + potential_value(inp, -h, NAT)) / h ** 2
        assert abs(curvature) < 1e-6

    def test_curvature_sign_flips_across_t_sb(self):
        p = coupled(4.0)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        h = 1e-5

        def curvature(t):
            inp = FieldPotentialInput(p, temperature=t)
            return (potential_value(inp, h, NAT) - 2.0 * potential_value(inp, 0.0, NAT)
                    + potential_value(inp, -h, NAT)) / h ** 2

        assert curvature(1.3 * t_sb) > 0.0
        assert curvature(0.7 * t_sb) < 0.0

    def test_broken_minimum_lies_below_origin(self):
        p = coupled(4.0)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        report = minima(p, 0.5 * t_sb, 0.0, NAT)
        inp = FieldPotentialInput(p, temperature=0.5 * t_sb)
        assert potential_value(inp, report.phi_min_plus, NAT) < \
            potential_value(inp, 0.0, NAT)

    def test_input_validation(self):
        p = coupled(1.0)
        with pytest.raises(NonPhysical):
            FieldPotentialInput(p, temperature=-1.0)
        with pytest.raises(NonPhysical):
            FieldPotentialInput(p, temperature=1.0, external_phi=-0.1)


class TestSymmetryBreakingTemperature:
    def test_lambda_four_gives_rest_energy(self):
        p = coupled(4.0)
        assert symmetry_breaking_temperature(p, 0.0, NAT) == pytest.approx(1.0, rel=1e-14)

    def test_external_potential_three_halves_doubles(self):
        p = coupled(4.0)
        assert symmetry_breaking_temperature(p, 1.5, NAT) == pytest.approx(2.0, rel=1e-14)

    def test_zero_coupling_diverges_with_warning(self):
        p = validate(GasParameters(mass=1.0, lam=0.0, omega0=1.0), NAT)
        with pytest.warns(IdealGasDivergence):
            assert math.isinf(symmetry_breaking_temperature(p, 0.0, NAT))

    def test_decreasing_in_coupling(self):
        values = [symmetry_breaking_temperature(coupled(lam), 0.0, NAT)
                  for lam in (0.5, 1.0, 2.0, 4.0, 8.0)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_increasing_in_external_potential(self):
        p = coupled(2.0)
        values = [symmetry_breaking_temperature(p, phi, NAT)
                  for phi in (0.0, 0.5, 1.0, 2.0)]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestMinima:
    def test_vanish_at_critical_temperature(self):
        p = coupled(4.0)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        report = minima(p, t_sb, 0.0, NAT)
        assert not report.broken
        assert report.phi_min_plus == 0.0 == report.phi_min_minus

    def test_zero_temperature_location(self):
        for lam in (0.5, 4.0):
            report = minima(coupled(lam), 0.0, 0.0, NAT)
            assert report.broken
            assert report.phi_min_plus == pytest.approx(1.0 / math.sqrt(lam), rel=1e-14)
            assert report.phi_min_minus == -report.phi_min_plus

    def test_half_critical_temperature(self):
        p = coupled(4.0)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        report = minima(p, 0.5 * t_sb, 0.0, NAT)
        assert report.phi_min_plus == pytest.approx(0.5 * math.sqrt(0.75), rel=1e-14)

    @pytest.mark.parametrize("lam", [0.5, 1.0, 2.0, 5.0, 10.0])
    @pytest.mark.parametrize("t_frac", [0.25, 0.65])
    def test_matches_direct_minimization(self, lam, t_frac):
        p = coupled(lam)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        report = minima(p, t_frac * t_sb, 0.0, NAT)
        inp = FieldPotentialInput(p, temperature=t_frac * t_sb)
        res = minimize_scalar(
            lambda phi: potential_value(inp, phi, NAT),
            bounds=(0.25 * report.phi_min_plus, 2.0 * report.phi_min_plus),
            method="bounded", options={"xatol": report.phi_min_plus * 1e-12},
        )
        assert res.x == pytest.approx(report.phi_min_plus, rel=1e-8)


class TestThermalTermIdentity:
    @pytest.mark.parametrize("lam,t", [(0.5, 0.1), (4.0, 1.0), (9.0, 0.33), (2.0, 2.7)])
    def test_residual_below_machine_scale(self, lam, t):
        assert thermal_term_identity(coupled(lam), t, NAT) < 1e-12

    def test_zero_temperature(self):
        assert thermal_term_identity(coupled(4.0), 0.0, NAT) == 0.0

    def test_both_terms_equal_half_rest_energy_at_t_sb(self):
        p = coupled(4.0)
        t_sb = symmetry_breaking_temperature(p, 0.0, NAT)
        direct = p.lam * t_sb ** 2 / 8.0  # natural units, m = c = kB = 1
        assert direct == pytest.approx(0.5, rel=1e-12)
        assert thermal_term_identity(p, t_sb, NAT) < 1e-12
