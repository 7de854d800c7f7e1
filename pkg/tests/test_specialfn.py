import math

import pytest

from bosecrit.errors import ConvergenceError, DomainError
from bosecrit.specialfn import (SeriesAccuracy, bose_function,
                                bose_function_quadrature,
                                check_derivative_identity, g_double_sum,
                                g_double_sum_info, g_double_sum_truncated,
                                zeta)

#: converged double sum at z = 1 (two independent routes agree on this, see
#: test_double_sum_matches_integral_representation)
G_AT_UNITY = 1.2084711000710935

ZETA_32 = 2.612375348685488


class TestZeta:
    def test_closed_forms(self):
        assert zeta(2.0) == pytest.approx(math.pi ** 2 / 6.0, rel=1e-14)
        assert zeta(4.0) == pytest.approx(math.pi ** 4 / 90.0, rel=1e-14)

    def test_zeta3_against_partial_sum_with_tail_bounds(self):
        # independent oracle: sum n^-3 up to M, bracket the tail by integrals
        m = 2000
        partial = sum(n ** -3 for n in range(1, m + 1))
        lower = partial + 0.5 / (m + 1) ** 2
        upper = partial + 0.5 / m ** 2
        assert lower <= zeta(3.0) <= upper
        assert zeta(3.0) == pytest.approx(1.2020569031595943, rel=1e-13)

    def test_domain(self):
        for bad in (1.0, 0.5, -2.0):
            with pytest.raises(DomainError):
                zeta(bad)


class TestBoseFunction:
    def test_empty_series(self):
        assert bose_function(1.5, 0.0) == 0.0

    def test_unit_fugacity_reduces_to_zeta(self):
        assert bose_function(2.0, 1.0) == pytest.approx(math.pi ** 2 / 6.0, rel=1e-14)
        assert bose_function(1.5, 1.0) == pytest.approx(ZETA_32, rel=1e-12)
        assert bose_function(3.0, 1.0) == pytest.approx(1.2020569031595943, rel=1e-12)

    def test_order_one_is_minus_log(self):
        assert bose_function(1.0, 0.5) == pytest.approx(math.log(2.0), rel=1e-14)
        for z in (0.1, 0.7, 0.95):
            assert bose_function(1.0, z) == pytest.approx(-math.log1p(-z), rel=1e-13)

    @pytest.mark.parametrize("nu,z,expected", [
        # frozen against an independent high-precision evaluation
        (1.5, 0.5, 0.6248370208199139),
        (1.5, 0.9, 1.6144385285663396),
        (0.5, 0.9, 4.021950427473361),
        (2.0, 0.75, 0.9784693929303061),
        (3.0, 0.25, 0.2584613957965733),
    ])
    def test_reference_values(self, nu, z, expected):
        assert bose_function(nu, z) == pytest.approx(expected, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            bose_function(1.5, -0.1)
        with pytest.raises(DomainError):
            bose_function(1.5, 1.1)
        with pytest.raises(DomainError):
            bose_function(1.0, 1.0)          # divergent at z = 1
        with pytest.raises(DomainError):
            bose_function(0.5, 1.0 - 1e-10)  # inside the divergence guard
        with pytest.raises(DomainError):
            bose_function(-1.0, 0.5)
        # just below the guard is fine
        assert bose_function(0.5, 1.0 - 1e-9) > 0.0

    @pytest.mark.parametrize("nu", [0.5, 1.5, 2.0, 3.0])
    def test_monotone_in_z(self, nu):
        grid = [0.05, 0.2, 0.4, 0.6, 0.8, 0.95]
        values = [bose_function(nu, z) for z in grid]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_order_inequality(self):
        # lower order dominates for z in (0, 1]
        for z in (0.2, 0.6, 0.9):
            assert bose_function(0.5, z) >= bose_function(1.5, z)
            assert bose_function(1.5, z) >= bose_function(2.0, z)
            assert bose_function(2.0, z) >= bose_function(3.0, z)

    def test_accuracy_object_validation(self):
        with pytest.raises(DomainError):
            SeriesAccuracy(target_rel_error=0.1)
        with pytest.raises(DomainError):
            SeriesAccuracy(target_rel_error=0.0)
        with pytest.raises(DomainError):
            SeriesAccuracy(max_terms=5)


class TestSeriesVsIntegral:
    @pytest.mark.parametrize("nu", [1.5, 2.0, 3.0])
    @pytest.mark.parametrize("z", [0.1, 0.5, 0.9])
    def test_agreement(self, nu, z):
        series = bose_function(nu, z)
        integral = bose_function_quadrature(nu, z)
        assert series == pytest.approx(integral, rel=1e-8)


class TestDerivativeIdentity:
    @pytest.mark.parametrize("nu", [1.5, 2.0, 2.5, 3.0])
    @pytest.mark.parametrize("z", [0.1, 0.3, 0.5, 0.7, 0.9])
    def test_residual_on_grid(self, nu, z):
        assert check_derivative_identity(nu, z) < 1e-6

    def test_examples(self):
        assert check_derivative_identity(2.0, 0.5) < 1e-6
        assert check_derivative_identity(3.0, 0.9) < 1e-6

    def test_leading_term_limit(self):
        # z g'_nu -> z and g_(nu-1) -> z as z -> 0, so the residual vanishes
        assert check_derivative_identity(1.5, 1e-4) < 1e-6

    def test_domain(self):
        with pytest.raises(DomainError):
            check_derivative_identity(1.0, 0.5)
        with pytest.raises(DomainError):
            check_derivative_identity(2.0, 0.0)


def _brute_force_double_sum(z, radius):
    total = 0.0
    for i in range(1, radius):
        for j in range(1, radius - i + 1):
            total += z ** (i + j) / (math.sqrt(i) * j ** 1.5 * (i + j) ** 1.5)
    return total


class TestDoubleSum:
    def test_zero(self):
        assert g_double_sum(0.0) == 0.0

    def test_leading_term_dominates_small_z(self):
        leading = 2.0 ** -1.5 * 0.1 ** 2
        assert g_double_sum(0.1) == pytest.approx(leading, rel=0.1)

    def test_small_z_limit(self):
        z = 1e-4
        assert g_double_sum(z) / z ** 2 == pytest.approx(2.0 ** -1.5, rel=1e-3)

    @pytest.mark.parametrize("z", [0.1, 0.3, 0.5])
    def test_matches_brute_force(self, z):
        assert g_double_sum(z) == pytest.approx(_brute_force_double_sum(z, 400),
                                                rel=1e-10)

    def test_value_at_unity(self):
        info = g_double_sum_info(1.0)
        assert 0.35 < info.value < 2.0
        assert info.value == pytest.approx(G_AT_UNITY, abs=1e-8)

    def test_stable_under_doubling(self):
        m = 1 << 18
        assert abs(g_double_sum_truncated(2 * m) - g_double_sum_truncated(m)) < 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            g_double_sum(-0.01)
        with pytest.raises(DomainError):
            g_double_sum(1.01)

    def test_unreachable_tail_raises(self):
        # z too close to 1 for the direct sum, too far for the z = 1 window
        with pytest.raises(ConvergenceError):
            g_double_sum(1.0 - 1e-7, SeriesAccuracy(max_terms=1 << 16))

    def test_matches_integral_representation(self):
        # independent route: the diagonal weight 1/(i+j)^(3/2) is the Laplace
        # transform of sqrt(t), turning the double sum into a 1D integral of
        # g_1/2 * g_3/2
        from scipy import integrate

        def integrand(t):
            w = math.exp(-t)
            if w > 1.0 - 1e-9:
                w = 1.0 - 1e-9
            return math.sqrt(t) * bose_function(0.5, w) * bose_function(1.5, w)

        head, _ = integrate.quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=1e-11,
                                 limit=400)
        tail, _ = integrate.quad(integrand, 1.0, 60.0, epsabs=0.0, epsrel=1e-11,
                                 limit=400)
        reference = 2.0 / math.sqrt(math.pi) * (head + tail)
        assert g_double_sum(1.0) == pytest.approx(reference, rel=1e-8)


class TestAgainstMpmath:
    """Cross-checks against an independent multiprecision implementation."""

    mp = pytest.importorskip("mpmath")

    @pytest.mark.parametrize("nu", [0.5, 1.0, 1.5, 2.0, 2.7, 3.0])
    @pytest.mark.parametrize("z", [0.05, 0.5, 0.6, 0.9, 0.999999])
    def test_bose_function(self, nu, z):
        reference = float(self.mp.re(self.mp.polylog(nu, z)))
        assert bose_function(nu, z) == pytest.approx(reference, rel=1e-12)

    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0, 4.0, 7.5, 60.0])
    def test_zeta(self, s):
        assert zeta(s) == pytest.approx(float(self.mp.zeta(s)), rel=1e-13)
