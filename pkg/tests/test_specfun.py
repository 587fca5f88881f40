import cmath
import math

import pytest

from mbbox import specfun as sf
from mbbox.errors import DomainError, NonConvergence, PoleError
from mbbox.oracles import euler_f21_oracle
from mbbox.specfun import ABOVE, BELOW, PV

EULER_GAMMA = 0.5772156649015328606


class TestGammaFamily:
    def test_ln_gamma_known_values(self):
        assert abs(sf.ln_gamma(1.0)) < 1e-14
        assert abs(sf.ln_gamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-13

    def test_ln_gamma_recurrence_complex(self):
        z = 3 + 4j
        lhs = sf.ln_gamma(z + 1)
        rhs = sf.ln_gamma(z) + cmath.log(z)
        assert abs(lhs - rhs) < 1e-12 * abs(lhs)

    def test_gamma_trivia(self):
        assert abs(sf.gamma(1.0) - 1.0) < 1e-14
        assert abs(sf.gamma(5.0) - 24.0) < 1e-12

    def test_reflection(self):
        for z in (0.3, 0.77, 2.6, -0.45, 0.5 + 1.3j, -1.2 + 0.4j):
            val = sf.gamma(z) * sf.gamma(1.0 - z) * cmath.sin(math.pi * z) / math.pi
            assert abs(val - 1.0) < 1e-12, z

    def test_recurrence(self):
        for z in (0.3, 1.9, 4.4, -0.6, 0.25 + 2j):
            assert abs(sf.gamma(z + 1) - z * sf.gamma(z)) < 1e-12 * abs(sf.gamma(z + 1))
            assert abs(sf.digamma(z + 1) - sf.digamma(z) - 1.0 / z) < 1e-12

    def test_poles_raise(self):
        for z in (0.0, -1.0, -7.0):
            with pytest.raises(PoleError):
                sf.gamma(z)
            with pytest.raises(PoleError):
                sf.digamma(z)

    def test_digamma_known(self):
        assert abs(sf.digamma(1.0) + EULER_GAMMA) < 1e-13
        assert abs(sf.digamma(2.0) - (1.0 - EULER_GAMMA)) < 1e-13

    def test_digamma_matches_ln_gamma_slope(self):
        h = 1e-6
        for z in (0.3, 1.7, 5.2):
            fd = (sf.ln_gamma(z + h) - sf.ln_gamma(z - h)).real / (2 * h)
            assert abs(sf.digamma(z).real - fd) < 1e-8

    def test_overflow_is_an_error(self):
        with pytest.raises(OverflowError):
            sf.gamma(500.0)

    def test_grid_matches_scalar(self):
        import numpy as np

        pts = np.array([0.6 + 0j, 1.5 + 3j, 2.0 - 10j, 0.9 + 40j])
        grid = sf.ln_gamma_grid(pts)
        for p, g in zip(pts, grid):
            assert abs(g - sf.ln_gamma(complex(p))) < 1e-12 * max(1.0, abs(g))


class TestDilogarithm:
    def test_trivia(self):
        assert sf.li2(0.0) == 0.0
        assert abs(sf.li2(1.0) - math.pi ** 2 / 6) < 1e-14
        assert abs(sf.li2(-1.0) + math.pi ** 2 / 12) < 1e-14
        assert abs(sf.li2(0.5) - (math.pi ** 2 / 12 - math.log(2) ** 2 / 2)) < 1e-14

    def test_quadrature_oracle(self):
        # Li2(z) = -int_0^z log(1-u)/u du
        from scipy.integrate import quad
        for z in (0.37, -0.8, 0.9):
            ref, _ = quad(lambda u: -math.log(1.0 - u) / u if u != 0 else 1.0, 0.0, z,
                          epsabs=1e-13, epsrel=1e-13)
            assert abs(sf.li2(z).real - ref) < 1e-11

    def test_reflection_identity(self):
        for x in (0.1, 0.3, 0.5, 0.62, 0.9):
            lhs = sf.li2(1.0 - x)
            rhs = math.pi ** 2 / 6 - sf.li2(x) - math.log(x) * math.log(1.0 - x)
            assert abs(lhs - rhs) < 1e-12

    def test_inversion_sum(self):
        for x in (0.2, 1.0, 3.7, 12.0):
            lhs = sf.li2(-x) + sf.li2(-1.0 / x)
            rhs = -math.pi ** 2 / 6 - 0.5 * math.log(x) ** 2
            assert abs(lhs - rhs) < 1e-12

    def test_cut_prescriptions(self):
        x = 2.5
        above = sf.li2(x, ABOVE)
        below = sf.li2(x, BELOW)
        assert above.imag > 0 > below.imag
        assert abs(above.imag - math.pi * math.log(x)) < 1e-12
        assert abs((above + below) / 2 - sf.li2(x, PV)) < 1e-13

    def test_complex_plane(self):
        # against the defining series, well inside the disk
        z = 0.2 + 0.55j
        direct = sum(z ** n / n ** 2 for n in range(1, 200))
        assert abs(sf.li2(z) - direct) < 1e-13


class TestHypergeometric:
    def test_at_zero(self):
        for f in (sf.f21_1e, sf.f21_2e, sf.f21_11):
            assert f(0.0, 0.37) == 1.0

    def test_general_series_trivia(self):
        val = sf.f21_general_series(1.0, 1.0, 2.0, 0.5)
        assert abs(val - (-math.log(0.5) / 0.5)) < 1e-13
        assert abs(sf.f21_general_series(1.0, 0.4, 1.4, 0.3) - sf.f21_1e(0.3, 0.4)) < 1e-13
        # a == c collapses to the binomial
        assert abs(sf.f21_general_series(1.7, 1.0, 1.7, 0.2) - 1.25) < 1e-13

    def test_general_series_raises(self):
        with pytest.raises(NonConvergence):
            sf.f21_general_series(1.0, 0.3, 1.3, 1.05)
        with pytest.raises(PoleError):
            sf.f21_general_series(1.0, 1.0, -2.0, 0.3)

    def test_euler_integral_agreement(self):
        # series evaluation against the Euler-integral quadrature
        for eps in (0.2, 0.5, 0.8):
            for z in (-0.9, -0.5, 0.0, 0.5, 0.9):
                lhs = sf.f21_1e(z, eps) / eps
                rhs = euler_f21_oracle(eps, z)
                assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs)), (eps, z)

    def test_euler_integral_2e(self):
        eps, z = 0.25, -0.8
        from scipy.integrate import quad
        ref, _ = quad(lambda u: u ** eps / (1.0 - z * u), 0.0, 1.0,
                      epsabs=1e-13, epsrel=1e-13)
        assert abs(sf.f21_2e(z, eps) / (1.0 + eps) - ref) < 1e-11

    def test_parameter_shift_identity(self):
        for (e, z) in ((0.4, 0.5), (0.3, 0.6), (0.25, -0.8)):
            lhs = sf.f21_1e(z, e) / e
            rhs = 1.0 / e + z / (1.0 + e) * sf.f21_2e(z, e)
            assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))
        for cut in (PV, ABOVE, BELOW):
            e, z = 0.35, 2.2
            lhs = sf.f21_1e(z, e, cut) / e
            rhs = 1.0 / e + z / (1.0 + e) * sf.f21_2e(z, e, cut)
            assert abs(lhs - rhs) < 1e-11 * max(1.0, abs(lhs))

    def test_two_route_consistency_negative_axis(self):
        # Pfaff-transformed series vs the inversion route
        e, z = 0.3, -2.0
        direct = sf.f21_11(z, e)
        pfaff = sf.f21_general_series(1.0, 1.0 - e, 2.0 - e, z / (z - 1.0)) / (1.0 - z)
        assert abs(direct - pfaff) < 1e-12 * abs(direct)

    def test_pv_is_average(self):
        for f, e, z in ((sf.f21_1e, 0.3, 1.8), (sf.f21_2e, 0.45, 2.6),
                        (sf.f21_11, 0.2, 1.4)):
            pv = f(z, e, PV)
            avg = (f(z, e, ABOVE) + f(z, e, BELOW)) / 2.0
            assert abs(pv - avg) < 1e-13 * max(1.0, abs(pv))
            assert pv.imag == 0.0

    def test_against_euler_on_cut(self):
        e, z = 0.3, 2.0
        for cut in (PV, ABOVE, BELOW):
            lhs = sf.f21_1e(z, e, cut) / e
            rhs = euler_f21_oracle(e, z, cut)
            assert abs(lhs - rhs) < 1e-8 * abs(lhs), cut

    def test_eps_domain(self):
        with pytest.raises(DomainError):
            sf.f21_1e(0.5, 1.3)


class TestContinuationSplit:
    @pytest.mark.parametrize("s,t,eps", [(-1.0, -2.0, 0.3), (-3.0, -1.0, 0.45),
                                         (-0.5, -2.0, 0.2)])
    def test_pieces_sum(self, s, t, eps):
        for cut in (PV, ABOVE, BELOW):
            head, alg = sf.f21_11_split(t / s, eps, cut)
            direct = sf.f21_11(-s / t, eps, cut)
            assert abs(head + alg - direct) < 1e-12 * max(1.0, abs(direct))

    def test_small_ratio_limit(self):
        # -s/t -> 0 forces the resummed function to one
        eps = 0.3
        head, alg = sf.f21_11_split(t_over_s=1e5, eps=eps)
        assert abs(head + alg - 1.0) < 1e-4

    def test_rejects_zero_ratio(self):
        with pytest.raises(DomainError):
            sf.f21_11_split(0.0, 0.3)


class TestAppellReduction:
    def test_x_zero_collapse(self):
        bp, y = 1.3, 0.4
        val = sf.appell_f2_reduced(1.0, bp, 1.7, 0.0, y)
        assert abs(val - (1.0 - y) ** (-bp)) < 1e-13

    def test_symmetry(self):
        a = sf.appell_f2_reduced(0.8, 1.1, 1.9, 0.25, 0.25)
        b = sf.appell_f2_reduced(1.1, 0.8, 1.9, 0.25, 0.25)
        assert abs(a - b) < 1e-13 * abs(a)

    def test_double_series_oracle(self):
        from mbbox.oracles import f2_double_series
        e = 0.3
        lhs = sf.appell_f2_reduced(1.0, 1.0, 2.0 - e, 0.2, 0.3)
        rhs = f2_double_series(2.0 - e, 1.0, 1.0, 2.0 - e, 2.0 - e, 0.2, 0.3)
        assert abs(lhs - rhs) < 1e-12 * abs(rhs)
