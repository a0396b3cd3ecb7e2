from fractions import Fraction
from math import factorial

import pytest

from scepoly.families import c_from_s, e_explicit, em_explicit, s_explicit
from scepoly.genfunc import (
    E_SPEC,
    FormalSeries,
    LinearHGSpec,
    degenerate_genfunc,
    em_spec,
    laguerre_spec,
    nu_degeneracy_check,
    rho_linear,
    series_C,
    series_E,
    series_Em,
    series_S,
    series_connection_check,
    series_exp_xt,
    sigma_linear,
)
from scepoly.poly import Poly
from scepoly.rational import I

X = Poly.x()


class TestSeriesArithmetic:
    def test_geometric_inverse(self):
        n = 12
        one_plus_t = FormalSeries([Poly.one(), Poly.one()] + [Poly.zero()] * (n - 1))
        geom = FormalSeries(Poly.constant((-1) ** k) for k in range(n + 1))
        assert one_plus_t * geom == FormalSeries.one(n)

    def test_multiplication_by_zero(self):
        f = series_E(6)
        assert f * FormalSeries.zero(6) == FormalSeries.zero(6)

    def test_square_of_exponential(self):
        # (sum x^k t^k / k!)^2 = 1 + 2xt + 2x^2 t^2 + ...
        f = series_exp_xt(1, 2)
        sq = f * f
        assert sq.coeff(0) == Poly.one()
        assert sq.coeff(1) == 2 * X
        assert sq.coeff(2) == 2 * X**2

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError, match="orders differ"):
            series_E(3) + series_E(4)
        with pytest.raises(ValueError, match="orders differ"):
            series_E(3) * series_E(4)

    def test_addition_and_negation(self):
        f = series_S(5)
        assert f - f == FormalSeries.zero(5)
        assert -(-f) == f


class TestExpXtSeries:
    def test_unit_scale(self):
        f = series_exp_xt(1, 2)
        assert f.coeff(0) == Poly.one()
        assert f.coeff(1) == X
        assert f.coeff(2) == X**2 * Fraction(1, 2)

    def test_zero_scale_is_constant_one(self):
        f = series_exp_xt(0, 5)
        assert f == FormalSeries.one(5)

    def test_scale_three(self):
        assert series_exp_xt(3, 2).coeff(2) == X**2 * Fraction(9, 2)


class TestGeneratingFunctions:
    def test_e_series_first_coefficients(self):
        e = series_E(3)
        assert e.coeff(0) == Poly.one()
        assert e.coeff(1) == X - 1

    def test_s_series_base(self):
        assert series_S(2).coeff(0) == Poly.constant(-1)

    def test_c_series_t2(self):
        assert series_C(4).coeff(2) == (X**2 - 2) * Fraction(1, 2)

    def test_coefficients_match_families_to_order_30(self):
        order = 30
        e, s, c = series_E(order), series_S(order), series_C(order)
        for n in range(order + 1):
            f = factorial(n)
            assert f * e.coeff(n) == e_explicit(n)
            assert f * s.coeff(n) == s_explicit(n)
            assert f * c.coeff(n) == c_from_s(n)

    @pytest.mark.parametrize("m", [Fraction(2), Fraction(-1), Fraction(1, 2)])
    def test_em_series_matches_family(self, m):
        order = 30
        em = series_Em(m, order)
        for n in range(order + 1):
            assert factorial(n) * em.coeff(n) == em_explicit(n, m)

    def test_em_series_rejects_zero_rate(self):
        with pytest.raises(ValueError, match="nonzero"):
            series_Em(0, 5)

    def test_series_satisfy_their_pdes(self):
        order = 30
        rhs = series_exp_xt(1, order)
        e = series_E(order)
        assert e.diff_x() + e == rhs
        s = series_S(order)
        assert s.diff_x().diff_x() + s == -rhs
        c = series_C(order)
        assert c.diff_x().diff_x() + c == rhs


class TestConnectionIdentity:
    def test_order_zero_value(self):
        e0 = series_E(0).coeff(0)
        rhs = e0.scale_arg(I) * (-I) ** 0 + e0.scale_arg(-I) * I**0
        assert rhs == Poly.constant(2)
        assert rhs == 2 * c_from_s(0)

    def test_order_one_value(self):
        e1 = series_E(1).coeff(1)
        rhs = e1.scale_arg(I) * (-I) + e1.scale_arg(-I) * I
        assert rhs == 2 * X
        assert rhs == 2 * c_from_s(1)

    def test_full_check_to_order_20(self):
        report = series_connection_check(20)
        assert len(report) == 21
        assert report.all_passed, report.failures


class TestWeightForms:
    def test_rho_for_e_equation(self):
        w = rho_linear(E_SPEC, 3)
        assert (w.alpha, w.beta) == (1, 0)
        assert w.exponent == -4
        assert w.rate == 1

    def test_rho_for_laguerre_equation(self):
        alpha_l = Fraction(5, 2)
        w = rho_linear(laguerre_spec(alpha_l), 9)
        assert w.exponent == alpha_l
        assert w.rate == -1

    def test_rho_for_rate_m_equation(self):
        w = rho_linear(em_spec(Fraction(3)), 4)
        assert w.exponent == -5
        assert w.rate == 3

    def test_sigma_constant_for_e_equation(self):
        forms = {sigma_linear(E_SPEC, n) for n in range(11)}
        assert len(forms) == 1
        w = forms.pop()
        assert w.exponent == -1 and w.rate == 1

    def test_sigma_depends_on_n_for_laguerre(self):
        spec = laguerre_spec(Fraction(0))
        assert sigma_linear(spec, 2).exponent == 2
        assert sigma_linear(spec, 5).exponent == 5

    def test_alpha_zero_rejected(self):
        with pytest.raises(ValueError, match="alpha"):
            LinearHGSpec(0, 0, 1, 0, -1)

    def test_lambda_n(self):
        assert E_SPEC.lambda_n(4) == -4
        m = Fraction(7, 2)
        for n in range(6):
            assert em_spec(m).lambda_n(n) == -m * n


class TestDegeneracy:
    def test_e_equation_is_degenerate(self):
        assert nu_degeneracy_check(E_SPEC)

    def test_laguerre_equation_is_not(self):
        assert not nu_degeneracy_check(laguerre_spec(0))
        assert not nu_degeneracy_check(laguerre_spec(Fraction(7, 3)))

    def test_shifted_base_equation_is_degenerate(self):
        assert nu_degeneracy_check(LinearHGSpec(1, 1, -1, 0, -1))

    def test_rate_m_equation_is_degenerate(self):
        assert nu_degeneracy_check(em_spec(Fraction(-2)))


class TestDegenerateGenfunc:
    def test_reproduces_e_series(self):
        assert degenerate_genfunc(E_SPEC, 30) == series_E(30)

    @pytest.mark.parametrize("m", [Fraction(2), Fraction(-1), Fraction(1, 2)])
    def test_reproduces_em_series(self, m):
        assert degenerate_genfunc(em_spec(m), 30) == series_Em(m, 30)

    def test_shifted_base_family(self):
        # alpha=1, beta=1, gamma=-1, delta=-n generates (-1)^n (x+1)^n
        spec = LinearHGSpec(1, 1, -1, 0, -1)
        series = degenerate_genfunc(spec, 12)
        for n in range(13):
            expected = (-1) ** n * (X + 1) ** n
            assert factorial(n) * series.coeff(n) == expected

    def test_rejects_nondegenerate_spec(self):
        with pytest.raises(ValueError, match="n-independent"):
            degenerate_genfunc(laguerre_spec(0), 10)
