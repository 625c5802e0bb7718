from fractions import Fraction

import mpmath
import pytest

from hzeta import exact_log_gengamma, log_gengamma, shift_log_gengamma


class TestExactSum:
    def test_single_term(self, ctx20):
        assert exact_log_gengamma(1, 1, ctx20).value == 0

    def test_log_factorial(self, ctx20):
        g = exact_log_gengamma(0, 3, ctx20)
        with ctx20.workprec():
            assert abs(g.value - mpmath.log(6)) < mpmath.mpf("1e-32")

    def test_weighted_sum(self, ctx20):
        g = exact_log_gengamma(1, 3, ctx20)
        with ctx20.workprec():
            assert abs(g.value - mpmath.log(108)) < mpmath.mpf("1e-31")

    def test_boundary_values(self, ctx20):
        for k in range(7):
            assert exact_log_gengamma(k, 0, ctx20).value == 0
            assert exact_log_gengamma(k, 1, ctx20).value == 0

    def test_rejects_negative(self, ctx20):
        with pytest.raises(ValueError):
            exact_log_gengamma(1, -1, ctx20)

    def test_err_zero_and_method(self, ctx20):
        g = exact_log_gengamma(2, 10, ctx20)
        assert g.err == 0
        assert g.method == "exact-sum"
        assert g.x == 11

    def test_shift_identity(self, ctx20):
        # moving the upper limit from w-1 to w adds w^k log w
        for k in range(7):
            for w in range(2, 31):
                hi = exact_log_gengamma(k, w, ctx20)
                lo = exact_log_gengamma(k, w - 1, ctx20)
                with ctx20.workprec():
                    step = mpmath.mpf(w**k) * mpmath.log(w)
                    assert abs(hi.value - lo.value - step) < ctx20.rounding_floor(
                        abs(hi.value) + abs(step) + 1
                    )


class TestShift:
    def test_empty_chain(self, ctx20):
        assert shift_log_gengamma(3, 5, 0, mpmath.mpf(7), ctx20) == 7

    def test_down_to_one(self, ctx20):
        with ctx20.workprec():
            out = shift_log_gengamma(0, 1, 2, mpmath.log(2), ctx20)
            assert abs(out) < mpmath.mpf("1e-33")

    def test_removes_top_term(self, ctx20):
        top = exact_log_gengamma(2, 3, ctx20)
        out = shift_log_gengamma(2, 3, 1, top.value, ctx20)
        lo = exact_log_gengamma(2, 2, ctx20)
        with ctx20.workprec():
            assert abs(out - lo.value) < mpmath.mpf("1e-33")

    def test_rejects_nonpositive(self, ctx20):
        with pytest.raises(ValueError):
            shift_log_gengamma(1, 0, 1, mpmath.mpf(0), ctx20)
        with pytest.raises(ValueError):
            shift_log_gengamma(1, -2, 1, mpmath.mpf(0), ctx20)


class TestLogGengamma:
    def test_at_one(self, ctx20):
        g = log_gengamma(0, 1, ctx20)
        assert g.value == 0
        assert g.method == "exact-sum"

    def test_product_rule_half_integers(self, ctx20):
        hi = log_gengamma(0, Fraction(11, 2), ctx20)
        lo = log_gengamma(0, Fraction(9, 2), ctx20)
        with ctx20.workprec():
            step = mpmath.log(mpmath.mpf(9) / 2)
            assert abs(hi.value - lo.value - step) <= hi.err + lo.err

    def test_asymptotic_matches_exact_sum(self, ctx20):
        g = log_gengamma(1, 101, ctx20, method="asymptotic")
        e = exact_log_gengamma(1, 100, ctx20)
        with ctx20.workprec():
            assert abs(g.value - e.value) < mpmath.mpf("1e-29") * abs(e.value)

    def test_method_agreement_grid(self, ctx20):
        for k in range(5):
            for x in (20, 50, 200):
                a = log_gengamma(k, x, ctx20, method="asymptotic")
                e = exact_log_gengamma(k, x - 1, ctx20)
                with ctx20.workprec():
                    assert abs(a.value - e.value) <= mpmath.mpf("1e-20")

    def test_ordinary_loggamma_oracle(self, ctx20):
        # order 0 is the ordinary log-gamma; mpmath is an independent route
        g = log_gengamma(0, Fraction(11, 2), ctx20)
        with mpmath.mp.workdps(40):
            oracle = mpmath.loggamma(mpmath.mpf(11) / 2)
            assert abs(g.value - oracle) < mpmath.mpf("1e-25")

    def test_hyperfactorial_oracle(self, ctx20):
        # order 1 against an independent multiprecision zeta-derivative route
        g = log_gengamma(1, Fraction(7, 4), ctx20)
        with mpmath.mp.workdps(40):
            oracle = mpmath.zeta(-1, mpmath.mpf(7) / 4, 1) - mpmath.zeta(-1, derivative=1)
            assert abs(g.value - oracle) < mpmath.mpf("1e-25")

    def test_rejects_nonpositive_and_bad_method(self, ctx20):
        with pytest.raises(ValueError):
            log_gengamma(0, 0, ctx20)
        with pytest.raises(ValueError):
            log_gengamma(0, Fraction(-3, 2), ctx20)
        with pytest.raises(ValueError):
            log_gengamma(0, 2, ctx20, method="nope")
        with pytest.raises(ValueError):
            log_gengamma(0, Fraction(1, 2), ctx20, method="exact")

    def test_err_and_method_tags(self, ctx20):
        g = log_gengamma(2, Fraction(7, 2), ctx20)
        assert g.method == "asymptotic-shift"
        assert g.err > 0
