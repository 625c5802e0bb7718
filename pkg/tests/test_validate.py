from fractions import Fraction

import mpmath
import pytest

import hzeta.mpcore as mpcore
from hzeta import (
    NonConvergent,
    PrecisionContext,
    alexeiewsky_check,
    alt_recursion_check,
    bendersky_recursion_check,
    clear_caches,
    general_solution_check,
    gint_moment_check,
    jeffery_difference_check,
    log_coefficient_check,
    quadrature,
    selftest,
    stabilization_check,
    zeta_positive,
)


class TestQuadrature:
    def test_unit(self, ctx20):
        val, err = quadrature(lambda t: mpmath.mpf(1), 0, 1, ctx20)
        with ctx20.workprec():
            assert abs(val - 1) <= err + ctx20.rounding_floor(1)

    def test_log_singularity(self, ctx20):
        val, err = quadrature(mpmath.log, 0, 1, ctx20)
        with ctx20.workprec():
            assert abs(val + 1) <= err + ctx20.rounding_floor(1)

    def test_cubic(self, ctx20):
        val, err = quadrature(lambda t: t**3, 0, 1, ctx20)
        with ctx20.workprec():
            assert abs(val - mpmath.mpf(1) / 4) <= err + ctx20.rounding_floor(1)

    def test_shifted_interval(self, ctx20):
        val, err = quadrature(mpmath.log, 1, 3, ctx20)
        with ctx20.workprec():
            oracle = 3 * mpmath.log(3) - 2
            assert abs(val - oracle) <= err + ctx20.rounding_floor(1)

    def test_nonintegrable_raises(self, ctx20):
        with pytest.raises(NonConvergent):
            quadrature(lambda t: 1 / t, 0, 1, ctx20)

    def test_rejects_empty_interval(self, ctx20):
        with pytest.raises(ValueError):
            quadrature(mpmath.log, 1, 1, ctx20)

    def test_precision_monotone(self):
        lo = PrecisionContext(15)
        hi = PrecisionContext(30)
        vlo, _ = quadrature(mpmath.log, 0, 1, lo)
        vhi, ehi = quadrature(mpmath.log, 0, 1, hi)
        with hi.workprec():
            assert abs(vhi + 1) <= ehi + hi.rounding_floor(1)
            assert abs(vlo - vhi) < mpmath.mpf("1e-20")


class TestZetaPositive:
    def test_even_closed_forms(self, ctx20):
        with ctx20.workprec():
            assert abs(zeta_positive(2, ctx20) - mpmath.pi**2 / 6) < mpmath.mpf("1e-32")
            assert abs(zeta_positive(4, ctx20) - mpmath.pi**4 / 90) < mpmath.mpf("1e-32")
            assert abs(zeta_positive(6, ctx20) - mpmath.pi**6 / 945) < mpmath.mpf("1e-32")

    def test_apery_constant(self, ctx20):
        with mpmath.mp.workdps(50):
            oracle = mpmath.zeta(3)
        with ctx20.workprec():
            assert abs(zeta_positive(3, ctx20) - oracle) < mpmath.mpf("1e-33")

    def test_rejects_below_two(self, ctx20):
        with pytest.raises(ValueError):
            zeta_positive(1, ctx20)


GRIDS = {
    "bendersky": [(0, 100), (1, 100), (2, 50)],
    "alt": [(0, 1), (0, 2), (1, 3)],
    "alexeiewsky": [1, 2, Fraction(11, 2)],
    "general": [(1, 1), (2, 2), (3, 1)],
    "gint": [1, 2, 3, 4, 5],
    "jeffery": [(0, 1), (1, 2), (4, 7)],
}


class TestIdentityChecks:
    def test_bendersky_recursion(self, ctx20):
        for k, x in GRIDS["bendersky"]:
            rep = bendersky_recursion_check(k, x, ctx20)
            assert rep.passed, rep

    def test_alt_recursion(self, ctx20):
        for k, x in GRIDS["alt"]:
            rep = alt_recursion_check(k, x, ctx20)
            assert rep.passed, rep

    def test_alt_recursion_rhs_vanishes_at_one(self, ctx20):
        # at x = 1 the right side is zeta'(-k-1, 1) - zeta'(-k-1) = 0
        rep = alt_recursion_check(0, 1, ctx20)
        assert rep.passed and rep.residual < mpmath.mpf("1e-25")

    def test_alexeiewsky(self, ctx20):
        for x in GRIDS["alexeiewsky"]:
            rep = alexeiewsky_check(x, ctx20)
            assert rep.passed, rep

    def test_general_solution(self, ctx20):
        for k, x in GRIDS["general"]:
            rep = general_solution_check(k, x, ctx20)
            assert rep.passed, rep

    def test_general_solution_rejects_large_order(self, ctx20):
        with pytest.raises(ValueError):
            general_solution_check(4, 1, ctx20)

    def test_gint_moments(self, ctx20):
        for k in GRIDS["gint"]:
            rep = gint_moment_check(k, ctx20)
            assert rep.passed, rep

    def test_gint_gamma_variant(self, ctx20):
        rep = gint_moment_check(2, ctx20, gamma_variant=True)
        assert rep.passed, rep

    def test_gint_variant_only_order_two(self, ctx20):
        with pytest.raises(ValueError):
            gint_moment_check(3, ctx20, gamma_variant=True)

    def test_jeffery_difference(self, ctx20):
        for k, x in GRIDS["jeffery"]:
            rep = jeffery_difference_check(k, x, ctx20)
            assert rep.passed, rep

    def test_log_coefficient(self, ctx20):
        for k in range(7):
            rep = log_coefficient_check(k, ctx20)
            assert rep.passed and rep.residual == 0

    def test_stabilization(self, ctx20):
        for k in range(5):
            rep = stabilization_check(k, ctx20)
            assert rep.passed, rep

    def test_report_shape(self, ctx20):
        rep = jeffery_difference_check(2, 3, ctx20)
        assert rep.name == "jeffery-difference"
        assert rep.k == 2 and rep.x_or_w == 3
        assert rep.passed == (rep.residual <= rep.tolerance)
        assert rep.elapsed >= 0


class TestSelftest:
    def test_quick_all_pass(self, ctx20):
        reports = selftest("quick", ctx20)
        assert reports and all(r.passed for r in reports)

    def test_quick_at_fifteen_digits(self):
        ctx = PrecisionContext(15)
        reports = selftest("quick", ctx)
        assert all(r.passed for r in reports)

    def test_full_all_pass(self, ctx20):
        reports = selftest("full", ctx20)
        assert all(r.passed for r in reports), [r for r in reports if not r.passed]
        names = {r.name for r in reports}
        assert {
            "bendersky-recursion",
            "alt-recursion",
            "alexeiewsky",
            "general-solution",
            "gint-moment",
            "gint-moment-gamma-variant",
            "jeffery-difference",
            "log-coefficient",
            "stabilization",
            "raabe-integral",
        } <= names

    def test_rejects_unknown_level(self, ctx20):
        with pytest.raises(ValueError):
            selftest("exhaustive", ctx20)

    def test_fault_injection_names_stabilization(self, ctx20):
        # a corrupted Bernoulli value must surface as a stabilization failure
        clear_caches()
        try:
            mpcore.bernoulli(12)  # grow the table before poisoning it
            mpcore._BERNOULLI._values[4] = Fraction(1, 3)
            reports = selftest("quick", ctx20)
            failed = {r.name for r in reports if not r.passed}
            assert "stabilization" in failed
        finally:
            clear_caches()
        # and a clean run passes again
        assert all(r.passed for r in selftest("quick", ctx20))
