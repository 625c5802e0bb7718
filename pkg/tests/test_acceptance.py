"""Acceptance suite: every headline claim at its stated tolerance.

Each test prints one PASS/FAIL line (run pytest with -s to see them all).
"""

import time
from fractions import Fraction

import mpmath

from hzeta import (
    PrecisionContext,
    bernoulli,
    gkbj_auto,
    gkbj_constant,
    harmonic,
    hurwitz_deriv,
    hurwitz_deriv_integer,
    kinkelin_logvarpi,
    selftest,
    varpi,
    zeta_deriv_neg,
    zeta_positive,
)
from hzeta.mpcore import to_mpf

CTX20 = PrecisionContext(target_digits=20)
CTX30 = PrecisionContext(target_digits=30)


def announce(number, passed, detail):
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] acceptance {number}: {detail}")
    assert passed, detail


def test_criterion_1_varpi2_digits():
    t0 = time.perf_counter()
    rec = varpi(2, CTX20)
    with CTX20.workprec():
        shown = mpmath.nstr(rec.value, 10, strip_zeros=False)
    elapsed = time.perf_counter() - t0
    ok = shown == "-0.2475089541" and elapsed < 5
    announce(1, ok, f"varpi(2) -> {shown} in {elapsed:.2f}s (want -0.2475089541, < 5 s)")


def test_criterion_2_kinkelin_digits():
    t0 = time.perf_counter()
    rec = kinkelin_logvarpi(CTX20)
    with CTX20.workprec():
        shown = mpmath.nstr(rec.value, 11, strip_zeros=False)
    elapsed = time.perf_counter() - t0
    ok = shown == "0.33084228740" and elapsed < 5
    announce(2, ok, f"log varpi -> {shown} in {elapsed:.2f}s (want 0.33084228740, < 5 s)")


def test_criterion_3_varpi3_varpi4_digits():
    # the published 12th digit of varpi(3) is one off (the true value is
    # -0.0913453711751798..., which rounds and truncates to ...175), and
    # varpi(4) is printed truncated; match to one unit in the last
    # printed place, the tightest test the printed digits support
    t0 = time.perf_counter()
    v3 = varpi(3, CTX20)
    v4 = varpi(4, CTX20)
    with CTX20.workprec():
        d3 = abs(v3.value - mpmath.mpf("-0.091345371176"))
        d4 = abs(v4.value - mpmath.mpf("0.013180972097"))
        ok_vals = d3 <= mpmath.mpf("1e-12") and d4 <= mpmath.mpf("1e-12")
    elapsed = time.perf_counter() - t0
    ok = ok_vals and elapsed < 10
    announce(
        3,
        ok,
        f"varpi(3) off by {mpmath.nstr(d3, 2)}, varpi(4) off by {mpmath.nstr(d4, 2)} "
        f"of the printed values in {elapsed:.2f}s (want <= 1e-12 each, < 10 s)",
    )


def test_criterion_4_twentynine_places():
    # 45 working digits: target 30 + guard 15
    ctx = PrecisionContext(target_digits=30, guard_digits=15)
    assert ctx.working_digits == 45
    t0 = time.perf_counter()
    worst = mpmath.mpf(0)
    for k in (0, 1, 2):
        a = gkbj_constant(k, 100, 20, ctx)
        b = gkbj_constant(k, 1000, 40, ctx)
        with ctx.workprec():
            worst = max(worst, abs(a.value - b.value))
    elapsed = time.perf_counter() - t0
    ok = worst <= mpmath.mpf("1e-29") and elapsed < 60
    announce(
        4,
        ok,
        f"trial-method agreement across (w,tail) regimes: {mpmath.nstr(worst, 2)} "
        f"in {elapsed:.2f}s (want <= 1e-29, < 60 s)",
    )


def test_criterion_5_ten_places_cross_method():
    t0 = time.perf_counter()
    worst = mpmath.mpf(0)
    for k in range(5):
        for w in (2, 5, 17, 50):
            a = hurwitz_deriv(k, w, CTX20)
            b = hurwitz_deriv_integer(k, w, CTX20)
            with CTX20.workprec():
                rel = abs(a.value - b.value) / max(1, abs(b.value))
                worst = max(worst, rel)
    elapsed = time.perf_counter() - t0
    ok = worst <= mpmath.mpf("1e-10") and elapsed < 60
    announce(
        5,
        ok,
        f"asymptotic-shift vs exact-sum worst disagreement {mpmath.nstr(worst, 2)} "
        f"in {elapsed:.2f}s (want <= 1e-10, < 60 s)",
    )


def test_criterion_6_functional_equation():
    t0 = time.perf_counter()
    d = zeta_deriv_neg(2, CTX30)
    with CTX30.workprec():
        resid = abs(d.value + zeta_positive(3, CTX30) / (4 * mpmath.pi**2))
    elapsed = time.perf_counter() - t0
    ok = resid <= mpmath.mpf("1e-25") and elapsed < 10
    announce(
        6,
        ok,
        f"|zeta'(-2) + zeta(3)/(4 pi^2)| = {mpmath.nstr(resid, 2)} in {elapsed:.2f}s "
        f"(want <= 1e-25, < 10 s)",
    )


def test_criterion_7_adamchik_consistency():
    worst = mpmath.mpf(0)
    for k in range(7):
        limit_const = gkbj_auto(k, CTX20)
        d = zeta_deriv_neg(k, CTX20)
        with CTX20.workprec():
            zeta_neg = to_mpf(-bernoulli(k + 1) / (k + 1))
            resid = abs(limit_const.value + d.value + to_mpf(harmonic(k)) * zeta_neg)
            worst = max(worst, resid)
    ok = worst <= mpmath.mpf(10) ** -(CTX20.target_digits - 2)
    announce(
        7,
        ok,
        f"|L_k + zeta'(-k) + H_k zeta(-k)| worst {mpmath.nstr(worst, 2)} "
        f"for k = 0..6 (want <= 1e-18)",
    )


def test_criterion_8_full_identity_suite():
    t0 = time.perf_counter()
    reports = selftest("full", CTX20)
    elapsed = time.perf_counter() - t0
    failed = [r for r in reports if not r.passed]
    names = {r.name for r in reports}
    expected = {
        "bendersky-recursion",
        "alt-recursion",
        "alexeiewsky",
        "general-solution",
        "gint-moment",
        "gint-moment-gamma-variant",
        "jeffery-difference",
        "log-coefficient",
        "stabilization",
    }
    ok = not failed and expected <= names and elapsed < 300
    announce(
        8,
        ok,
        f"selftest full: {len(reports) - len(failed)}/{len(reports)} passed "
        f"in {elapsed:.1f}s (want all, < 300 s); failures: {[r.name for r in failed]}",
    )


def test_criterion_9_duplication_at_half():
    d = hurwitz_deriv(1, Fraction(1, 2), CTX20)
    base = zeta_deriv_neg(1, CTX20)
    with CTX20.workprec():
        oracle = -base.value / 2 - mpmath.log(2) / 24
        resid = abs(d.value - oracle)
    ok = resid <= mpmath.mpf("1e-15")
    announce(
        9,
        ok,
        f"|zeta'(-1, 1/2) - (-zeta'(-1)/2 - log(2)/24)| = {mpmath.nstr(resid, 2)} "
        f"(want <= 1e-15)",
    )
