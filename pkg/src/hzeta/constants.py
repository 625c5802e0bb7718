"""Limiting constants of the generalized log-gamma expansions.

The order-k constant is the stabilized difference between the exact
product sum and the truncated remainder series at a large trial
argument (the classical trial method, made deterministic here by an
automatic parameter search).  Jeffery's summation constants and
Kinkelin's constant follow from them by fixed rational offsets.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp

from .asymptotic import build_lambda_terms, eval_lambda, shift_threshold
from .errors import ParameterSearchFailed
from .gengamma import exact_log_gengamma
from .mpcore import (
    DEFAULT_CONTEXT,
    PrecisionContext,
    bernoulli,
    harmonic,
    register_cache_clearer,
    to_mpf,
)

__all__ = ["ConstantRecord", "gkbj_constant", "gkbj_auto", "varpi", "kinkelin_logvarpi"]

_AUTO_TAIL_LADDER = (20, 40, 80, 120, 160, 200)
_MAX_TRIAL_W = 10**6

_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()


@register_cache_clearer
def _clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


@dataclass(frozen=True)
class ConstantRecord:
    """A computed constant with its error estimate and the parameters used."""

    kind: str  # "L" | "varpi" | "kinkelin"
    k: int
    value: mpmath.mpf
    err: mpmath.mpf
    w_used: int
    tail_terms_used: int


def gkbj_constant(
    k: int, w: int, tail_terms: int, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> ConstantRecord:
    """Order-k constant by the trial method at the given parameters.

    value = exact sum at w minus the truncated series at w; the error
    estimate is the series truncation bound plus a rounding allowance
    for the exact sum's magnitude.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    lam = eval_lambda(k, w, tail_terms, ctx)
    exact = exact_log_gengamma(k, w, ctx)
    with ctx.workprec():
        value = exact.value - lam.value
        err = lam.err + ctx.rounding_floor(abs(exact.value))
    return ConstantRecord(
        kind="L", k=k, value=value, err=err, w_used=w, tail_terms_used=lam.tail_terms_used
    )


def _truncation_estimate(k: int, w: int, tail_terms: int) -> mpmath.mpf:
    """Magnitude of the first omitted (or first diverging) tail term,
    computed cheaply at low precision."""
    poly = build_lambda_terms(k, tail_terms + 1)
    with mp.workdps(8):
        wf = mpmath.mpf(w)
        prev = None
        for i, (c, q) in enumerate(poly.tail_terms):
            mag = abs(to_mpf(c)) / wf**q
            if i >= tail_terms or (prev is not None and mag >= prev):
                return 2 * mag
            prev = mag
        return mpmath.mpf(0)


def gkbj_auto(k: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ConstantRecord:
    """Order-k constant with parameters chosen so err <= 10^-target.

    Results are memoized per (k, precision).  Raises
    :class:`ParameterSearchFailed` when no trial argument up to 10^6
    with at most 200 tail terms meets the bound.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    key = ("L", k, ctx.target_digits, ctx.working_digits)
    rec = _MEMO.get(key)
    if rec is not None:
        return rec
    with ctx.workprec():
        bound = mpmath.mpf(10) ** (-ctx.target_digits)
    w = shift_threshold(ctx)
    while w <= _MAX_TRIAL_W:
        for tail in _AUTO_TAIL_LADDER:
            if _truncation_estimate(k, w, tail) > bound / 4:
                continue
            rec = gkbj_constant(k, w, tail, ctx)
            if rec.err <= bound:
                with _MEMO_LOCK:
                    _MEMO[key] = rec
                return rec
            break  # bound missed on rounding, not truncation: retry larger w
        w *= 2
    raise ParameterSearchFailed(
        f"no (w <= {_MAX_TRIAL_W}, tail <= {_AUTO_TAIL_LADDER[-1]}) reaches "
        f"err <= 1e-{ctx.target_digits} for order {k}"
    )


def varpi(k: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ConstantRecord:
    """Jeffery's summation constants: the x = 0 slope of log Gamma_k(x+1).

    For k >= 2 this is H_k B_k - k L_{k-1}; odd k >= 3 has B_k = 0, so
    the B_1 sign convention never enters there.  k = 1 is special-cased
    to -L_0 - 1/2 (the value forced by Raabe's integral), sidestepping
    the convention clash a literal k = 1 instance of the formula has.
    """
    if k < 1:
        raise ValueError("summation constants start at k = 1")
    key = ("varpi", k, ctx.target_digits, ctx.working_digits)
    rec = _MEMO.get(key)
    if rec is not None:
        return rec
    if k == 1:
        base = gkbj_auto(0, ctx)
        with ctx.workprec():
            value = -base.value - mpmath.mpf(1) / 2
            err = base.err
    else:
        base = gkbj_auto(k - 1, ctx)
        with ctx.workprec():
            value = to_mpf(harmonic(k) * bernoulli(k)) - k * base.value
            err = k * base.err
    rec = ConstantRecord(
        kind="varpi",
        k=k,
        value=value,
        err=err,
        w_used=base.w_used,
        tail_terms_used=base.tail_terms_used,
    )
    with _MEMO_LOCK:
        _MEMO[key] = rec
    return rec


def kinkelin_logvarpi(ctx: PrecisionContext = DEFAULT_CONTEXT) -> ConstantRecord:
    """Kinkelin's constant log varpi = 2 L_1 - 1/6 (equivalently 1/12 - varpi(2))."""
    key = ("kinkelin", 1, ctx.target_digits, ctx.working_digits)
    rec = _MEMO.get(key)
    if rec is not None:
        return rec
    base = gkbj_auto(1, ctx)
    with ctx.workprec():
        value = 2 * base.value - to_mpf(Fraction(1, 6))
        err = 2 * base.err
    rec = ConstantRecord(
        kind="kinkelin",
        k=1,
        value=value,
        err=err,
        w_used=base.w_used,
        tail_terms_used=base.tail_terms_used,
    )
    with _MEMO_LOCK:
        _MEMO[key] = rec
    return rec
