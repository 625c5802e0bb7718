"""Generalized log-gamma: exact sums at integers, shifted asymptotics
for real arguments.

``log Gamma_k(w+1) = sum_{m=1}^w m^k log m`` at integers; the extension
to real arguments combines the limiting constant, the truncated
remainder series at a large shifted argument, and the product rule
``Gamma_k(t+1) = t^(t^k) Gamma_k(t)`` to undo the shift exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .asymptotic import DEFAULT_TAIL_TERMS, eval_lambda, shift_threshold
from .mpcore import DEFAULT_CONTEXT, PrecisionContext, Real, to_mpf

__all__ = ["GenGammaValue", "exact_log_gengamma", "shift_log_gengamma", "log_gengamma"]


@dataclass(frozen=True)
class GenGammaValue:
    """value = log Gamma_k(x), with an error estimate and the route taken."""

    k: int
    x: Real
    value: mpmath.mpf
    err: mpmath.mpf
    method: str


def _as_exact(x: Real):
    """Keep int/Fraction arguments exact; everything else becomes mpf."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return to_mpf(x)


def _is_integer(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return mpmath.isint(x)


def _pow_log_term(base, k: int) -> mpmath.mpf:
    """(base)^k * log(base), with the power exact for rational bases."""
    if isinstance(base, Fraction):
        return to_mpf(base**k) * mpmath.log(to_mpf(base))
    return base**k * mpmath.log(base)


def exact_log_gengamma(
    k: int, w: int, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> GenGammaValue:
    """log Gamma_k(w+1) as the exact sum of m^k log m, m = 1..w.

    Terms grow with m, so forward summation keeps the relative error of
    the working-precision accumulation bounded.  err is 0 up to rounding.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    if not isinstance(w, int) or w < 0:
        raise ValueError("upper limit must be a non-negative integer")
    with ctx.workprec(5):
        total = mpmath.mpf(0)
        for m in range(2, w + 1):  # m = 1 contributes nothing
            total += mpmath.mpf(m**k) * mpmath.log(m)
    return GenGammaValue(k=k, x=w + 1, value=total, err=mpmath.mpf(0), method="exact-sum")


def shift_log_gengamma(
    k: int,
    x: Real,
    n: int,
    value_at_shifted: Real,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> mpmath.mpf:
    """Bring log Gamma_k(x+n) down to log Gamma_k(x).

    Repeated application of the product rule removes one factor
    ``(x+j)^k log(x+j)`` per step; rational x keeps the removed powers
    exact.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    if n < 0:
        raise ValueError("shift count must be non-negative")
    xe = _as_exact(x)
    if not xe > 0:
        raise ValueError("argument must be positive")
    with ctx.workprec(5):
        total = to_mpf(value_at_shifted)
        for j in range(n):
            base = xe + j
            if base == 0:
                raise ValueError("shift chain crosses zero")
            total -= _pow_log_term(base, k)
        return total


def log_gengamma(
    k: int,
    x: Real,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    tail_terms: int | None = None,
    method: str = "auto",
) -> GenGammaValue:
    """log Gamma_k(x) for real x > 0.

    Integer arguments go through the exact sum.  Otherwise the argument
    is shifted up to the precision-dependent threshold, the limiting
    constant plus truncated series is evaluated there, and the shift is
    removed exactly.  ``method`` may force ``"exact"`` or
    ``"asymptotic"`` (the latter also works at integer arguments, which
    is how the two routes are cross-checked).
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    if method not in ("auto", "exact", "asymptotic"):
        raise ValueError(f"unknown method {method!r}")
    xe = _as_exact(x)
    if not xe > 0:
        raise ValueError("argument must be positive")
    is_int = _is_integer(xe)
    if method == "exact" or (method == "auto" and is_int):
        if not is_int:
            raise ValueError("exact summation needs an integer argument")
        return exact_log_gengamma(k, int(xe) - 1, ctx)

    from .constants import gkbj_auto  # deferred: constants builds on the exact sum

    terms = tail_terms if tail_terms is not None else DEFAULT_TAIL_TERMS
    threshold = shift_threshold(ctx)
    with ctx.workprec(5):
        n = max(0, math.ceil(threshold - xe) if isinstance(xe, Fraction) else int(mpmath.ceil(threshold - xe)))
        limit_const = gkbj_auto(k, ctx)
        lam = eval_lambda(k, xe + n - 1, terms, ctx)
        shifted = limit_const.value + lam.value
        value = shift_log_gengamma(k, xe, n, shifted, ctx)
        err = limit_const.err + lam.err + ctx.rounding_floor(abs(shifted))
    return GenGammaValue(k=k, x=xe, value=value, err=err, method="asymptotic-shift")
