"""Derivatives of the Hurwitz zeta function at negative integer order.

Normalization: the second argument is the offset of the defining sum,
so the w = 1 value is the Riemann-zeta derivative zeta'(-k).  Two
routes are provided: the exact product sum (integer w) and the shifted
truncated series (any real w > 0); their agreement is one of the
package's standing cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .asymptotic import DEFAULT_TAIL_TERMS, eval_lambda, shift_threshold
from .constants import gkbj_auto
from .gengamma import _as_exact, exact_log_gengamma, shift_log_gengamma
from .mpcore import DEFAULT_CONTEXT, PrecisionContext, Real, bernoulli, harmonic, to_mpf

__all__ = ["DerivResult", "zeta_deriv_neg", "hurwitz_deriv_integer", "hurwitz_deriv"]


@dataclass(frozen=True)
class DerivResult:
    """value = zeta'(-k, w), with error estimate and the route taken."""

    k: int
    w: Real
    value: mpmath.mpf
    err: mpmath.mpf
    method: str


def _head_fraction(k: int) -> Fraction:
    return harmonic(k) * bernoulli(k + 1) / (k + 1)


def zeta_deriv_neg(k: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> DerivResult:
    """zeta'(-k) = H_k B_{k+1}/(k+1) - L_k, with L_k auto-computed."""
    if k < 0:
        raise ValueError("order must be non-negative")
    limit_const = gkbj_auto(k, ctx)
    with ctx.workprec():
        value = to_mpf(_head_fraction(k)) - limit_const.value
    return DerivResult(k=k, w=1, value=value, err=limit_const.err, method="exact-sum")


def hurwitz_deriv_integer(
    k: int, w: int, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> DerivResult:
    """zeta'(-k, w) for integer w >= 1: zeta'(-k) plus the exact sum for
    log Gamma_k(w)."""
    if not isinstance(w, int) or w < 1:
        raise ValueError("offset must be a positive integer")
    base = zeta_deriv_neg(k, ctx)
    gamma_part = exact_log_gengamma(k, w - 1, ctx)
    with ctx.workprec():
        value = base.value + gamma_part.value
        err = base.err + ctx.rounding_floor(abs(gamma_part.value))
    return DerivResult(k=k, w=w, value=value, err=err, method="exact-sum")


def hurwitz_deriv(
    k: int,
    w: Real,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    tail_terms: int | None = None,
) -> DerivResult:
    """zeta'(-k, w) for real w > 0 by the shifted-series route.

    The value at the shifted offset w + n (n integral, chosen so w + n
    clears the asymptotic threshold) is H_k B_{k+1}/(k+1) plus the
    remainder series; the shift is then removed exactly, one factor
    (w+j)^k log(w+j) per step.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    we = _as_exact(w)
    if not we > 0:
        raise ValueError("offset must be positive")
    terms = tail_terms if tail_terms is not None else DEFAULT_TAIL_TERMS
    threshold = shift_threshold(ctx)
    with ctx.workprec(5):
        if isinstance(we, Fraction):
            n = max(0, math.ceil(threshold - we))
        else:
            n = max(0, int(mpmath.ceil(threshold - we)))
        lam = eval_lambda(k, we + n - 1, terms, ctx)
        shifted = to_mpf(_head_fraction(k)) + lam.value
        value = shift_log_gengamma(k, we, n, shifted, ctx)
        err = lam.err + ctx.rounding_floor(abs(shifted))
    return DerivResult(k=k, w=we, value=value, err=err, method="asymptotic-shift")
