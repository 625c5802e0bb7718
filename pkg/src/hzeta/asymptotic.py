"""Asymptotic expansions of the generalized log-gamma remainder.

``log Gamma_k(x+1)`` splits into a limiting constant plus a remainder
whose expansion has polynomial-and-log main terms and a divergent
inverse-power tail.  This module builds those expansions symbolically
with exact rational coefficients, evaluates them under optimal
truncation with an explicit error estimate, and integrates them
termwise (the ingredient of the order-raising recursion).

A :class:`TermPoly` is stored *as a polynomial in x* for the remainder
at argument ``x + 1``: evaluating the term list at ``x`` gives the
remainder of ``log Gamma_k`` at ``x + 1``.  Orders k >= 0 are the
generalized-gamma series proper; k = -1 and k = -2 are the classical
digamma/trigamma-type companions kept for validation.

Construction rules for the generic order-k series (k >= 1):

* the harmonic chain attached to the r-th binomial term is
  ``log x + H_k - H_{k-r}``;
* the chain attached to the ``x * B_k`` term is ``log x + H_k - 1``,
  and that whole term is dropped at k = 1 (keeping it with B_1 = -1/2
  contradicts the explicit low-order series);
* the inverse-power tail starts at s = 2 (the formal s = 1 term would
  carry (-1)! and is absent).

Each rule is pinned down by the stabilization cross-check against the
exact sums, which would detect any sign or offset slip immediately.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ArgumentTooSmall
from .mpcore import (
    DEFAULT_CONTEXT,
    PrecisionContext,
    Real,
    bernoulli,
    harmonic,
    register_cache_clearer,
    to_mpf,
)

__all__ = [
    "TermPoly",
    "LambdaValue",
    "build_lambda_terms",
    "eval_lambda",
    "eval_term_poly",
    "integrate_lambda_terms",
    "log_coefficient_poly",
    "shift_threshold",
    "DEFAULT_TAIL_TERMS",
]

DEFAULT_TAIL_TERMS = 20


@dataclass(frozen=True)
class TermPoly:
    """Symbolic expansion: main terms ``coeff * x^power * log(x)^{0,1}``
    plus a tail of ``coeff * x^(-inv_power)`` entries.

    No two main terms share a ``(power, has_log)`` key; tail entries are
    unique in ``inv_power`` and sorted by it.
    """

    k: int
    main_terms: tuple[tuple[Fraction, int, bool], ...]
    tail_terms: tuple[tuple[Fraction, int], ...]


@dataclass(frozen=True)
class LambdaValue:
    """A truncated-series evaluation together with its error estimate."""

    value: mpmath.mpf
    err: mpmath.mpf
    k: int
    x: Real
    tail_terms_used: int


def _merge_main(terms) -> tuple[tuple[Fraction, int, bool], ...]:
    acc: dict[tuple[int, bool], Fraction] = {}
    for c, p, has_log in terms:
        key = (p, has_log)
        acc[key] = acc.get(key, Fraction(0)) + c
    out = [(c, p, l) for (p, l), c in acc.items() if c]
    out.sort(key=lambda t: (-t[1], t[2]))
    return tuple(out)


def _merge_tail(terms) -> tuple[tuple[Fraction, int], ...]:
    acc: dict[int, Fraction] = {}
    for c, q in terms:
        acc[q] = acc.get(q, Fraction(0)) + c
    out = [(c, q) for q, c in acc.items() if c]
    out.sort(key=lambda t: t[1])
    return tuple(out)


def _main_terms_generic(k: int) -> list:
    terms = [
        (Fraction(1, k + 1), k + 1, True),
        (Fraction(-1, (k + 1) ** 2), k + 1, False),
        (Fraction(1, 2), k, True),
    ]
    hk = harmonic(k)
    kfac = math.factorial(k)
    for r in range(1, k - 1):
        c = kfac * bernoulli(r + 1) / (math.factorial(r + 1) * math.factorial(k - r))
        if c:
            terms.append((c, k - r, True))
            terms.append((c * (hk - harmonic(k - r)), k - r, False))
    if k >= 2:
        bk = bernoulli(k)
        if bk:
            terms.append((bk, 1, True))
            terms.append((bk * (hk - 1), 1, False))
    terms.append((bernoulli(k + 1) / (k + 1), 0, True))
    return terms


def _tail_generic(k: int, count: int) -> list:
    kfac = math.factorial(k)
    out = []
    s = 2
    while len(out) < count:
        b = bernoulli(k + s)
        if b:
            c = (-1) ** s * kfac * math.factorial(s - 2) * b / math.factorial(k + s)
            out.append((c, s - 1))
        s += 1
    return out


def _tail_digamma(count: int) -> list:
    # coefficient of x^(-j) is -B_j / j (B_1 = -1/2 gives the +1/(2x) lead)
    out = []
    j = 1
    while len(out) < count:
        b = bernoulli(j)
        if b:
            out.append((-b / j, j))
        j += 1
    return out


def _tail_trigamma(count: int) -> list:
    # coefficient of x^(-m) is -B_{m-1}
    out = []
    m = 1
    while len(out) < count:
        b = bernoulli(m - 1)
        if b:
            out.append((-b, m))
        m += 1
    return out


_TERMS_CACHE: dict[tuple[int, int], TermPoly] = {}
_TERMS_LOCK = threading.Lock()


@register_cache_clearer
def _clear_terms_cache() -> None:
    _TERMS_CACHE.clear()


def build_lambda_terms(k: int, tail_terms: int) -> TermPoly:
    """Symbolic remainder expansion of order k (argument ``x + 1``).

    ``tail_terms`` counts the nonzero inverse-power entries retained.
    """
    if k < -2:
        raise ValueError("expansion order must be >= -2")
    if tail_terms < 1:
        raise ValueError("tail_terms must be >= 1")
    key = (k, tail_terms)
    poly = _TERMS_CACHE.get(key)
    if poly is not None:
        return poly
    if k >= 1:
        main = _main_terms_generic(k)
        tail = _tail_generic(k, tail_terms)
    elif k == 0:
        main = [(Fraction(1), 1, True), (Fraction(1, 2), 0, True), (Fraction(-1), 1, False)]
        tail = _tail_generic(0, tail_terms)
    elif k == -1:
        main = [(Fraction(1), 0, True)]
        tail = _tail_digamma(tail_terms)
    else:
        main = []
        tail = _tail_trigamma(tail_terms)
    poly = TermPoly(k=k, main_terms=_merge_main(main), tail_terms=_merge_tail(tail))
    with _TERMS_LOCK:
        _TERMS_CACHE[key] = poly
    return poly


def eval_term_poly(
    poly: TermPoly,
    x: Real,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    *,
    reserve_last_tail: bool = False,
):
    """Numeric value of a term list at ``x`` plus an error estimate.

    The tail is summed in order under an optimal-truncation guard: once
    term magnitudes start growing, summation stops at the smallest term.
    The estimate is twice the first omitted tail term plus a rounding
    floor scaled by the largest intermediate.  With ``reserve_last_tail``
    the final tail entry is never summed and only feeds the estimate.

    Returns ``(value, err, tail_terms_used)``.
    """
    with ctx.workprec(5):
        xf = to_mpf(x)
        if xf <= 0:
            raise ValueError("term-poly argument must be positive")
        logx = mpmath.log(xf)
        total = mpmath.mpf(0)
        scale = mpmath.mpf(0)
        for c, p, has_log in poly.main_terms:
            term = to_mpf(c) * xf**p
            if has_log:
                term *= logx
            total += term
            scale += abs(term)
        n_avail = len(poly.tail_terms) - (1 if reserve_last_tail else 0)
        omitted = mpmath.mpf(0)
        prev_mag = None
        used = 0
        for i, (c, q) in enumerate(poly.tail_terms):
            term = to_mpf(c) / xf**q
            mag = abs(term)
            if i >= n_avail or (prev_mag is not None and mag >= prev_mag):
                omitted = mag
                break
            total += term
            scale += mag
            used += 1
            prev_mag = mag
        err = 2 * omitted + ctx.rounding_floor(scale)
        return total, err, used


def eval_lambda(
    k: int,
    x: Real,
    tail_terms: int = DEFAULT_TAIL_TERMS,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> LambdaValue:
    """Truncated order-k remainder at argument ``x + 1`` (pass x >= 1).

    Raises :class:`ArgumentTooSmall` when the truncation estimate
    exceeds one part in 10^3 of the value, signalling that the caller
    must shift the argument upward first.
    """
    if tail_terms < 1:
        raise ValueError("tail_terms must be >= 1")
    if not x >= 1:
        raise ValueError("series argument must be >= 1; shift first")
    poly = build_lambda_terms(k, tail_terms + 1)
    value, err, used = eval_term_poly(poly, x, ctx, reserve_last_tail=True)
    if err > mpmath.mpf("1e-3") * abs(value):
        raise ArgumentTooSmall(
            f"truncation error {mpmath.nstr(err, 3)} too large for order {k} at x={x}"
        )
    return LambdaValue(value=value, err=err, k=k, x=x, tail_terms_used=used)


def integrate_lambda_terms(poly: TermPoly) -> TermPoly:
    """Exact termwise antiderivative (integration constant 0).

    ``x^(-1)`` tail entries promote to log-x main terms.  The order
    bookkeeping advances by one so the result lines up with the
    next-order recursion.
    """
    main = []
    tail = []
    for c, p, has_log in poly.main_terms:
        if has_log:
            main.append((c / (p + 1), p + 1, True))
            main.append((-c / Fraction((p + 1) ** 2), p + 1, False))
        else:
            main.append((c / (p + 1), p + 1, False))
    for c, q in poly.tail_terms:
        if q == 1:
            main.append((c, 0, True))
        else:
            tail.append((-c / (q - 1), q - 1))
    return TermPoly(k=poly.k + 1, main_terms=_merge_main(main), tail_terms=_merge_tail(tail))


def log_coefficient_poly(k: int) -> list[Fraction]:
    """Coefficients, by ascending power, of the polynomial multiplying
    ``log x`` in the order-k expansion."""
    if k < 0:
        raise ValueError("order must be non-negative")
    poly = build_lambda_terms(k, 1)
    log_terms = [(c, p) for c, p, has_log in poly.main_terms if has_log]
    degree = max(p for _, p in log_terms)
    out = [Fraction(0)] * (degree + 1)
    for c, p in log_terms:
        out[p] += c
    return out


def shift_threshold(ctx: PrecisionContext = DEFAULT_CONTEXT) -> int:
    """Smallest argument at which the truncated series is trusted for
    this precision; smaller arguments must be shifted up."""
    return max(20, math.ceil(0.9 * ctx.target_digits))
