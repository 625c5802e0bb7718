"""Precision plumbing and exact rational combinatorics.

Every numeric operation in the package funnels through a
:class:`PrecisionContext`: work happens at ``target + guard`` decimal
digits and results are reported to ``target`` digits.  Combinatorial
quantities (Bernoulli numbers and polynomials, harmonic numbers, power
sums) stay exact rationals until the final conversion to a big float,
so the signs and coefficients of the divergent series downstream are
never perturbed by rounding.

Convention: B_1 = -1/2 throughout.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import mpmath
from mpmath import mp

Real = Union[int, Fraction, float, mpmath.mpf]

__all__ = [
    "PrecisionContext",
    "DEFAULT_CONTEXT",
    "to_mpf",
    "bernoulli",
    "bernoulli_poly",
    "phi",
    "harmonic",
    "clear_caches",
    "register_cache_clearer",
]


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output precision plus guard digits for internal work."""

    target_digits: int = 20
    guard_digits: int = 15

    def __post_init__(self) -> None:
        if self.target_digits < 1:
            raise ValueError("target_digits must be a positive integer")
        if self.guard_digits < 1:
            raise ValueError("guard_digits must be a positive integer")

    @property
    def working_digits(self) -> int:
        # never drops below target + 10, whatever the guard setting
        return self.target_digits + max(self.guard_digits, 10)

    def workprec(self, extra: int = 0):
        """mpmath context manager running at working precision (+ extra)."""
        return mp.workdps(self.working_digits + extra)

    def rounding_floor(self, scale) -> mpmath.mpf:
        """Absolute rounding allowance for a computation of the given magnitude."""
        return abs(scale) * mpmath.mpf(10) ** (-(self.working_digits - 2))

    def mpf(self, x: Real) -> mpmath.mpf:
        """Convert ``x`` to a big float at this context's working precision."""
        with self.workprec():
            return to_mpf(x)


DEFAULT_CONTEXT = PrecisionContext()


def to_mpf(x: Real) -> mpmath.mpf:
    """Convert to mpf at the ambient mpmath precision.

    Fractions are converted by a single exact-integer division so the
    result is correctly rounded.
    """
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


# ---------------------------------------------------------------------------
# exact combinatorics


class BernoulliCache:
    """Growable table of exact Bernoulli numbers (B_1 = -1/2).

    Extension appends only, so previously returned values never change;
    the lock makes concurrent growth safe.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        if n >= len(self._values):
            with self._lock:
                self._grow(n)
        return self._values[n]

    def _grow(self, n: int) -> None:
        values = self._values
        while len(values) <= n:
            m = len(values)
            if m % 2 and m > 1:
                values.append(Fraction(0))
                continue
            # defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0
            acc = Fraction(0)
            for j in range(m):
                if values[j]:
                    acc += math.comb(m + 1, j) * values[j]
            values.append(-acc / (m + 1))


_BERNOULLI = BernoulliCache()
_HARMONIC: list[Fraction] = [Fraction(0)]
_HARMONIC_LOCK = threading.Lock()

_CACHE_CLEARERS: list[Callable[[], None]] = []


def register_cache_clearer(fn: Callable[[], None]) -> Callable[[], None]:
    """Register a callback run by :func:`clear_caches` (internal use)."""
    _CACHE_CLEARERS.append(fn)
    return fn


def clear_caches() -> None:
    """Reset every internal memo table (Bernoulli, harmonic, series, constants)."""
    global _BERNOULLI
    _BERNOULLI = BernoulliCache()
    del _HARMONIC[1:]
    for fn in _CACHE_CLEARERS:
        fn()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n, cached."""
    return _BERNOULLI.get(n)


def bernoulli_poly(n: int, x: Real):
    """Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^(n-j).

    Exact Fraction for int/Fraction arguments; big float (at the ambient
    mpmath precision) otherwise.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if isinstance(x, (int, Fraction)):
        xq = Fraction(x)
        acc = Fraction(0)
        for j in range(n + 1):
            b = bernoulli(j)
            if b:
                acc += math.comb(n, j) * b * xq ** (n - j)
        return acc
    xf = to_mpf(x)
    acc = mpmath.mpf(0)
    for j in range(n + 1):
        b = bernoulli(j)
        if b:
            acc += to_mpf(math.comb(n, j) * b) * xf ** (n - j)
    return acc


def phi(n: int, x: Real):
    """Power-sum polynomial (B_{n+1}(x) - B_{n+1}) / (n+1).

    At integer x >= 1 this equals sum_{i=1}^{x-1} i^n, exactly.
    """
    if n < 1:
        raise ValueError("power-sum order must be >= 1")
    b = bernoulli(n + 1)
    if isinstance(x, (int, Fraction)):
        return (bernoulli_poly(n + 1, x) - b) / (n + 1)
    return (bernoulli_poly(n + 1, x) - to_mpf(b)) / (n + 1)


def harmonic(n: int) -> Fraction:
    """Exact harmonic number H_n = 1 + 1/2 + ... + 1/n (H_0 = 0), cached."""
    if n < 0:
        raise ValueError("harmonic index must be non-negative")
    if n >= len(_HARMONIC):
        with _HARMONIC_LOCK:
            while len(_HARMONIC) <= n:
                i = len(_HARMONIC)
                _HARMONIC.append(_HARMONIC[i - 1] + Fraction(1, i))
    return _HARMONIC[n]
