"""Derivatives of the Hurwitz zeta function at negative integers.

zeta'(-k, w) decomposes into a rational head, the limiting constant,
and the generalized log-gamma: integer offsets get the exact product
sum, real offsets the shifted asymptotic series.  Both routes are shown
here, together with two classical identities that pin the values down
independently.

Run:  python demos/02_hurwitz_derivatives.py
"""

from fractions import Fraction

import mpmath

from hzeta import (
    PrecisionContext,
    hurwitz_deriv,
    hurwitz_deriv_integer,
    zeta_deriv_neg,
    zeta_positive,
)

ctx = PrecisionContext(target_digits=25)

print("zeta'(-k) for k = 0..6 at 25 digits")
print("-" * 66)
for k in range(7):
    d = zeta_deriv_neg(k, ctx)
    print(f"zeta'(-{k}) = {mpmath.nstr(d.value, 25, strip_zeros=False)}"
          f"   (err <= {mpmath.nstr(d.err, 2)})")

print()
print("Functional-equation cross-check at even order:")
print("  zeta'(-2) must equal -zeta(3)/(4 pi^2)")
print("-" * 66)
d2 = zeta_deriv_neg(2, ctx)
with ctx.workprec():
    other_route = -zeta_positive(3, ctx) / (4 * mpmath.pi**2)
    print("series route     :", mpmath.nstr(d2.value, 25))
    print("zeta(3) route    :", mpmath.nstr(other_route, 25))
    print("difference       :", mpmath.nstr(abs(d2.value - other_route), 2))

print()
print("Integer offsets: exact-sum route vs the shifted series")
print("-" * 66)
for k, w in ((0, 5), (2, 7), (4, 17)):
    exact = hurwitz_deriv_integer(k, w, ctx)
    asym = hurwitz_deriv(k, w, ctx)
    with ctx.workprec():
        diff = abs(exact.value - asym.value)
    print(f"zeta'(-{k}, {w:2d}) = {mpmath.nstr(exact.value, 25, strip_zeros=False)}"
          f"   routes differ by {mpmath.nstr(diff, 2)}")

print()
print("A non-integer offset, pinned by the duplication identity")
print("  zeta(s, 1/2) = (2^s - 1) zeta(s)  =>")
print("  zeta'(-1, 1/2) = -zeta'(-1)/2 - log(2)/24")
print("-" * 66)
d = hurwitz_deriv(1, Fraction(1, 2), ctx)
base = zeta_deriv_neg(1, ctx)
with ctx.workprec():
    oracle = -base.value / 2 - mpmath.log(2) / 24
    print("shifted series   :", mpmath.nstr(d.value, 25))
    print("duplication form :", mpmath.nstr(oracle, 25))
    print("difference       :", mpmath.nstr(abs(d.value - oracle), 2))
