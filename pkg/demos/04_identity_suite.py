"""Run the built-in cross-validation suite and show the reports.

Every identity the package relies on is checked against an independent
route: termwise integration against the next-order series, quadrature
against closed forms, exact sums against shifted asymptotics.  Each
report carries the residual and the tolerance assembled from the error
estimates of its ingredients.

Run:  python demos/04_identity_suite.py [quick|full]
"""

import sys

import mpmath

from hzeta import PrecisionContext, selftest

level = sys.argv[1] if len(sys.argv) > 1 else "full"
ctx = PrecisionContext(target_digits=20)

print(f"identity suite, level={level}, {ctx.target_digits} target digits")
print("-" * 72)
reports = selftest(level, ctx)
for rep in reports:
    where = ""
    if rep.k is not None:
        where += f" k={rep.k}"
    if rep.x_or_w is not None:
        where += f" x={rep.x_or_w}"
    flag = "ok " if rep.passed else "FAIL"
    print(f"{flag} {rep.name:<28}{where:<12} residual {mpmath.nstr(rep.residual, 2):>10}"
          f"   tol {mpmath.nstr(rep.tolerance, 2):>10}   {rep.elapsed:6.2f}s")

failed = [r for r in reports if not r.passed]
print("-" * 72)
print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
sys.exit(1 if failed else 0)
