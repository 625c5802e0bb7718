from fractions import Fraction

import mpmath
import pytest

from hzeta import PrecisionContext


@pytest.fixture(scope="session")
def ctx20():
    return PrecisionContext(target_digits=20)


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(target_digits=30)


@pytest.fixture()
def hidps():
    """Run a block at 60 decimal digits (for parsing reference strings)."""
    with mpmath.mp.workdps(60):
        yield


def frac(p, q=1):
    return Fraction(p, q)
